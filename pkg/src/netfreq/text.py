"""Sentinel-terminated texts and 1-based references into them."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import OutOfBounds, SentinelCollision

SENTINEL = 0


@dataclass(frozen=True, slots=True)
class Text:
    """An immutable byte text whose last byte is the unique sentinel 0x00.

    Positions are 1-based: ``t[1]`` is the first byte and ``t[t.n]`` the
    sentinel. ``data`` is the raw ``bytes`` object (0-based, as Python sees it).
    """

    data: bytes

    def __post_init__(self) -> None:
        if not self.data or self.data[-1] != SENTINEL:
            raise SentinelCollision("text must end with the sentinel byte")
        if self.data.find(SENTINEL) != len(self.data) - 1:
            raise SentinelCollision("sentinel byte occurs before the end of the text")

    @property
    def n(self) -> int:
        return len(self.data)

    @property
    def sigma(self) -> int:
        """Number of distinct byte values, sentinel included."""
        return len(set(self.data))

    @property
    def raw(self) -> bytes:
        """The text without its sentinel."""
        return self.data[:-1]

    def __len__(self) -> int:
        return len(self.data)

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= len(self.data):
            raise OutOfBounds(f"position {i} outside [1, {len(self.data)}]")
        return self.data[i - 1]


@dataclass(frozen=True, slots=True)
class Span:
    """Reference to ``T[start .. start+length-1]``."""

    start: int
    length: int


@dataclass(frozen=True, slots=True)
class Occurrence:
    """Inclusive pair of text positions ``(start, end)``."""

    start: int
    end: int

    @property
    def span(self) -> Span:
        return Span(self.start, self.end - self.start + 1)


def load_text(raw: bytes | bytearray | memoryview) -> Text:
    """Append the sentinel to ``raw``; reject inputs that already contain it."""
    raw = bytes(raw)
    pos = raw.find(SENTINEL)
    if pos >= 0:
        raise SentinelCollision(f"sentinel collision: byte 0x00 at offset {pos}")
    return Text(raw + b"\x00")


def read_text(path: str | Path) -> Text:
    """Load a file as bytes, untouched (trailing newlines are kept)."""
    return load_text(Path(path).read_bytes())


def substring(t: Text, s: Span) -> bytes:
    if s.length < 0 or s.start < 1 or s.start + s.length - 1 > t.n:
        raise OutOfBounds(f"span ({s.start}, {s.length}) outside text of length {t.n}")
    return t.data[s.start - 1 : s.start - 1 + s.length]
