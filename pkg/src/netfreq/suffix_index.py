"""Augmented suffix array: SA, ISA, LCP, BWT and LF over a sentinel-terminated text.

Every array is 1-based. Slot 0 is padding (always 0) so that ``sa[i]`` is the
text position of the i-th smallest suffix exactly as written in the
literature, and ``lcp`` carries one extra trailing slot so ``lcp[n + 1] == 0``.
"""

from __future__ import annotations

import io
import struct
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import BinaryIO

import numpy as np

from .errors import IndexFormatError, OutOfBounds
from .text import Text

MAGIC = b"NFIX1"


def position_dtype(n: int) -> type[np.signedinteger]:
    return np.int32 if n < 2**31 - 1 else np.int64


@dataclass(frozen=True, slots=True)
class SaInterval:
    """Closed row range ``<lo, hi>``; empty when ``hi < lo``.

    For an absent pattern ``lo`` is the row where it would be inserted.
    """

    lo: int
    hi: int

    @property
    def empty(self) -> bool:
        return self.hi < self.lo

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def __bool__(self) -> bool:
        return self.hi >= self.lo

    def rows(self) -> range:
        return range(self.lo, self.hi + 1)


@dataclass(eq=False)
class SuffixIndex:
    n: int
    sigma: int
    sa: np.ndarray
    isa: np.ndarray
    lcp: np.ndarray
    bwt: np.ndarray
    lf: np.ndarray

    # memoryviews index ~3x faster than numpy scalars from Python loops
    @cached_property
    def sa_view(self) -> memoryview:
        return memoryview(self.sa)

    @cached_property
    def lcp_view(self) -> memoryview:
        return memoryview(self.lcp)

    @cached_property
    def lf_view(self) -> memoryview:
        return memoryview(self.lf)

    @cached_property
    def bwt_bytes(self) -> bytes:
        return self.bwt[1:].tobytes()

    def ell_array(self) -> np.ndarray:
        """``ell`` for rows 1..n as a 0-based array (row i at offset i-1)."""
        return np.maximum(self.lcp[1 : self.n + 1], self.lcp[2 : self.n + 2])


def suffix_array(data: bytes) -> np.ndarray:
    """0-based suffix array of ``data`` by prefix doubling on numpy ranks.

    ``data`` must end with a unique smallest byte; O(n log n) per round,
    ceil(log2(max LCP)) + 1 rounds.
    """
    n = len(data)
    if n == 1:
        return np.zeros(1, dtype=np.int64)
    rank = np.frombuffer(data, dtype=np.uint8).astype(np.int32)
    k = 1
    while True:
        # second key lies in [0, max rank + 1]
        key = rank.astype(np.int64) * (int(rank.max()) + 2)
        key[: n - k] += rank[k:] + 1
        sa = np.argsort(key)
        sorted_keys = key[sa]
        del key
        new = np.empty(n, dtype=np.int32)
        new[0] = 0
        np.cumsum(sorted_keys[1:] != sorted_keys[:-1], out=new[1:])
        del sorted_keys
        rank = np.empty(n, dtype=np.int32)
        rank[sa] = new
        if new[-1] == n - 1:
            return sa
        k *= 2


def lcp_kasai(data: bytes, sa: np.ndarray, isa: np.ndarray) -> np.ndarray:
    """Kasai et al. over 1-based ``sa``/``isa``; returns lcp with lcp[1] = lcp[n+1] = 0."""
    n = len(data)
    lcp = np.zeros(n + 2, dtype=sa.dtype)
    sav, isav, out = memoryview(sa), memoryview(isa), memoryview(lcp)
    h = 0
    for p in range(1, n + 1):
        i = isav[p]
        if i > 1:
            q = sav[i - 1]
            # the unique sentinel stops the scan before either suffix runs out
            while data[p - 1 + h] == data[q - 1 + h]:
                h += 1
            out[i] = h
            if h:
                h -= 1
        else:
            h = 0
    return lcp


def build_index(t: Text) -> SuffixIndex:
    data = t.data
    n = t.n
    dtype = position_dtype(n + 2)
    sa = np.zeros(n + 1, dtype=dtype)
    sa[1:] = suffix_array(data) + 1
    isa = np.zeros(n + 1, dtype=dtype)
    isa[sa[1:]] = np.arange(1, n + 1, dtype=dtype)
    lcp = lcp_kasai(data, sa, isa)
    text = np.frombuffer(data, dtype=np.uint8)
    bwt = np.zeros(n + 1, dtype=np.uint8)
    # sa == 1 wraps to text[-1], the sentinel
    bwt[1:] = text[sa[1:] - 2]
    lf = np.zeros(n + 1, dtype=dtype)
    lf[1:] = isa[sa[1:] - 1]
    lf[1:][sa[1:] == 1] = 1
    sigma = int(np.count_nonzero(np.bincount(text, minlength=256)))
    return SuffixIndex(n=n, sigma=sigma, sa=sa, isa=isa, lcp=lcp, bwt=bwt, lf=lf)


def ell(idx: SuffixIndex, i: int) -> int:
    """Longest repeated prefix length of the suffix at row ``i``."""
    if not 1 <= i <= idx.n:
        raise OutOfBounds(f"row {i} outside [1, {idx.n}]")
    lcp = idx.lcp_view
    a, b = lcp[i], lcp[i + 1]
    return a if a > b else b


def sa_interval(idx: SuffixIndex, t: Text, pattern: bytes) -> SaInterval:
    """Binary search for the rows whose suffixes start with ``pattern``: O(m log n)."""
    data = t.data
    m = len(pattern)

    def prefix(p: int) -> bytes:
        return data[p - 1 : p - 1 + m]

    lo = bisect_left(idx.sa_view, pattern, 1, idx.n + 1, key=prefix)
    hi = bisect_right(idx.sa_view, pattern, lo, idx.n + 1, key=prefix)
    return SaInterval(lo, hi - 1)


def frequency(idx: SuffixIndex, t: Text, pattern: bytes) -> int:
    return len(sa_interval(idx, t, pattern))


def text_from_index(idx: SuffixIndex) -> Text:
    """Invert the BWT: T[sa[i] - 1] = bwt[i]."""
    data = np.empty(idx.n, dtype=np.uint8)
    data[idx.sa[1:] - 2] = idx.bwt[1:]
    return Text(data.tobytes())


def save_index(idx: SuffixIndex, dest: str | Path | BinaryIO) -> None:
    """Write the NFIX1 format: magic, n, sa, isa, lcp (n+1 cells), lf, bwt."""
    if isinstance(dest, (str, Path)):
        with open(dest, "wb") as fh:
            save_index(idx, fh)
        return
    n = idx.n
    dest.write(MAGIC)
    dest.write(struct.pack("<Q", n))
    for arr in (idx.sa[1:], idx.isa[1:], idx.lcp[1 : n + 2], idx.lf[1:]):
        dest.write(np.ascontiguousarray(arr, dtype="<i8").tobytes())
    dest.write(idx.bwt[1:].tobytes())


def load_index(src: str | Path | BinaryIO | bytes, validate: bool = False) -> SuffixIndex:
    if isinstance(src, (str, Path)):
        with open(src, "rb") as fh:
            return load_index(fh, validate)
    if isinstance(src, bytes):
        src = io.BytesIO(src)
    head = src.read(len(MAGIC) + 8)
    if len(head) < len(MAGIC) + 8 or head[: len(MAGIC)] != MAGIC:
        raise IndexFormatError("bad magic: not an NFIX1 index")
    (n,) = struct.unpack("<Q", head[len(MAGIC) :])
    if n < 1:
        raise IndexFormatError("index length must be positive")
    dtype = position_dtype(n + 2)

    def read_array(cells: int) -> np.ndarray:
        raw = src.read(8 * cells)
        if len(raw) != 8 * cells:
            raise IndexFormatError("truncated index file")
        return np.frombuffer(raw, dtype="<i8").astype(dtype)

    def padded(arr: np.ndarray) -> np.ndarray:
        out = np.zeros(len(arr) + 1, dtype=dtype)
        out[1 : len(arr) + 1] = arr
        return out

    sa = padded(read_array(n))
    isa = padded(read_array(n))
    lcp = padded(read_array(n + 1))
    lf = padded(read_array(n))
    raw_bwt = src.read(n)
    if len(raw_bwt) != n:
        raise IndexFormatError("truncated index file")
    bwt = np.zeros(n + 1, dtype=np.uint8)
    bwt[1:] = np.frombuffer(raw_bwt, dtype=np.uint8)
    sigma = int(np.count_nonzero(np.bincount(bwt[1:], minlength=256)))
    idx = SuffixIndex(n=n, sigma=sigma, sa=sa, isa=isa, lcp=lcp, bwt=bwt, lf=lf)
    if validate:
        validate_index(idx)
    return idx


def validate_index(idx: SuffixIndex) -> None:
    """Check the permutation invariants that a corrupted file would break."""
    n = idx.n
    rows = np.arange(1, n + 1)
    if not (np.array_equal(np.sort(idx.sa[1:]), rows) and np.array_equal(idx.isa[idx.sa[1:]], rows)):
        raise IndexFormatError("sa/isa are not inverse permutations of [1..n]")
    if idx.sa[1] != n or idx.lcp[1] != 0 or idx.lcp[n + 1] != 0:
        raise IndexFormatError("boundary conventions violated")
    if not np.array_equal(np.sort(idx.lf[1:]), rows):
        raise IndexFormatError("lf is not a permutation of [1..n]")
