"""Fibonacci words and machine checks of their net-frequency structure.

F_1 = b, F_2 = a, F_i = F_{i-1} F_{i-2}. For i >= 7, inside the text F_i:

* F_{i-2} is a border and a square, and has at least one net occurrence;
* S_i (F_{i-1} minus its last two letters) equals F_{i-2} Q_i and has at
  least two net occurrences, where Q_i = F_{i-5} F_{i-6} ... F_3 F_2;
* F_{i-3} = Q_i D(1 - i mod 2) and F_{i-5} F_{i-4} = Q_i D(i mod 2), with
  D(0) = "ba" and D(1) = "ab".
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache

from .crl import build_crl
from .errors import OutOfRange
from .nf_all import all_nf_extract_traverse
from .nf_query import single_nf_crl
from .suffix_index import build_index
from .text import load_text

MAX_INDEX = 40
MAX_VERIFY = 30


@dataclass(frozen=True)
class FibWord:
    index: int
    content: bytes

    def __len__(self) -> int:
        return len(self.content)


@lru_cache(maxsize=None)
def fib_number(i: int) -> int:
    if i < 1:
        raise OutOfRange(f"Fibonacci index must be >= 1, got {i}")
    a, b = 1, 1
    for _ in range(i - 1):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def _fib_content(i: int) -> bytes:
    prev, cur = b"b", b"a"
    if i == 1:
        return prev
    for _ in range(i - 2):
        prev, cur = cur, cur + prev
    return cur


def fib_word(i: int) -> FibWord:
    if not 1 <= i <= MAX_INDEX:
        raise OutOfRange(f"Fibonacci index {i} outside [1, {MAX_INDEX}]")
    return FibWord(i, _fib_content(i))


def q_word(i: int) -> bytes:
    if not 7 <= i <= MAX_INDEX:
        raise OutOfRange(f"Q_i needs 7 <= i <= {MAX_INDEX}, got {i}")
    return b"".join(_fib_content(j) for j in range(i - 5, 1, -1))


def delta_word(j: int) -> bytes:
    if j == 0:
        return b"ba"
    if j == 1:
        return b"ab"
    raise OutOfRange(f"delta index must be 0 or 1, got {j}")


def s_word(i: int) -> bytes:
    if not 7 <= i <= MAX_INDEX:
        raise OutOfRange(f"S_i needs 7 <= i <= {MAX_INDEX}, got {i}")
    s = _fib_content(i - 1)[:-2]
    assert s == _fib_content(i - 2) + q_word(i)
    return s


@dataclass
class FibVerification:
    index: int
    length: int
    border: bool
    square: bool
    lemma_first: bool
    lemma_second: bool
    nf_f_minus_2: int | None = None
    nf_s: int | None = None
    net_occurrences: int | None = None
    distinct_strings: int | None = None
    big_n: int | None = None
    big_l: int | None = None
    exactly_three: bool | None = None

    @property
    def theorems_hold(self) -> bool:
        ok = self.border and self.square and self.lemma_first and self.lemma_second
        if self.nf_f_minus_2 is not None:
            ok = ok and self.nf_f_minus_2 >= 1 and self.nf_s >= 2
            ok = ok and self.big_n >= fib_number(self.index) - 2
            ok = ok and self.big_l >= fib_number(self.index) + fib_number(self.index - 2) - 2
        return ok

    def to_json(self) -> dict:
        out = asdict(self)
        out["theorems_hold"] = self.theorems_hold
        return out


def verify_fibonacci_theorems(i: int, with_index: bool = True) -> FibVerification:
    """Check the string identities for F_i and, with ``with_index``, its NF claims.

    The "exactly three net occurrences" observation is recorded in
    ``exactly_three`` but never treated as a failure.
    """
    if not 7 <= i <= MAX_VERIFY:
        raise OutOfRange(f"verification needs 7 <= i <= {MAX_VERIFY}, got {i}")
    fi = _fib_content(i)
    f2 = _fib_content(i - 2)
    q = q_word(i)
    record = FibVerification(
        index=i,
        length=len(fi),
        border=fi.startswith(f2) and fi.endswith(f2) and f2 != fi,
        square=(f2 + f2) in fi,
        lemma_first=_fib_content(i - 3) == q + delta_word(1 - i % 2),
        lemma_second=_fib_content(i - 5) + _fib_content(i - 4) == q + delta_word(i % 2),
    )
    if not with_index:
        return record
    s = s_word(i)
    t = load_text(fi)
    idx = build_index(t)
    crl = build_crl(idx)
    record.nf_f_minus_2 = single_nf_crl(idx, crl, t, f2)
    record.nf_s = single_nf_crl(idx, crl, t, s)
    extracted = all_nf_extract_traverse(idx, t)
    record.net_occurrences = sum(extracted.values())
    record.distinct_strings = len(extracted)
    record.big_n = sum(len(k) for k in extracted)
    record.big_l = sum(len(k) * v for k, v in extracted.items())
    record.exactly_three = dict(extracted) == {f2: 1, s: 2}
    return record
