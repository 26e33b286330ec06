"""Net frequency of a single query string.

Three interchangeable strategies:

* ``crl`` examines only one row per distinct left-extension character,
  located by coloured range listing over the BWT: O(m log n + sigma).
* ``asa`` examines every row of the query's SA interval: O(m log n + f).
* ``hsa`` is the hash-counting baseline: it tallies left, right and
  bidirectional extension characters over the interval and counts pairs
  whose left and right extensions are both unique.

All three return 0 for absent and unique patterns.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Callable

from .crl import CrlIndex, list_distinct
from .errors import OutOfBounds
from .suffix_index import SuffixIndex, sa_interval
from .text import SENTINEL, Text


def is_net_occurrence(idx: SuffixIndex, i: int, m: int) -> bool:
    """Whether the length-``m`` occurrence starting at ``sa[i]`` is a net occurrence.

    True iff ``m == ell(i)`` (repeated, unique right extension) and
    ``m >= ell(lf[i])`` (unique left extension).
    """
    if not 1 <= i <= idx.n:
        raise OutOfBounds(f"row {i} outside [1, {idx.n}]")
    lcp = idx.lcp_view
    a, b = lcp[i], lcp[i + 1]
    if m != (a if a > b else b):
        return False
    j = idx.lf_view[i]
    return m >= lcp[j] and m >= lcp[j + 1]


def single_nf_crl(idx: SuffixIndex, crl: CrlIndex, t: Text, pattern: bytes) -> int:
    interval = sa_interval(idx, t, pattern)
    if len(interval) < 2:
        return 0
    rows = list_distinct(crl, interval.lo, interval.hi)
    assert len(rows) <= min(idx.sigma, len(interval))
    m = len(pattern)
    return sum(1 for i in rows if is_net_occurrence(idx, i, m))


def single_nf_asa(idx: SuffixIndex, t: Text, pattern: bytes) -> int:
    interval = sa_interval(idx, t, pattern)
    if len(interval) < 2:
        return 0
    m = len(pattern)
    lcp = idx.lcp_view
    lf = idx.lf_view
    phi = 0
    # inlined is_net_occurrence: this loop is the f-proportional cost
    for i in interval.rows():
        a, b = lcp[i], lcp[i + 1]
        if m == (a if a > b else b):
            j = lf[i]
            if m >= lcp[j] and m >= lcp[j + 1]:
                phi += 1
    return phi


def extension_frequencies(idx: SuffixIndex, t: Text, pattern: bytes):
    """Left, right and pair extension counts over the SA interval of ``pattern``."""
    data = t.data
    sa = idx.sa_view
    m = len(pattern)
    left: defaultdict[int, int] = defaultdict(int)
    right: defaultdict[int, int] = defaultdict(int)
    both: defaultdict[tuple[int, int], int] = defaultdict(int)
    for i in sa_interval(idx, t, pattern).rows():
        p = sa[i]
        x = data[p - 2] if p > 1 else SENTINEL
        y = data[p - 1 + m]
        left[x] += 1
        right[y] += 1
        both[x, y] += 1
    return left, right, both


def single_nf_hsa(idx: SuffixIndex, t: Text, pattern: bytes) -> int:
    left, right, both = extension_frequencies(idx, t, pattern)
    if sum(left.values()) < 2:
        return 0
    return sum(1 for x, y in both if left[x] == 1 and right[y] == 1)


STRATEGIES = ("crl", "asa", "hsa")


def nf_function(algo: str, idx: SuffixIndex, t: Text, crl: CrlIndex | None = None) -> Callable[[bytes], int]:
    """Bind a strategy to an index so callers can time ``fn(pattern)`` alone."""
    if algo == "crl":
        if crl is None:
            raise ValueError("the crl strategy needs a CrlIndex")
        return lambda pattern: single_nf_crl(idx, crl, t, pattern)
    if algo == "asa":
        return lambda pattern: single_nf_asa(idx, t, pattern)
    if algo == "hsa":
        return lambda pattern: single_nf_hsa(idx, t, pattern)
    raise ValueError(f"unknown strategy {algo!r}; expected one of {', '.join(STRATEGIES)}")
