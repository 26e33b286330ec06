"""Coloured range listing over the BWT.

Given rows ``[l, r]``, report one row per distinct BWT character in that
range in O(1) time per reported row. The classic reduction: a row p is the
leftmost of its colour inside ``[l, r]`` iff ``prev[p] < l``, where ``prev[p]``
is the previous row carrying the same character. Repeatedly taking the
argmin of ``prev`` and splitting around it finds exactly those rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import OutOfBounds
from .suffix_index import SuffixIndex

BLOCK = 16


class SparseTableRMQ:
    """Argmin over a 1-based array with ties broken by smallest position.

    A sparse table is kept over block minima only (blocks of ``BLOCK`` cells);
    the partial blocks at either end of a query are scanned directly. Space is
    O(n/B log n) words instead of O(n log n), query time stays O(B).
    """

    def __init__(self, values: np.ndarray):
        # values[0] is padding; positions are 1..len(values)-1
        self.values = values
        self._vals = memoryview(values)
        self.n = n = len(values) - 1
        nblocks = (n + BLOCK - 1) // BLOCK
        padded = np.full(nblocks * BLOCK, np.iinfo(values.dtype).max, dtype=values.dtype)
        padded[:n] = values[1:]
        # argmin returns the first minimum, matching the tie rule
        level = (np.argmin(padded.reshape(nblocks, BLOCK), axis=1) + np.arange(nblocks) * BLOCK + 1).astype(values.dtype)
        levels = [level]
        width = 1
        while 2 * width <= nblocks:
            a = level[: nblocks - 2 * width + 1]
            b = level[width : nblocks - width + 1]
            level = np.where(values[b] < values[a], b, a)
            levels.append(level)
            width *= 2
        self._levels = [memoryview(lv) for lv in levels]

    def _scan(self, lo: int, hi: int) -> int:
        return min(range(lo, hi + 1), key=self._vals.__getitem__)

    def argmin(self, lo: int, hi: int) -> int:
        if not 1 <= lo <= hi <= self.n:
            raise OutOfBounds(f"range [{lo}, {hi}] outside [1, {self.n}]")
        bl = (lo - 1) // BLOCK
        bh = (hi - 1) // BLOCK
        if bh - bl < 2:
            return self._scan(lo, hi)
        vals = self._vals
        best = self._scan(lo, (bl + 1) * BLOCK)
        first, last = bl + 1, bh - 1
        k = (last - first + 1).bit_length() - 1
        table = self._levels[k]
        for cand in (table[first], table[last - (1 << k) + 1]):
            if vals[cand] < vals[best]:
                best = cand
        cand = self._scan(bh * BLOCK + 1, hi)
        if vals[cand] < vals[best]:
            best = cand
        return best


@dataclass(eq=False)
class CrlIndex:
    prev: np.ndarray
    rmq: SparseTableRMQ

    @cached_property
    def prev_view(self) -> memoryview:
        return memoryview(self.prev)

    @property
    def n(self) -> int:
        return len(self.prev) - 1


def previous_occurrences(bwt: np.ndarray) -> np.ndarray:
    """``prev[i]``: largest j < i with bwt[j] == bwt[i], else 0 (1-based, slot 0 padding)."""
    n = len(bwt) - 1
    dtype = np.int32 if n < 2**31 - 1 else np.int64
    rows = np.argsort(bwt[1:], kind="stable").astype(dtype) + 1
    prev = np.zeros(n + 1, dtype=dtype)
    chars = bwt[rows]
    same = chars[1:] == chars[:-1]
    prev[rows[1:][same]] = rows[:-1][same]
    return prev


def build_crl(idx: SuffixIndex) -> CrlIndex:
    prev = previous_occurrences(idx.bwt)
    return CrlIndex(prev=prev, rmq=SparseTableRMQ(prev))


def list_distinct(c: CrlIndex, l: int, r: int) -> list[int]:
    """Rows p in [l, r] with prev[p] < l: one per distinct character, ascending."""
    if not 1 <= l <= r <= c.n:
        raise OutOfBounds(f"range [{l}, {r}] outside [1, {c.n}]")
    prev = c.prev_view
    argmin = c.rmq.argmin
    found = []
    pending = [(l, r)]
    while pending:
        a, b = pending.pop()
        p = argmin(a, b)
        if prev[p] >= l:
            continue
        found.append(p)
        if a < p:
            pending.append((a, p - 1))
        if p < b:
            pending.append((p + 1, b))
    found.sort()
    return found
