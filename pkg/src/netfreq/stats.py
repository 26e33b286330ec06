"""Corpus-level measures: NF totals, delta, BWT runs, irreducible LCP sum."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np

from .suffix_index import SuffixIndex
from .text import Text


@dataclass(frozen=True)
class CorpusStats:
    n: int
    sigma: int
    distinct_pos_nf: int
    sum_nf: int
    big_n: int
    big_l: int
    delta: Fraction
    bwt_runs: int
    irr_lcp_sum: int

    def check_bounds(self) -> list[str]:
        """Names of violated invariants; empty when all hold."""
        failed = []
        if self.sum_nf > self.n:
            failed.append("sum_nf <= n")
        if self.distinct_pos_nf > self.n:
            failed.append("distinct_pos_nf <= n")
        if self.big_n > self.big_l:
            failed.append("big_n <= big_l")
        if self.big_l > 2 * self.irr_lcp_sum:
            failed.append("big_l <= 2 * irr_lcp_sum")
        return failed

    def to_json(self) -> dict:
        out = asdict(self)
        out["delta"] = {
            "numerator": self.delta.numerator,
            "denominator": self.delta.denominator,
            "value": float(self.delta),
        }
        return out


def nf_totals(ms: Mapping[bytes, int], max_len: int | None = None) -> dict[str, int]:
    items = [(s, v) for s, v in ms.items() if max_len is None or len(s) <= max_len]
    return {
        "distinct_pos_nf": len(items),
        "sum_nf": sum(v for _, v in items),
        "big_n": sum(len(s) for s, _ in items),
        "big_l": sum(len(s) * v for s, v in items),
    }


def irreducible_lcp_sum(idx: SuffixIndex) -> int:
    """Sum of lcp[i] over rows 2..n with bwt[i-1] != bwt[i]; row 1 contributes lcp[1] = 0."""
    n = idx.n
    bwt = idx.bwt
    irreducible = bwt[1:n] != bwt[2 : n + 1]
    return int(idx.lcp[2 : n + 1][irreducible].sum(dtype=np.int64))


def bwt_runs(idx: SuffixIndex) -> int:
    bwt = idx.bwt[1:]
    return int(np.count_nonzero(bwt[1:] != bwt[:-1])) + 1


def distinct_substring_counts(idx: SuffixIndex) -> np.ndarray:
    """S(k) for k = 0..n (entry 0 unused): distinct length-k substrings, sentinel-bearing ones included.

    Among the n-k+1 suffixes of length >= k, a suffix repeats its predecessor's
    length-k prefix exactly when the LCP between them is >= k.
    """
    n = idx.n
    hist = np.bincount(idx.lcp[2 : n + 1], minlength=n + 2)
    at_least = np.cumsum(hist[::-1])[::-1]
    k = np.arange(n + 1)
    counts = (n - k + 1) - at_least[: n + 1]
    counts[0] = 0
    return counts


def delta_measure(idx: SuffixIndex) -> Fraction:
    counts = distinct_substring_counts(idx)
    k = np.arange(1, idx.n + 1)
    ratios = counts[1:] / k
    top = ratios.max()
    # floats only shortlist; the maximum is decided exactly
    shortlist = np.flatnonzero(ratios >= top * (1 - 1e-9)) + 1
    return max(Fraction(int(counts[j]), int(j)) for j in shortlist)


def compute_stats(idx: SuffixIndex, t: Text, ms: Mapping[bytes, int]) -> CorpusStats:
    if t.n != idx.n:
        raise ValueError("text and index lengths differ")
    totals = nf_totals(ms)
    return CorpusStats(
        n=idx.n,
        sigma=idx.sigma,
        delta=delta_measure(idx),
        bwt_runs=bwt_runs(idx),
        irr_lcp_sum=irreducible_lcp_sum(idx),
        **totals,
    )
