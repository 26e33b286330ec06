"""Brute-force net frequency, straight from the definitions.

Nothing here touches a suffix array: frequencies come from scanning the text.
Used only to cross-check the indexed algorithms on small inputs.

Boundary convention, applied uniformly: an extension that would step past
either end of the text counts as a unique extension.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product

from .text import Text


@dataclass(frozen=True)
class ExtensionSets:
    left: frozenset[int]
    right: frozenset[int]
    bidir: frozenset[tuple[int, int]]


class BruteForce:
    """Definitional NF over one text, memoizing substring frequencies."""

    def __init__(self, t: Text):
        self.t = t
        self.data = t.data
        self.alphabet = sorted(set(t.data))
        self._freq: dict[bytes, int] = {}

    def occurrences(self, s: bytes) -> list[int]:
        """0-based start offsets of every (possibly overlapping) occurrence."""
        out = []
        i = self.data.find(s)
        while i >= 0:
            out.append(i)
            i = self.data.find(s, i + 1)
        return out

    def f(self, s: bytes) -> int:
        count = self._freq.get(s)
        if count is None:
            count = self._freq[s] = len(self.occurrences(s))
        return count

    def extension_sets(self, s: bytes) -> ExtensionSets:
        left = frozenset(x for x in self.alphabet if self.f(bytes([x]) + s) >= 2)
        right = frozenset(y for y in self.alphabet if self.f(s + bytes([y])) >= 2)
        bidir = frozenset((x, y) for x in left for y in right if self.f(bytes([x]) + s + bytes([y])) >= 1)
        return ExtensionSets(left, right, bidir)

    def nf_by_definition(self, s: bytes) -> int:
        """f(S) - sum f(xS) - sum f(Sy) + sum f(xSy) over the repeated extensions."""
        total = self.f(s)
        if total < 2:
            return 0
        ext = self.extension_sets(s)
        return (
            total
            - sum(self.f(bytes([x]) + s) for x in ext.left)
            - sum(self.f(s + bytes([y])) for y in ext.right)
            + sum(self.f(bytes([x]) + s + bytes([y])) for x, y in ext.bidir)
        )

    def is_net_occurrence(self, start: int, length: int) -> bool:
        """Occurrence at 0-based ``start``: repeated, with unique left and right extensions."""
        d = self.data
        end = start + length
        if self.f(d[start:end]) < 2:
            return False
        left_unique = start == 0 or self.f(d[start - 1 : end]) == 1
        right_unique = end == len(d) or self.f(d[start : end + 1]) == 1
        return left_unique and right_unique

    def nf_by_characteristic(self, s: bytes) -> int:
        """Number of occurrences whose one-character extensions are both unique."""
        if self.f(s) < 2:
            return 0
        return sum(1 for p in self.occurrences(s) if self.is_net_occurrence(p, len(s)))

    def nf_order_k(self, s: bytes, k: int) -> int:
        """Pairs (X, Y) of length-k blocks with f(XS) = f(SY) = f(XSY) = 1.

        Each qualifying pair pins down exactly one occurrence of S, so this
        counts occurrences whose length-k extensions are unique on both sides,
        an extension cut short by a text edge counting as unique.
        """
        if k < 1:
            raise ValueError("k must be at least 1")
        if self.f(s) < 2:
            return 0
        d = self.data
        count = 0
        for p in self.occurrences(s):
            end = p + len(s)
            left_unique = p - k < 0 or self.f(d[p - k : end]) == 1
            right_unique = end + k > len(d) or self.f(d[p : end + k]) == 1
            count += left_unique and right_unique
        return count

    def nf_order_k_enumerated(self, s: bytes, k: int) -> int:
        """Same quantity by enumerating every block pair in alphabet^k x alphabet^k.

        Exponential in k; only for tiny alphabets. Edge occurrences are handled
        with the same truncation convention as ``nf_order_k``.
        """
        if self.f(s) < 2:
            return 0
        blocks = [bytes(c) for c in product(self.alphabet, repeat=k)]
        count = 0
        for x, y in product(blocks, blocks):
            if self.f(x + s) == 1 and self.f(s + y) == 1 and self.f(x + s + y) == 1:
                count += 1
        d = self.data
        # occurrences too close to an edge have no full-length block on that side
        for p in self.occurrences(s):
            end = p + len(s)
            short_left, short_right = p - k < 0, end + k > len(d)
            if not (short_left or short_right):
                continue
            left_ok = short_left or self.f(d[p - k : end]) == 1
            right_ok = short_right or self.f(d[p : end + k]) == 1
            count += left_ok and right_ok
        return count

    def is_branching(self, s: bytes) -> bool:
        """Repeated with at least two distinct right extensions (text end counts as one)."""
        d = self.data
        followers = {d[p + len(s)] if p + len(s) < len(d) else None for p in self.occurrences(s)}
        return len(self.occurrences(s)) >= 2 and len(followers) >= 2

    def all_nf(self) -> Counter:
        """Every sentinel-free string with positive NF, via net occurrences of all substrings."""
        d = self.data
        n = len(d) - 1
        levels = []
        # substrings longer than the longest repeat are unique and cannot be net occurrences
        for length in range(1, n + 1):
            level = Counter(d[i : i + length] for i in range(n - length + 1))
            self._freq.update(level)
            if all(v == 1 for v in level.values()):
                break
            levels.append((length, level))
        counts: Counter = Counter()
        for length, level in levels:
            for i in range(n - length + 1):
                s = d[i : i + length]
                if level[s] >= 2 and self.is_net_occurrence(i, length):
                    counts[s] += 1
        return counts


def nf_by_definition(t: Text, pattern: bytes) -> int:
    return BruteForce(t).nf_by_definition(pattern)


def nf_by_characteristic(t: Text, pattern: bytes) -> int:
    return BruteForce(t).nf_by_characteristic(pattern)


def nf_order_k(t: Text, pattern: bytes, k: int) -> int:
    return BruteForce(t).nf_order_k(pattern, k)


def is_branching(t: Text, pattern: bytes) -> bool:
    return BruteForce(t).is_branching(pattern)


def all_nf(t: Text) -> Counter:
    return BruteForce(t).all_nf()
