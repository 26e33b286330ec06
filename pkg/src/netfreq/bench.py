"""Query generation and timing harness for SINGLE-NF strategies."""

from __future__ import annotations

import csv
import io
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .crl import CrlIndex
from .nf_all import escape_bytes
from .nf_query import nf_function, single_nf_crl
from .suffix_index import SuffixIndex, frequency
from .text import Text

MODES = ("token-concat", "random-span")

# ranked by frequency in English prose
_FUNCTION_WORDS = (
    "the of and to a in is that for it as was with be by on not he this are or his from at which but have an "
    "they you were her she there had been one all we can their has more its will would if so no about who up "
    "out what some into them than said other only new time people two may first also after over"
).split()
_LETTERS = b"etaoinshrdlcumwfgypbvkjxqz"
_LETTER_WEIGHTS = np.array(
    [12.7, 9.1, 8.2, 7.5, 7.0, 6.7, 6.3, 6.1, 6.0, 4.3, 4.0, 2.8, 2.8, 2.4, 2.4, 2.2, 2.0, 2.0, 1.9, 1.5, 1.0, 0.8, 0.15, 0.15, 0.1, 0.07]
)


def english_like_corpus(size: int, seed: int = 0, vocabulary: int = 30000, zipf_s: float = 1.05) -> bytes:
    """Deterministic pseudo-English: Zipf-distributed words, sentences ending in '. '.

    Function words take the top ranks; the rest of the vocabulary is made of
    letter strings drawn with English letter frequencies.
    """
    rng = np.random.default_rng(seed)
    letters = np.frombuffer(_LETTERS, dtype=np.uint8)
    weights = _LETTER_WEIGHTS / _LETTER_WEIGHTS.sum()
    words = [w.encode() for w in _FUNCTION_WORDS]
    seen = set(words)
    while len(words) < vocabulary:
        length = int(rng.integers(2, 11))
        w = rng.choice(letters, size=length, p=weights).tobytes()
        if w not in seen:
            seen.add(w)
            words.append(w)
    ranks = np.arange(1, vocabulary + 1, dtype=np.float64)
    p = ranks**-zipf_s
    p /= p.sum()
    avg = float(np.dot(p, [len(w) + 1 for w in words]))
    nwords = int(size / avg * 1.1) + 16
    picks = rng.choice(vocabulary, size=nwords, p=p)
    sentence_end = rng.random(nwords) < 1 / 14
    out = []
    capitalize = True
    for w, end in zip(picks.tolist(), sentence_end.tolist()):
        word = words[w]
        if capitalize:
            word = word[:1].upper() + word[1:]
        out.append(word + (b". " if end else b" "))
        capitalize = end
    text = b"".join(out)
    while len(text) < size:
        text += text
    return text[:size]


@dataclass(frozen=True)
class BenchQuerySpec:
    mode: str = "token-concat"
    min_len: int = 5
    max_len: int = 35
    count: int = 1000
    seed: int = 0
    delimiter: int = 0x20

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not 1 <= self.min_len <= self.max_len:
            raise ValueError("need 1 <= min_len <= max_len")
        if self.count < 1:
            raise ValueError("count must be at least 1")


def _tokens(raw: bytes, delimiter: int) -> tuple[np.ndarray, np.ndarray]:
    """Start (inclusive) and end (exclusive) offsets of nonempty delimiter-free runs."""
    is_delim = np.frombuffer(raw, dtype=np.uint8) == delimiter
    edges = np.diff(np.concatenate(([0], (~is_delim).astype(np.int8), [0])))
    return np.flatnonzero(edges == 1), np.flatnonzero(edges == -1)


def generate_queries(t: Text, spec: BenchQuerySpec, max_attempts_per_query: int = 1000) -> list[bytes]:
    """Deterministic query list for ``spec``; raises ValueError if the text cannot supply it."""
    raw = t.raw
    rng = random.Random(spec.seed)
    queries: list[bytes] = []
    budget = spec.count * max_attempts_per_query
    if spec.mode == "random-span":
        if len(raw) < spec.min_len:
            raise ValueError("text shorter than min_len")
        while len(queries) < spec.count:
            start = rng.randrange(len(raw) - spec.min_len + 1)
            length = rng.randint(spec.min_len, min(spec.max_len, len(raw) - start))
            queries.append(raw[start : start + length])
        return queries
    starts, ends = _tokens(raw, spec.delimiter)
    if len(starts) == 0:
        raise ValueError("text has no tokens")
    starts, ends = starts.tolist(), ends.tolist()
    while len(queries) < spec.count:
        budget -= 1
        if budget < 0:
            raise ValueError("could not generate enough queries within the length bounds")
        first = last = rng.randrange(len(starts))
        while ends[last] - starts[first] < spec.min_len and last + 1 < len(starts):
            last += 1
        length = ends[last] - starts[first]
        if spec.min_len <= length <= spec.max_len:
            queries.append(raw[starts[first] : ends[last]])
    return queries


@dataclass
class BenchResult:
    queries: list[bytes]
    freq: list[int]
    phi: list[int]
    micros: dict[str, list[float]] = field(default_factory=dict)

    def mean(self, algo: str, select=None) -> float:
        times = [us for k, us in enumerate(self.micros[algo]) if select is None or select(k)]
        return sum(times) / len(times) if times else float("nan")


def _time_queries(fn, queries: list[bytes], indices: range) -> list[tuple[int, float]]:
    out = []
    clock = time.perf_counter_ns
    for k in indices:
        q = queries[k]
        t0 = clock()
        fn(q)
        out.append((k, (clock() - t0) / 1000.0))
    return out


def run_bench(
    idx: SuffixIndex,
    t: Text,
    crl: CrlIndex,
    queries: list[bytes],
    algos: tuple[str, ...] = ("crl", "asa", "hsa"),
    threads: int = 1,
) -> BenchResult:
    """Time each strategy on every query; index construction is not timed."""
    freq = [frequency(idx, t, q) for q in queries]
    phi = [single_nf_crl(idx, crl, t, q) for q in queries]
    result = BenchResult(queries, freq, phi)
    for algo in algos:
        fn = nf_function(algo, idx, t, crl)
        fn(queries[0])  # warm caches
        if threads <= 1:
            pairs = _time_queries(fn, queries, range(len(queries)))
        else:
            chunks = [range(w, len(queries), threads) for w in range(threads)]
            with ThreadPoolExecutor(threads) as pool:
                pairs = [p for part in pool.map(lambda r: _time_queries(fn, queries, r), chunks) for p in part]
        times = [0.0] * len(queries)
        for k, us in pairs:
            times[k] = us
        result.micros[algo] = times
    return result


def frequency_bucket(f: int) -> str:
    if f < 2:
        return str(f)
    low = 10 ** (len(str(f)) - 1)
    low = max(low, 2)
    return f"{low}-{10 ** len(str(f)) - 1}"


def summary_rows(result: BenchResult) -> list[tuple[str, str, str, int, float]]:
    """(algo, group, key, count, mean_us) rows; every column but the last is deterministic."""
    n = len(result.queries)
    groups: list[tuple[str, str, list[int]]] = [
        ("class", "all", list(range(n))),
        ("class", "f>=2", [k for k in range(n) if result.freq[k] >= 2]),
        ("class", "phi>0", [k for k in range(n) if result.phi[k] > 0]),
    ]
    buckets: dict[str, list[int]] = {}
    for k in range(n):
        buckets.setdefault(frequency_bucket(result.freq[k]), []).append(k)
    for key in sorted(buckets, key=lambda b: int(b.split("-")[0])):
        groups.append(("frequency", key, buckets[key]))
    lengths: dict[int, list[int]] = {}
    for k, q in enumerate(result.queries):
        lengths.setdefault(len(q), []).append(k)
    for length in sorted(lengths):
        groups.append(("length", str(length), lengths[length]))
    rows = []
    for algo, times in result.micros.items():
        for group, key, members in groups:
            mean = sum(times[k] for k in members) / len(members) if members else float("nan")
            rows.append((algo, group, key, len(members), mean))
    return rows


def format_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["algo", "group", "key", "count", "mean_us"])
    for algo, group, key, count, mean in rows:
        writer.writerow([algo, group, key, count, f"{mean:.3f}"])
    return buf.getvalue()


def format_queries(result: BenchResult) -> str:
    return "".join(f"{escape_bytes(q)}\t{f}\t{p}\n" for q, f, p in zip(result.queries, result.freq, result.phi))
