"""All strings with positive net frequency.

Each SA row i has at most one net occurrence candidate: the occurrence of
length ``ell(i)`` starting at ``sa[i]``. It is a net occurrence iff
``ell(i) >= ell(lf[i])``. Two ways to collect them:

* ``all_nf_extract_direct`` scans the rows and hashes every net occurrence
  (a string with NF phi is hashed phi times);
* ``all_nf_traverse`` walks the LCP intervals bottom-up with a stack and
  credits each net occurrence to the interval of its string, so every string
  is emitted once, together with one of its occurrences.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping

import numpy as np

from .errors import OutOfBounds
from .suffix_index import SuffixIndex
from .text import Span, Text

NfMultiset = Counter  # Counter[bytes]: string content -> positive NF

_CHUNK = 1 << 20


@dataclass(frozen=True, slots=True)
class Candidate:
    row: int
    span: Span


@dataclass(frozen=True, slots=True)
class NetReport:
    span: Span
    nf: int


@dataclass(slots=True)
class IntervalFrame:
    """LCP interval ``len-<lb, rb>`` on the traversal stack; rb is never needed."""

    len: int
    lb: int
    phi: int = 0


def candidate(idx: SuffixIndex, i: int) -> Candidate:
    if not 1 <= i <= idx.n:
        raise OutOfBounds(f"row {i} outside [1, {idx.n}]")
    lcp = idx.lcp_view
    return Candidate(i, Span(idx.sa_view[i], max(lcp[i], lcp[i + 1])))


def net_candidate_rows(idx: SuffixIndex) -> np.ndarray:
    """Rows (1-based) whose nonempty candidate is a net occurrence."""
    ell = idx.ell_array()
    ell_lf = ell[idx.lf[1:] - 1]
    return np.flatnonzero((ell >= 1) & (ell >= ell_lf)) + 1


def all_nf_extract_direct(idx: SuffixIndex, t: Text) -> NfMultiset:
    data = t.data
    rows = net_candidate_rows(idx)
    lcp = idx.lcp
    result: NfMultiset = Counter()
    for lo in range(0, len(rows), _CHUNK):
        chunk = rows[lo : lo + _CHUNK]
        starts = (idx.sa[chunk] - 1).tolist()
        lengths = np.maximum(lcp[chunk], lcp[chunk + 1]).tolist()
        result.update(data[s : s + m] for s, m in zip(starts, lengths))
    assert len(rows) <= idx.n
    return result


def all_nf_traverse(idx: SuffixIndex, t: Text, sink: Callable[[NetReport], object]) -> None:
    """Emit one ``NetReport`` per distinct string with positive NF."""
    if t.n != idx.n:
        raise ValueError("text and index lengths differ")
    n = idx.n
    sa = idx.sa_view
    lcp = idx.lcp_view
    lf = idx.lf_view
    stack = [IntervalFrame(0, 0, 0)]
    top = stack[0]
    for_next = False
    for i in range(2, n + 1):
        li = lcp[i]
        lb = i - 1
        while li < top.len:
            frame = stack.pop()
            if frame.phi:
                sink(NetReport(Span(sa[frame.lb], frame.len), frame.phi))
            lb = frame.lb
            top = stack[-1]
        if li > top.len:
            assert stack[-1].len < li
            top = IntervalFrame(li, lb, 0)
            stack.append(top)
            if for_next:
                top.phi += 1
                for_next = False
        nxt = lcp[i + 1]
        e = li if li > nxt else nxt
        if e:
            j = lf[i]
            if e >= lcp[j] and e >= lcp[j + 1]:
                if li == e:
                    top.phi += 1
                else:
                    # candidate belongs to the interval pushed at row i + 1
                    for_next = True
    while stack:
        frame = stack.pop()
        if frame.phi:
            sink(NetReport(Span(sa[frame.lb], frame.len), frame.phi))


def traverse_reports(idx: SuffixIndex, t: Text) -> list[NetReport]:
    reports: list[NetReport] = []
    all_nf_traverse(idx, t, reports.append)
    return reports


def all_nf_extract_traverse(idx: SuffixIndex, t: Text) -> NfMultiset:
    result: NfMultiset = Counter()
    data = t.data

    def add(report: NetReport) -> None:
        start = report.span.start - 1
        key = data[start : start + report.span.length]
        assert key not in result, "traversal reported a string twice"
        result[key] = report.nf

    # streamed into the Counter so the report list never exists in full
    all_nf_traverse(idx, t, add)
    return result


# -- emission ---------------------------------------------------------------

_PRINTABLE = frozenset(range(0x20, 0x7F)) - {ord("\\")}


def escape_bytes(s: bytes) -> str:
    """Printable ASCII verbatim, everything else (and backslash) as ``\\xHH``."""
    return "".join(chr(b) if b in _PRINTABLE else f"\\x{b:02x}" for b in s)


def unescape_bytes(s: str) -> bytes:
    """Inverse of ``escape_bytes``; also accepts a literal string with ``\\xHH`` escapes."""
    out = bytearray()
    i = 0
    while i < len(s):
        if s.startswith("\\x", i):
            digits = s[i + 2 : i + 4]
            if len(digits) != 2:
                raise ValueError(f"truncated escape at offset {i}")
            out.append(int(digits, 16))
            i += 4
        elif s[i] == "\\":
            raise ValueError(f"unsupported escape at offset {i}")
        else:
            out.extend(s[i].encode("utf-8"))
            i += 1
    return bytes(out)


@dataclass(frozen=True, slots=True)
class NfRecord:
    string: bytes
    nf: int
    start: int = -1
    length: int = -1


def records_from_multiset(ms: Mapping[bytes, int], min_len: int = 1) -> list[NfRecord]:
    return sorted((NfRecord(s, v) for s, v in ms.items() if len(s) >= min_len), key=lambda r: r.string)


def records_from_reports(t: Text, reports: Iterable[NetReport], min_len: int = 1) -> list[NfRecord]:
    data = t.data
    out = [
        NfRecord(data[r.span.start - 1 : r.span.start - 1 + r.span.length], r.nf, r.span.start, r.span.length)
        for r in reports
        if r.span.length >= min_len
    ]
    out.sort(key=lambda r: r.string)
    return out


def format_tsv(records: Iterable[NfRecord]) -> Iterator[str]:
    for r in records:
        yield f"{escape_bytes(r.string)}\t{r.nf}\t{r.start}\t{r.length}\n"


def format_json(records: Iterable[NfRecord]) -> str:
    rows = [{"string": escape_bytes(r.string), "nf": r.nf, "start": r.start, "length": r.length} for r in records]
    return json.dumps(rows, indent=1) + "\n"


def parse_tsv(lines: Iterable[str]) -> list[NfRecord]:
    out = []
    for line in lines:
        string, nf, start, length = line.rstrip("\n").split("\t")
        out.append(NfRecord(unescape_bytes(string), int(nf), int(start), int(length)))
    return out
