import json
import random
from collections import Counter

from hypothesis import given, settings
from hypothesis import strategies as st

from netfreq import (
    all_nf_extract_direct,
    all_nf_extract_traverse,
    build_crl,
    build_index,
    candidate,
    load_text,
    single_nf_crl,
)
from netfreq.nf_all import (
    escape_bytes,
    format_json,
    format_tsv,
    parse_tsv,
    records_from_multiset,
    records_from_reports,
    traverse_reports,
    unescape_bytes,
)
from netfreq.oracle import BruteForce


def test_worked_example_multiset():
    t = load_text(b"rstkstcastarstast")
    idx = build_index(t)
    expected = Counter({b"st": 1, b"sta": 2, b"ast": 2, b"rst": 2})
    assert all_nf_extract_direct(idx, t) == expected
    assert all_nf_extract_traverse(idx, t) == expected


def test_no_repeats_gives_empty():
    t = load_text(b"ab")
    idx = build_index(t)
    assert not all_nf_extract_direct(idx, t)
    assert not traverse_reports(idx, t)


def test_candidate_span():
    t = load_text(b"aa")
    idx = build_index(t)
    c = candidate(idx, 2)
    assert c.span.length == 1


@given(st.lists(st.sampled_from(list(b"abc")), min_size=1, max_size=80).map(bytes))
@settings(max_examples=150, deadline=None)
def test_three_way_equivalence(raw):
    t = load_text(raw)
    idx = build_index(t)
    bf = BruteForce(t)
    ms = bf.all_nf()
    assert all_nf_extract_direct(idx, t) == ms
    assert all_nf_extract_traverse(idx, t) == ms
    for s in ms:
        assert bf.is_branching(s)


def test_reports_decode_and_match_single_nf():
    rng = random.Random(2)
    for _ in range(30):
        raw = bytes(rng.choice(b"acgt") for _ in range(150))
        t = load_text(raw)
        idx = build_index(t)
        crl = build_crl(idx)
        for r in traverse_reports(idx, t):
            s = t.data[r.span.start - 1 : r.span.start - 1 + r.span.length]
            assert 0 not in s
            assert single_nf_crl(idx, crl, t, s) == r.nf


def test_escape_round_trip():
    raw = bytes(range(1, 256))
    text = escape_bytes(raw)
    assert text.isascii() and "\t" not in text and "\n" not in text
    assert unescape_bytes(text) == raw
    assert unescape_bytes("a\\x41") == b"aA"


def test_tsv_and_json_emission():
    t = load_text(b"rstkstcastarstast")
    idx = build_index(t)
    records = records_from_multiset(all_nf_extract_direct(idx, t))
    lines = list(format_tsv(records))
    assert lines[0] == "ast\t2\t-1\t-1\n"
    assert [r.string for r in records] == sorted(r.string for r in records)
    assert parse_tsv(lines) == records
    rows = json.loads(format_json(records))
    assert rows[0] == {"string": "ast", "nf": 2, "start": -1, "length": -1}
    reported = records_from_reports(t, traverse_reports(idx, t), min_len=3)
    assert {r.string for r in reported} == {b"ast", b"rst", b"sta"}
    assert all(t.data[r.start - 1 : r.start - 1 + r.length] == r.string for r in reported)
