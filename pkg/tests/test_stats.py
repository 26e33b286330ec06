from fractions import Fraction

from netfreq import build_index, load_text
from netfreq.nf_all import all_nf_extract_traverse
from netfreq.stats import bwt_runs, compute_stats, delta_measure, distinct_substring_counts, irreducible_lcp_sum, nf_totals


def brute_distinct(data: bytes, k: int) -> int:
    return len({data[i : i + k] for i in range(len(data) - k + 1)})


def test_worked_example_stats():
    t = load_text(b"rstkstcastarstast")
    idx = build_index(t)
    s = compute_stats(idx, t, all_nf_extract_traverse(idx, t))
    assert (s.distinct_pos_nf, s.sum_nf, s.big_n, s.big_l) == (4, 7, 11, 20)
    assert s.check_bounds() == []
    j = s.to_json()
    assert j["delta"]["numerator"] == s.delta.numerator


def test_distinct_counts_against_brute_force():
    for raw in (b"abracadabra", b"aaaa", b"abaababaab", b"x"):
        t = load_text(raw)
        idx = build_index(t)
        counts = distinct_substring_counts(idx)
        for k in range(1, t.n + 1):
            assert counts[k] == brute_distinct(t.data, k)
        assert delta_measure(idx) == max(Fraction(brute_distinct(t.data, k), k) for k in range(1, t.n + 1))


def test_small_measures():
    idx = build_index(load_text(b"aa"))
    assert irreducible_lcp_sum(idx) == 1
    assert bwt_runs(idx) == 2


def test_totals_with_length_cap():
    ms = {b"ab": 2, b"abcd": 1}
    assert nf_totals(ms) == {"distinct_pos_nf": 2, "sum_nf": 3, "big_n": 6, "big_l": 8}
    assert nf_totals(ms, 3)["big_l"] == 4


def test_bound_violation_reported():
    t = load_text(b"ab")
    idx = build_index(t)
    s = compute_stats(idx, t, {b"a": 5})
    assert "sum_nf <= n" in s.check_bounds()
