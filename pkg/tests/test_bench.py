import pytest

from netfreq import build_crl, build_index, load_text
from netfreq.bench import BenchQuerySpec, _tokens, english_like_corpus, frequency_bucket, generate_queries, run_bench, summary_rows


def test_corpus_deterministic_and_sized():
    a = english_like_corpus(20000, seed=1)
    assert a == english_like_corpus(20000, seed=1)
    assert len(a) == 20000 and b"\x00" not in a
    assert a != english_like_corpus(20000, seed=2)


def test_tokens():
    starts, ends = _tokens(b"ab  cd e", 0x20)
    assert starts.tolist() == [0, 4, 7] and ends.tolist() == [2, 6, 8]
    starts, ends = _tokens(b" x ", 0x20)
    assert starts.tolist() == [1] and ends.tolist() == [2]


def test_spec_validation():
    with pytest.raises(ValueError):
        BenchQuerySpec(mode="other")
    with pytest.raises(ValueError):
        BenchQuerySpec(min_len=10, max_len=5)
    with pytest.raises(ValueError):
        BenchQuerySpec(count=0)


def test_token_concat_queries():
    t = load_text(english_like_corpus(30000, seed=4))
    qs = generate_queries(t, BenchQuerySpec(count=300, seed=1))
    assert qs == generate_queries(t, BenchQuerySpec(count=300, seed=1))
    for q in qs:
        assert 5 <= len(q) <= 35
        assert not q.startswith(b" ") and not q.endswith(b" ")
        assert q in t.raw


def test_random_span_queries():
    t = load_text(b"acgt" * 100)
    qs = generate_queries(t, BenchQuerySpec(mode="random-span", count=100, seed=2))
    assert all(5 <= len(q) <= 35 and q in t.raw for q in qs)


def test_impossible_token_queries():
    t = load_text(b"a b c")
    with pytest.raises(ValueError):
        generate_queries(t, BenchQuerySpec(min_len=10, max_len=12, count=2), max_attempts_per_query=5)


def test_buckets():
    assert [frequency_bucket(f) for f in (0, 1, 2, 9, 10, 150, 2000)] == ["0", "1", "2-9", "2-9", "10-99", "100-999", "1000-9999"]


def test_run_bench_classes():
    t = load_text(english_like_corpus(30000, seed=5))
    idx = build_index(t)
    res = run_bench(idx, t, build_crl(idx), generate_queries(t, BenchQuerySpec(count=50)))
    assert set(res.micros) == {"crl", "asa", "hsa"}
    rows = summary_rows(res)
    groups = {(a, g, k) for a, g, k, _, _ in rows}
    assert ("crl", "class", "f>=2") in groups and ("hsa", "class", "phi>0") in groups
    all_count = next(c for a, g, k, c, _ in rows if (a, g, k) == ("asa", "class", "all"))
    assert all_count == 50
