import random

import numpy as np
import pytest

from netfreq import OutOfBounds, build_crl, build_index, list_distinct, load_text
from netfreq.crl import BLOCK, SparseTableRMQ, previous_occurrences


def test_previous_occurrences():
    bwt = np.frombuffer(b"\x00abab", dtype=np.uint8)
    assert previous_occurrences(bwt).tolist() == [0, 0, 0, 1, 2]


@pytest.mark.parametrize("n", [1, 5, BLOCK, 3 * BLOCK + 7, 200])
def test_rmq_against_scan(n):
    rng = random.Random(n)
    values = np.array([0] + [rng.randrange(6) for _ in range(n)], dtype=np.int32)
    rmq = SparseTableRMQ(values)
    for _ in range(400):
        lo = rng.randint(1, n)
        hi = rng.randint(lo, n)
        best = min(range(lo, hi + 1), key=lambda p: (values[p], p))
        assert rmq.argmin(lo, hi) == best
    with pytest.raises(OutOfBounds):
        rmq.argmin(0, 1)


def test_list_distinct_all_pairs():
    rng = random.Random(11)
    for alphabet in (b"ab", b"acgt", b"abcdefghij"):
        raw = bytes(rng.choice(alphabet) for _ in range(70))
        idx = build_index(load_text(raw))
        crl = build_crl(idx)
        bwt = idx.bwt.tolist()
        for lo in range(1, idx.n + 1):
            first = {}
            for hi in range(lo, idx.n + 1):
                first.setdefault(bwt[hi], hi)
                assert list_distinct(crl, lo, hi) == sorted(first.values())


def test_list_distinct_bounds():
    crl = build_crl(build_index(load_text(b"abc")))
    with pytest.raises(OutOfBounds):
        list_distinct(crl, 2, 1)
    with pytest.raises(OutOfBounds):
        list_distinct(crl, 1, 5)
