import random
from itertools import permutations, product
from math import prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rookeuler.exactpoly import IntPolynomial, is_real_rooted
from rookeuler.invseq import (InversionSequence, SVector, ascent_statistic, candidate_vectors,
                              reduce_consecutive_ones, s_eulerian, s_eulerian_brute, search_s_match)

P = IntPolynomial
svecs = st.lists(st.integers(1, 5), min_size=1, max_size=6)


def eulerian(n):
    hist = {}
    for w in permutations(range(n)):
        a = sum(1 for i in range(n - 1) if w[i] < w[i + 1])
        hist[a] = hist.get(a, 0) + 1
    return P.from_counts(hist)


def test_small_example():
    assert s_eulerian((1, 2, 3)) == P([1, 4, 1])
    assert s_eulerian((1,)) == P([1])


def test_ascent_uses_ratios_with_leading_zero():
    s = SVector((2, 4))
    assert ascent_statistic(InversionSequence((1, 2), s)) == 1  # 0 < 1/2, 1/2 = 2/4
    assert ascent_statistic(InversionSequence((1, 3), s)) == 2
    with pytest.raises(ValueError):
        InversionSequence((2, 0), s)
    with pytest.raises(ValueError):
        SVector((0, 2))


@given(svecs)
def test_dp_matches_enumeration(s):
    assert s_eulerian(s) == s_eulerian_brute(s)


def test_random_vectors_total_is_product():
    rng = random.Random(0)
    for _ in range(200):
        s = [rng.randint(1, 9) for _ in range(rng.randint(1, 6))]
        assert s_eulerian(s)(1) == prod(s)


@pytest.mark.parametrize("n", range(1, 7))
def test_one_to_n_gives_eulerian(n):
    assert s_eulerian(range(1, n + 1)) == eulerian(n)


def test_reduction_invariance_exhaustive():
    for length in range(1, 6):
        for s in product(range(1, 5), repeat=length):
            assert s_eulerian(reduce_consecutive_ones(s)) == s_eulerian(s)


def test_reduction_shape():
    assert reduce_consecutive_ones((1, 1, 2, 1, 1, 1, 3, 1, 1)).s == (1, 2, 1, 3, 1)


@given(svecs)
def test_s_eulerian_real_rooted(s):
    assert is_real_rooted(s_eulerian(s)).is_real_rooted


def test_guard():
    with pytest.raises(ValueError):
        s_eulerian((10,) * 8)
    assert s_eulerian((10,) * 8, guard=None)(1) == 10 ** 8


def test_candidates_cover_every_reduced_vector():
    # oracle: all vectors of product 12 with entries in 1..12 and length <= 7, reduced
    expected = set()
    for length in range(1, 8):
        for s in product([1, 2, 3, 4, 6, 12], repeat=length):
            if prod(s) == 12 and reduce_consecutive_ones(s).s == s:
                expected.add(s)
    got = [c.s for c in candidate_vectors(12)]
    assert len(got) == len(set(got))
    assert set(got) == expected


def test_search_examples():
    assert search_s_match(P([1])).match == SVector((1,))
    res = search_s_match(P([1, 4, 1]))
    assert res.match is not None and prod(res.match.s) == 6
    assert s_eulerian(res.match) == P([1, 4, 1])


def test_search_finds_nothing_for_the_board_polynomial():
    res = search_s_match(P([1, 13, 9, 1]))
    assert res.match is None and res.candidates > 0


def test_search_rejects_bad_targets():
    with pytest.raises(ValueError):
        search_s_match(P([1, -1, 1]))
