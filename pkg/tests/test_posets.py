from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rookeuler.exactpoly import IntPolynomial, is_real_rooted, is_ultra_log_concave
from rookeuler.perms import GuardExceeded, OrderKind, Permutation, StatKind, interval_stat_polynomial, lower_interval
from rookeuler.posets import (FinitePoset, PosetError, jordan_holder_set, linear_extension_count,
                              longest_decreasing_subsequence, permutation_poset, poset_width,
                              poset_width_brute, verify_jordan_holder_is_weak_interval, w_polynomial,
                              w_polynomial_dp, weak_interval_stat_polynomial, weak_order_fast_path_valid,
                              width_two_to_permutation)

P = IntPolynomial
PI = (2, 4, 6, 8, 10, 1, 12, 3, 15, 5, 17, 7, 9, 11, 13, 14, 16)
BIG = P([1, 32, 336, 1420, 2534, 1946, 658, 86, 3])


def perms_of(n):
    return st.permutations(list(range(1, n + 1))).map(tuple)


small_perm = st.integers(1, 7).flatmap(perms_of)


def brute_extensions(P_):
    return sorted(w for w in permutations(range(1, P_.n + 1))
                  if all(not P_.less(w[b], w[a]) for a in range(P_.n) for b in range(a + 1, P_.n)))


def test_poset_validation():
    with pytest.raises(PosetError):
        FinitePoset(2, ((True, True), (True, True)))
    with pytest.raises(PosetError):
        FinitePoset(3, ((1, 1, 0), (0, 1, 1), (0, 0, 1)))
    with pytest.raises(PosetError):
        FinitePoset(1, ((False,),))
    assert FinitePoset.from_relations(3, [(1, 2), (2, 3)]) == FinitePoset.chain(3)


def test_small_permutation_posets():
    assert permutation_poset((1, 2, 3)) == FinitePoset.chain(3)
    assert permutation_poset((3, 2, 1)) == FinitePoset.antichain(3)
    assert permutation_poset((2, 1)) == FinitePoset.antichain(2)


def test_jordan_holder_small_cases():
    assert jordan_holder_set(FinitePoset.chain(4)) == [Permutation.identity(4)]
    assert len(jordan_holder_set(FinitePoset.antichain(4))) == 24
    assert jordan_holder_set(permutation_poset((2, 1))) == [Permutation((1, 2)), Permutation((2, 1))]
    assert w_polynomial(FinitePoset.antichain(2)) == P([1, 1])
    assert w_polynomial(FinitePoset.chain(5)) == P([1])


@given(small_perm)
def test_extensions_match_brute_force(w):
    Pp = permutation_poset(w)
    ours = [q.word for q in jordan_holder_set(Pp)]
    assert ours == brute_extensions(Pp)
    assert linear_extension_count(Pp) == len(ours)


@given(small_perm)
def test_enumeration_and_down_set_routes_agree(w):
    Pp = permutation_poset(w)
    assert w_polynomial(Pp) == w_polynomial_dp(Pp)


@pytest.mark.parametrize("n", range(1, 6))
def test_jordan_holder_is_weak_interval_of_inverse(n):
    for w in permutations(range(1, n + 1)):
        assert verify_jordan_holder_is_weak_interval(w)


def test_jordan_holder_is_not_the_interval_of_the_permutation_itself():
    w = Permutation((2, 3, 1))
    jh = set(jordan_holder_set(permutation_poset(w)))
    assert jh != set(lower_interval(w, OrderKind.WEAK))
    assert jh == set(lower_interval(w.inverse(), OrderKind.WEAK))


@pytest.mark.parametrize("n", range(1, 7))
def test_descent_polynomials_of_inverse_intervals_agree(n):
    for w in permutations(range(1, n + 1)):
        p = Permutation(w)
        assert (interval_stat_polynomial(p, "weak", "des", guard=None)
                == interval_stat_polynomial(p.inverse(), "weak", "des", guard=None))


def test_fast_path_is_validated():
    assert weak_order_fast_path_valid()


@given(small_perm, st.sampled_from(list(StatKind)))
def test_weak_fast_path_matches_bfs(w, kind):
    assert weak_interval_stat_polynomial(w, kind) == interval_stat_polynomial(w, "weak", kind)


def test_large_width_two_example():
    Pp = permutation_poset(PI)
    assert len(jordan_holder_set(Pp)) == 7016
    assert w_polynomial(Pp) == BIG
    assert w_polynomial_dp(Pp) == BIG
    assert not is_real_rooted(BIG).is_real_rooted
    assert weak_interval_stat_polynomial(PI, "des") == BIG
    assert verify_jordan_holder_is_weak_interval(PI)
    assert len(lower_interval(PI, OrderKind.WEAK)) == 7016
    assert poset_width(Pp) == 2
    assert width_two_to_permutation(Pp) == Permutation(PI)


def test_peak_variant_with_leading_one():
    tilde = (1, 3, 5, 7, 9, 11, 2, 13, 4, 16, 6, 18, 8, 10, 12, 14, 15, 17)
    assert weak_interval_stat_polynomial(tilde, "peak") == BIG


def test_identity_interval_is_one():
    for kind in ("des", "exc", "peak"):
        assert weak_interval_stat_polynomial((1, 2, 3, 4), kind) == P([1])
    assert weak_interval_stat_polynomial((1, 2, 3, 4), "asc") == P([0, 0, 0, 1])


@given(small_perm)
def test_width_matches_brute_and_decreasing_subsequence(w):
    Pp = permutation_poset(w)
    assert poset_width(Pp) == poset_width_brute(Pp) == longest_decreasing_subsequence(w)


def test_width_extremes():
    assert poset_width(FinitePoset.chain(6)) == 1
    assert poset_width(FinitePoset.antichain(6)) == 6


def test_width_two_round_trip_all_small():
    for n in range(1, 7):
        for w in permutations(range(1, n + 1)):
            Pp = permutation_poset(w)
            if poset_width(Pp) <= 2:
                assert width_two_to_permutation(Pp) == Permutation(w)


def test_width_two_errors():
    assert width_two_to_permutation(FinitePoset.antichain(2)) == Permutation((2, 1))
    assert width_two_to_permutation(FinitePoset.chain(4)) == Permutation.identity(4)
    with pytest.raises(PosetError):
        width_two_to_permutation(FinitePoset.antichain(3))
    with pytest.raises(PosetError):
        width_two_to_permutation(FinitePoset.from_relations(2, [(2, 1)]))


def test_guard():
    with pytest.raises(GuardExceeded):
        w_polynomial(FinitePoset.antichain(11))


@pytest.mark.parametrize("n", range(1, 6))
def test_weak_interval_descent_polynomials_ulc(n):
    for w in permutations(range(1, n + 1)):
        assert is_ultra_log_concave(weak_interval_stat_polynomial(w, "des"))
