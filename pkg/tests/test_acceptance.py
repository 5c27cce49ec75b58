"""One test per acceptance criterion, each timed against its budget.

Every test records a PASS/FAIL line, printed together at the end of the run.
"""

import random
import time
from contextlib import contextmanager
from itertools import permutations
from math import prod

import pytest

from conftest import ACCEPTANCE_LINES
from rookeuler.boards import (FerrersBoard, all_boards_in_square, rook_eulerian_brute,
                              rook_eulerian_recursive, rook_eulerian_refined, same_phase_stability_probe)
from rookeuler.exactpoly import (IntPolynomial, is_interlacing_sequence, is_log_concave, is_real_rooted,
                                 is_ultra_log_concave, is_unimodal)
from rookeuler.harness import probe_exc_bruhat, probe_multiset_interlace, probe_ulc_weak
from rookeuler.invseq import s_eulerian, search_s_match
from rookeuler.multiset import SkewBoard, enumerate_words, multiset_rook_eulerian
from rookeuler.perms import (OrderKind, Permutation, avoiders_312, board_to_permutation, bruhat_leq,
                             interval_stat_polynomial, lower_interval, permutation_to_board,
                             verify_interval_equals_placements)
from rookeuler.posets import jordan_holder_set, permutation_poset, w_polynomial
from rookeuler.records import approximate_roots

P = IntPolynomial


@contextmanager
def criterion(label, budget=None):
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        dt = time.perf_counter() - t0
        if ok and budget is not None and dt > budget:
            ok = False
            ACCEPTANCE_LINES.append(f"FAIL {label} ({dt:.2f}s, budget {budget}s)")
            pytest.fail(f"{label} took {dt:.2f}s, over {budget}s")
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'} {label} ({dt:.2f}s)")
        print(ACCEPTANCE_LINES[-1])


def _has_root(p, re_, im, digits):
    tol = 10 ** -digits / 2
    for r, i in approximate_roots(p, digits=digits + 4):
        if abs(float(r) - re_) <= tol and abs(abs(float(i)) - im) <= tol:
            return True
    return False


def _no_internal_zeros(p):
    nz = [k for k, c in enumerate(p.coeffs) if c]
    return all(p.coeffs[k] for k in range(nz[0], nz[-1] + 1))


def test_c01_board_polynomial_and_refinement():
    with criterion("[1] Q of 3,4,4,6,7 with refined Q_1..Q_3; enumeration equals recursion", 1.0):
        fam = rook_eulerian_refined((3, 4, 4, 6, 7))
        assert sum(fam, P()) == P([0, 3, 63, 81, 15])
        assert fam == [P([0, 0, 12, 30, 12]), P([0, 0, 21, 30, 3]), P([0, 3, 30, 21])]
        total, rfam = rook_eulerian_recursive((3, 4, 4, 6, 7))
        assert rfam == fam and total == P([0, 3, 63, 81, 15])


def test_c02a_board_polynomial_of_2_3_5_5_5():
    # 1+13t+9t^2+t^3 is the descent reading; the ascent convention fixed by [1] gives its reversal
    with criterion("[2a] Q of 2,3,5,5,5 equals 1+13t+9t^2+t^3", 10.0):
        assert rook_eulerian_brute((2, 3, 5, 5, 5)) == P([1, 13, 9, 1])


def test_c02b_no_s_vector_matches():
    with criterion("[2b] no product-24 reduced s-vector reproduces 1+13t+9t^2+t^3", 10.0):
        res = search_s_match(P([1, 13, 9, 1]))
        assert res.match is None and res.candidates > 0
        assert search_s_match(rook_eulerian_brute((2, 3, 5, 5, 5))).match is None


def test_c03_s_eulerian():
    with criterion("[3] E of (1,2,3) and E(1) = prod(s) for 200 random s"):
        assert s_eulerian((1, 2, 3)) == P([1, 4, 1])
        rng = random.Random(0)
        for _ in range(200):
            s = [rng.randint(1, 8) for _ in range(rng.randint(1, 7))]
            assert s_eulerian(s)(1) == prod(s)


def test_c04_bruhat_descent_polynomial():
    with criterion("[4] Bruhat descent polynomial of 4621735, not real-rooted, roots", 30.0):
        p = interval_stat_polynomial((4, 6, 2, 1, 7, 3, 5), OrderKind.BRUHAT, "des")
        assert p == P([1, 43, 196, 168, 23, 1])
        assert not is_real_rooted(p).is_real_rooted
        assert _has_root(p, -10.8143561, 4.5913096, 5)


def test_c05_bruhat_excedance_polynomial():
    with criterion("[5] Bruhat excedance polynomial of 41568237, not real-rooted", 60.0):
        p = interval_stat_polynomial((4, 1, 5, 6, 8, 2, 3, 7), OrderKind.BRUHAT, "exc")
        assert p == P([1, 21, 140, 290, 127, 5])
        assert not is_real_rooted(p).is_real_rooted


def test_c06_w_polynomial_via_linear_extensions():
    with criterion("[6] W-polynomial of P_pi in S_17 over 7016 extensions, not real-rooted, roots", 60.0):
        pi = (2, 4, 6, 8, 10, 1, 12, 3, 15, 5, 17, 7, 9, 11, 13, 14, 16)
        poset = permutation_poset(pi)
        assert len(jordan_holder_set(poset)) == 7016
        w = w_polynomial(poset)
        assert w == P([1, 32, 336, 1420, 2534, 1946, 658, 86, 3])
        assert not is_real_rooted(w).is_real_rooted
        assert _has_root(w, -1.85884, 0.14976, 4)


def test_c07_board_permutation_figures():
    with criterion("[7] 45566888 <-> 45362871; 2344 -> 2341 with interval = 8 placements"):
        assert board_to_permutation((4, 5, 5, 6, 6, 8, 8, 8)) == Permutation((4, 5, 3, 6, 2, 8, 7, 1))
        assert permutation_to_board((4, 5, 3, 6, 2, 8, 7, 1)) == FerrersBoard((4, 5, 5, 6, 6, 8, 8, 8))
        assert board_to_permutation((2, 3, 4, 4)) == Permutation((2, 3, 4, 1))
        assert len(lower_interval((2, 3, 4, 1))) == 8
        assert verify_interval_equals_placements((2, 3, 4, 4))


def test_c08_multiset_examples():
    with criterion("[8] R(22233,(2,2,1)) over 12 of 30 words; skew board t+6t^2+4t^3+t^4 not real-rooted"):
        board = SkewBoard((2, 2, 2, 3, 3))
        assert len(list(enumerate_words(board, (2, 2, 1)))) == 12
        assert len(list(enumerate_words((5,) * 5, (2, 2, 1)))) == 30
        assert multiset_rook_eulerian(board, (2, 2, 1)) == P([0, 3, 8, 1])
        r = multiset_rook_eulerian(SkewBoard((1, 2, 3, 3, 3, 3), (0, 0, 0, 0, 1, 1)), (2, 2, 2))
        assert r == P([0, 1, 6, 4, 1])
        assert not is_real_rooted(r).is_real_rooted


def test_c09_s6_sweep():
    with criterion("[9] all 720 Bruhat descent polynomials in S_6 real-rooted", 300.0):
        ws = list(permutations(range(1, 7)))
        assert len(ws) == 720
        for w in ws:
            assert is_real_rooted(interval_stat_polynomial(w, OrderKind.BRUHAT, "des")).is_real_rooted, w


def test_c10a_six_square_recursion_and_interlacing():
    with criterion("[10a] recursion = enumeration and Q_l1..Q_1 interlacing on every board in the 6x6 square"):
        n = 0
        for b in all_boards_in_square(6):
            fam = rook_eulerian_refined(b)
            assert rook_eulerian_recursive(b)[1] == fam, b
            assert is_interlacing_sequence(list(reversed(fam))), b
            n += 1
        assert n == 428


def test_c10b_newton_chain():
    with criterion("[10b] real-rooted => ULC => LC => unimodal on generated polynomials"):
        polys = [rook_eulerian_brute(b) for b in all_boards_in_square(5)]
        polys += [interval_stat_polynomial(w, OrderKind.WEAK, "des") for w in permutations(range(1, 6))]
        polys += [s_eulerian(s) for s in [(1, 2, 3, 4), (2, 2, 2), (1, 3, 5, 7), (4, 1, 6)]]
        for p in polys:
            if is_real_rooted(p).is_real_rooted:
                assert is_ultra_log_concave(p), p
            if is_ultra_log_concave(p):
                assert is_log_concave(p), p
            if is_log_concave(p) and _no_internal_zeros(p):
                assert is_unimodal(p), p


def test_c10c_jordan_holder_equals_weak_interval():
    # literal form: the linear extensions of P_pi are the weak interval [id, pi]
    with criterion("[10c] Jordan-Holder set of P_pi equals [id, pi]_W for n <= 5"):
        bad = []
        for n in range(1, 6):
            for w in permutations(range(1, n + 1)):
                jh = set(jordan_holder_set(permutation_poset(w)))
                if jh != set(lower_interval(w, OrderKind.WEAK, guard=None)):
                    bad.append(w)
        assert not bad, f"{len(bad)} permutations differ, first {bad[0]}"


def test_c10d_catalan():
    with criterion("[10d] 312-avoider counts are Catalan numbers for n <= 8"):
        assert [sum(1 for _ in avoiders_312(n)) for n in range(1, 9)] == [1, 2, 5, 14, 42, 132, 429, 1430]


def test_c10e_same_phase():
    with criterion("[10e] same-phase probe passes 50 rays on 3,4,4,6,7 and 5,5,5,5,5"):
        for shape in [(3, 4, 4, 6, 7), (5, 5, 5, 5, 5)]:
            rep = same_phase_stability_probe(shape, 50, seed=0)
            assert rep.ok and rep.passed == 50


def test_c10f_tableau_criterion():
    with criterion("[10f] Bruhat tableau criterion equals closure for n <= 5"):
        for n in range(1, 6):
            ws = list(permutations(range(1, n + 1)))
            for u in ws:
                below = {q.word for q in lower_interval(u, OrderKind.BRUHAT, guard=None)}
                for v in ws:
                    assert bruhat_leq(v, u) == (v in below)


def test_c11_probes():
    with criterion("[11] probes: weak ULC n <= 6, excedance over 312-avoiders in S_7, multiset 4x4"):
        assert probe_ulc_weak(6).ok
        assert probe_exc_bruhat(7).ok
        assert probe_multiset_interlace(4).ok
