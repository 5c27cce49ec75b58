"""Reproduction targets with embedded expected values, and conjecture probes.

Every target returns a list of ``Check`` items; a target passes when all of
its checks do.  Probes return a ``ProbeReport`` whose ``counterexample`` is
``None`` when nothing was found.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import Decimal
from itertools import permutations as _itperms
from typing import Any, Callable, Iterable, Sequence

from .boards import (FerrersBoard, rook_eulerian_brute, rook_eulerian_recursive,
                     rook_eulerian_refined, same_phase_stability_probe)
from .exactpoly import IntPolynomial, is_interlacing_sequence, is_real_rooted, is_ultra_log_concave
from .invseq import search_s_match
from .multiset import Content, SkewBoard, interlacing_probe, enumerate_words, multiset_rook_eulerian
from .perms import (OrderKind, Permutation, StatKind, avoiders_312, board_to_permutation,
                    interval_stat_polynomial, permutation_to_board, verify_interval_equals_placements)
from .posets import (jordan_holder_set, permutation_poset, poset_width, w_polynomial,
                     weak_interval_stat_polynomial, width_two_to_permutation)
from .records import approximate_roots

__all__ = ["Check", "TARGETS", "run_target", "ProbeReport", "PROBES", "worker_count",
           "parallel_map", "EXPECTED", "descent_reading"]

WORKERS_ENV = "ROOKEULER_WORKERS"


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def parallel_map(fn: Callable, items: Iterable, workers: int | None = None) -> list:
    """Order-preserving map; uses worker processes only when more than one is configured."""
    items = list(items)
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


P = IntPolynomial

EXPECTED: dict[str, Any] = {
    "eq1_top": (4, 6, 2, 1, 7, 3, 5),
    "eq1": P([1, 43, 196, 168, 23, 1]),
    "eq1_roots": ("-10.8143561", "4.5913096"),
    "eq3_top": (4, 1, 5, 6, 8, 2, 3, 7),
    "eq3": P([1, 21, 140, 290, 127, 5]),
    "eq5_pi": (2, 4, 6, 8, 10, 1, 12, 3, 15, 5, 17, 7, 9, 11, 13, 14, 16),
    "eq5": P([1, 32, 336, 1420, 2534, 1946, 658, 86, 3]),
    "eq5_roots": ("-1.85884", "0.14976"),
    "eq5_size": 7016,
    # peak variant of the permutation above, completed with a leading 1
    "eq5_peak_pi": (1, 3, 5, 7, 9, 11, 2, 13, 4, 16, 6, 18, 8, 10, 12, 14, 15, 17),
    "thm2_shape": (3, 4, 4, 6, 7),
    "thm2": P([0, 3, 63, 81, 15]),
    "thm2_refined": (P([0, 0, 12, 30, 12]), P([0, 0, 21, 30, 3]), P([0, 3, 30, 21])),
    "thm3_shape": (2, 3, 5, 5, 5),
    "thm3": P([1, 13, 9, 1]),
    "fig2_board": (4, 5, 5, 6, 6, 8, 8, 8),
    "fig2_perm": (4, 5, 3, 6, 2, 8, 7, 1),
    "fig3_board": (2, 3, 4, 4),
    "fig3_perm": (2, 3, 4, 1),
    "fig3_size": 8,
    "ms_shape": (2, 2, 2, 3, 3),
    "ms_content": (2, 2, 1),
    "ms": P([0, 3, 8, 1]),
    "ms_words": 12,
    "ms_all_words": 30,
    "skew_outer": (1, 2, 3, 3, 3, 3),
    "skew_inner": (0, 0, 0, 0, 1, 1),
    "skew_content": (2, 2, 2),
    "skew": P([0, 1, 6, 4, 1]),
    "s6_count": 720,
}


@dataclass
class Check:
    name: str
    expected: Any
    actual: Any
    ok: bool = field(init=False)

    def __post_init__(self):
        self.ok = self.expected == self.actual

    def line(self) -> str:
        if self.ok:
            return f"ok   {self.name}: {_fmt(self.actual)}"
        return f"DIFF {self.name}: expected {_fmt(self.expected)}, got {_fmt(self.actual)}"


def _fmt(v) -> str:
    if isinstance(v, (list, tuple)) and v and all(isinstance(x, IntPolynomial) for x in v):
        return "; ".join(map(str, v))
    return str(v)


def _root_match(p: IntPolynomial, re_: str, im: str, digits: int) -> bool:
    """Some computed root agrees with ``re_ +- im i`` after truncation to ``digits`` decimals."""
    def trunc(s):
        d = Decimal(s)
        q = Decimal(1).scaleb(-digits)
        return (d / q).to_integral_value(rounding="ROUND_DOWN") * q

    want_re, want_im = trunc(re_), trunc(im)
    for r, i in approximate_roots(p, digits=digits + 3):
        if trunc(r) == want_re and trunc(i.lstrip("-")) == want_im.copy_abs():
            return True
    return False


def descent_reading(board) -> IntPolynomial:
    """Descent polynomial of the row-complete placements: ``t^(n-1) Q(1/t)``."""
    q = rook_eulerian_brute(board)
    n = len(board.parts if isinstance(board, FerrersBoard) else board)
    c = list(q.coeffs) + [0] * (n - len(q.coeffs))
    return IntPolynomial(reversed(c))


def target_eq1() -> list[Check]:
    p = interval_stat_polynomial(EXPECTED["eq1_top"], OrderKind.BRUHAT, StatKind.DESCENT)
    return [
        Check("Bruhat descent polynomial of 4621735", EXPECTED["eq1"], p),
        Check("real-rooted", False, is_real_rooted(p).is_real_rooted),
        Check("non-real root pair to 5 decimals", True, _root_match(p, *EXPECTED["eq1_roots"], 5)),
    ]


def target_eq3() -> list[Check]:
    p = interval_stat_polynomial(EXPECTED["eq3_top"], OrderKind.BRUHAT, StatKind.EXCEDANCE)
    return [
        Check("Bruhat excedance polynomial of 41568237", EXPECTED["eq3"], p),
        Check("real-rooted", False, is_real_rooted(p).is_real_rooted),
    ]


def target_eq5() -> list[Check]:
    pi = Permutation(EXPECTED["eq5_pi"])
    poset = permutation_poset(pi)
    ext = jordan_holder_set(poset)
    w = w_polynomial(poset)
    weak = weak_interval_stat_polynomial(pi, StatKind.DESCENT)
    peak = weak_interval_stat_polynomial(EXPECTED["eq5_peak_pi"], StatKind.PEAK)
    return [
        Check("linear extensions of P_pi", EXPECTED["eq5_size"], len(ext)),
        Check("W-polynomial of P_pi", EXPECTED["eq5"], w),
        Check("weak-interval descent polynomial", EXPECTED["eq5"], weak),
        Check("real-rooted", False, is_real_rooted(w).is_real_rooted),
        Check("non-real root pair to 4 decimals", True, _root_match(w, *EXPECTED["eq5_roots"], 4)),
        Check("width of P_pi", 2, poset_width(poset)),
        Check("width-two poset back to pi", pi, width_two_to_permutation(poset)),
        Check("weak-interval peak polynomial of the modified pi", EXPECTED["eq5"], peak),
    ]


def target_thm2_example() -> list[Check]:
    shape = EXPECTED["thm2_shape"]
    fam = rook_eulerian_refined(shape)
    total, rec_fam = rook_eulerian_recursive(shape)
    return [
        Check("Q by enumeration", EXPECTED["thm2"], sum(fam, P())),
        Check("refined Q_1..Q_3", EXPECTED["thm2_refined"], tuple(fam)),
        Check("recursion equals enumeration", tuple(fam), tuple(rec_fam)),
        Check("Q_3, Q_2, Q_1 interlacing", True, is_interlacing_sequence(list(reversed(fam)))),
        Check("real-rooted", True, is_real_rooted(total).is_real_rooted),
    ]


def target_thm3() -> list[Check]:
    """The reference polynomial is the descent reading of the placements; the ascent
    reading is its reversal.  Neither is an s-Eulerian polynomial."""
    shape = EXPECTED["thm3_shape"]
    asc = rook_eulerian_brute(shape)
    des = descent_reading(shape)
    return [
        Check("descent reading of the placements", EXPECTED["thm3"], des),
        Check("no s-vector matches the reference polynomial", None, search_s_match(EXPECTED["thm3"]).match),
        Check("no s-vector matches the ascent reading", None, search_s_match(asc).match),
    ]


def target_fig2() -> list[Check]:
    pi = board_to_permutation(EXPECTED["fig2_board"])
    return [
        Check("board to permutation", Permutation(EXPECTED["fig2_perm"]), pi),
        Check("permutation to board", FerrersBoard(EXPECTED["fig2_board"]), permutation_to_board(pi)),
    ]


def target_fig3() -> list[Check]:
    from .perms import lower_interval
    pi = board_to_permutation(EXPECTED["fig3_board"])
    return [
        Check("board to permutation", Permutation(EXPECTED["fig3_perm"]), pi),
        Check("Bruhat interval size", EXPECTED["fig3_size"], len(lower_interval(pi))),
        Check("interval equals complete placements", True,
              verify_interval_equals_placements(EXPECTED["fig3_board"])),
    ]


def target_multiset_example() -> list[Check]:
    board = SkewBoard(EXPECTED["ms_shape"])
    c = Content(EXPECTED["ms_content"])
    free = SkewBoard((len(c.alpha) + 2,) * board.n)
    return [
        Check("words fitting the board", EXPECTED["ms_words"], sum(1 for _ in enumerate_words(board, c))),
        Check("words with that content", EXPECTED["ms_all_words"], sum(1 for _ in enumerate_words(free, c))),
        Check("R", EXPECTED["ms"], multiset_rook_eulerian(board, c)),
    ]


def target_multiset_skew() -> list[Check]:
    board = SkewBoard(EXPECTED["skew_outer"], EXPECTED["skew_inner"])
    r = multiset_rook_eulerian(board, EXPECTED["skew_content"])
    return [
        Check("skew R", EXPECTED["skew"], r),
        Check("real-rooted", False, is_real_rooted(r).is_real_rooted),
    ]


def _bruhat_des_real_rooted(w) -> bool:
    return is_real_rooted(interval_stat_polynomial(w, OrderKind.BRUHAT, StatKind.DESCENT)).is_real_rooted


def target_s6_scan() -> list[Check]:
    perms = list(_itperms(range(1, 7)))
    ok = parallel_map(_bruhat_des_real_rooted, perms)
    return [
        Check("permutations scanned", EXPECTED["s6_count"], len(perms)),
        Check("Bruhat descent polynomials not real-rooted", [],
              [str(Permutation(w)) for w, good in zip(perms, ok) if not good]),
    ]


TARGETS: dict[str, Callable[[], list[Check]]] = {
    "eq1": target_eq1,
    "eq3": target_eq3,
    "eq5": target_eq5,
    "thm2-example": target_thm2_example,
    "thm3": target_thm3,
    "fig2": target_fig2,
    "fig3": target_fig3,
    "multiset-example": target_multiset_example,
    "multiset-skew": target_multiset_skew,
    "s6-scan": target_s6_scan,
}


def run_target(name: str) -> list[Check]:
    return TARGETS[name]()


# --- probes --------------------------------------------------------------------

@dataclass
class ProbeReport:
    probe: str
    checked: int = 0
    counterexample: dict | None = None
    params: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def _weak_ulc(w) -> bool:
    return is_ultra_log_concave(weak_interval_stat_polynomial(w, StatKind.DESCENT))


def probe_ulc_weak(n: int = 6, seed: int = 0, trials: int = 0, random_n: int = 9) -> ProbeReport:
    """ULC of weak-interval descent polynomials: exhaustive through ``n``, then random samples."""
    rep = ProbeReport("ulc-weak", params={"n": n, "seed": seed, "trials": trials, "random_n": random_n})
    for k in range(1, n + 1):
        perms = list(_itperms(range(1, k + 1)))
        for w, good in zip(perms, parallel_map(_weak_ulc, perms)):
            rep.checked += 1
            if not good:
                rep.counterexample = _ulc_witness(w)
                return rep
    rng = random.Random(seed)
    for _ in range(trials):
        w = list(range(1, random_n + 1))
        rng.shuffle(w)
        rep.checked += 1
        if not _weak_ulc(w):
            rep.counterexample = _ulc_witness(w)
            return rep
    return rep


def _ulc_witness(w) -> dict:
    p = weak_interval_stat_polynomial(w, StatKind.DESCENT)
    return {"permutation": list(w), "polynomial": [str(c) for c in p.coeffs], "failure": "not ULC"}


def _exc_real_rooted(w) -> bool:
    return is_real_rooted(interval_stat_polynomial(w, OrderKind.BRUHAT, StatKind.EXCEDANCE)).is_real_rooted


def probe_exc_bruhat(n: int = 7, avoid_312: bool = True, include: Sequence[Sequence[int]] = ()) -> ProbeReport:
    """Real-rootedness of Bruhat excedance polynomials over 312-avoiders of ``S_n``.

    With ``avoid_312=False`` every permutation of ``S_n`` is scanned, after any
    ``include`` words, which are checked first.
    """
    rep = ProbeReport("exc-bruhat", params={"n": n, "avoid_312": avoid_312})
    extra = [tuple(w) for w in include]
    if avoid_312:
        pool = [p.word for p in avoiders_312(n)]
    else:
        seen = set(extra)
        pool = [w for w in _itperms(range(1, n + 1)) if w not in seen]
    for w in extra + pool:
        rep.checked += 1
        if not _exc_real_rooted(w):
            p = interval_stat_polynomial(w, OrderKind.BRUHAT, StatKind.EXCEDANCE)
            rep.counterexample = {"permutation": list(w), "polynomial": [str(c) for c in p.coeffs],
                                  "failure": "not real-rooted"}
            return rep
    return rep


def probe_multiset_interlace(n: int = 4, seed: int = 0, trials: int = 0) -> ProbeReport:
    r = interlacing_probe(n, seed, trials)
    return ProbeReport("multiset-interlace", r.checked, r.counterexample,
                       {"n": n, "seed": seed, "trials": trials, "skipped_empty": r.skipped_empty})


def probe_same_phase(shapes: Sequence[Sequence[int]] = ((3, 4, 4, 6, 7), (5, 5, 5, 5, 5)),
                     trials: int = 50, seed: int = 0) -> ProbeReport:
    rep = ProbeReport("same-phase", params={"shapes": [list(s) for s in shapes], "trials": trials, "seed": seed})
    for s in shapes:
        r = same_phase_stability_probe(s, trials, seed)
        rep.checked += r.passed
        if not r.ok:
            rep.counterexample = {"shape": list(s), "direction": [str(x) for x in r.counterexample.weights],
                                  "failure": "restriction not real-rooted"}
            return rep
    return rep


PROBES = {
    "ulc-weak": probe_ulc_weak,
    "exc-bruhat": probe_exc_bruhat,
    "multiset-interlace": probe_multiset_interlace,
    "same-phase": probe_same_phase,
}
