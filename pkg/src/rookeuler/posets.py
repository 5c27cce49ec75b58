"""Finite posets on ``1..n``, permutation posets, Jordan-Holder sets and W-polynomials.

``P_sigma`` orders ``i <= j`` when ``i <= j`` and ``sigma_i <= sigma_j``.  Its
Jordan-Holder set consists of the words listing ``1..n`` in which ``i`` comes
before ``j`` whenever ``i <= j`` in the poset.

With those conventions the Jordan-Holder set of ``P_sigma`` is the weak lower
interval of ``sigma^{-1}`` (not of ``sigma``; ``231`` separates the two).  The
descent polynomials of both intervals coincide, which is what the weak-order
fast path relies on.  ``weak_order_fast_path_valid`` re-checks this
exhaustively for small ``n`` before the fast path is used.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _itperms
from typing import Sequence

import networkx as nx

from . import _kernels
from .exactpoly import IntPolynomial
from .perms import (INTERVAL_GUARD, GuardExceeded, OrderKind, Permutation, StatKind,
                    interval_stat_polynomial, lower_interval)

__all__ = [
    "FinitePoset", "PosetError", "permutation_poset", "jordan_holder_set",
    "linear_extension_count", "w_polynomial", "w_polynomial_dp",
    "verify_jordan_holder_is_weak_interval", "poset_width", "poset_width_brute",
    "width_two_to_permutation", "weak_interval_stat_polynomial",
    "weak_order_fast_path_valid", "longest_decreasing_subsequence",
]


class PosetError(ValueError):
    pass


@dataclass(frozen=True)
class FinitePoset:
    """Partial order on ``1..n``; ``leq[i][j]`` (0-based) means ``i+1 <= j+1`` in the poset."""

    n: int
    leq: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        n = self.n
        leq = tuple(tuple(bool(x) for x in row) for row in self.leq)
        object.__setattr__(self, "leq", leq)
        if len(leq) != n or any(len(r) != n for r in leq):
            raise PosetError(f"relation matrix must be {n}x{n}")
        for i in range(n):
            if not leq[i][i]:
                raise PosetError(f"not reflexive at {i + 1}")
            for j in range(n):
                if i != j and leq[i][j] and leq[j][i]:
                    raise PosetError(f"not antisymmetric: {i + 1} and {j + 1}")
                if leq[i][j]:
                    for k in range(n):
                        if leq[j][k] and not leq[i][k]:
                            raise PosetError(f"not transitive: {i + 1} <= {j + 1} <= {k + 1}")

    @classmethod
    def from_relations(cls, n: int, pairs) -> "FinitePoset":
        """Transitive-reflexive closure of the 1-based cover pairs ``(a, b)``, ``a < b``."""
        m = [[i == j for j in range(n)] for i in range(n)]
        for a, b in pairs:
            m[a - 1][b - 1] = True
        for k in range(n):
            for i in range(n):
                if m[i][k]:
                    row_k = m[k]
                    row_i = m[i]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True
        return cls(n, tuple(map(tuple, m)))

    @classmethod
    def chain(cls, n: int) -> "FinitePoset":
        return cls(n, tuple(tuple(i <= j for j in range(n)) for i in range(n)))

    @classmethod
    def antichain(cls, n: int) -> "FinitePoset":
        return cls(n, tuple(tuple(i == j for j in range(n)) for i in range(n)))

    def less(self, a: int, b: int) -> bool:
        """Strict order on 1-based labels."""
        return a != b and self.leq[a - 1][b - 1]

    def comparable(self, a: int, b: int) -> bool:
        return self.leq[a - 1][b - 1] or self.leq[b - 1][a - 1]

    def is_naturally_labeled(self) -> bool:
        return all(not self.leq[i][j] for i in range(self.n) for j in range(i))

    def predecessor_masks(self) -> list[int]:
        """Bit ``p`` of entry ``e`` is set when ``p < e`` strictly (0-based)."""
        return [sum(1 << p for p in range(self.n) if p != e and self.leq[p][e])
                for e in range(self.n)]


def _perm(p) -> Permutation:
    return p if isinstance(p, Permutation) else Permutation(tuple(p))


def permutation_poset(p) -> FinitePoset:
    w = _perm(p).word
    n = len(w)
    return FinitePoset(n, tuple(tuple(i <= j and w[i] <= w[j] for j in range(n))
                                for i in range(n)))


@lru_cache(maxsize=64)
def _down_set_table(pred: tuple[int, ...]):
    """``f(mask, last)``: descent polynomial (as a coefficient list) of the completions."""
    n = len(pred)
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def f(mask: int, last: int) -> tuple[int, ...]:
        if mask == full:
            return (1,)
        acc: list[int] = []
        for e in range(n):
            if not mask >> e & 1 and pred[e] & ~mask == 0:
                bump = 1 if last > e else 0
                sub = f(mask | 1 << e, e)
                need = len(sub) + bump
                if len(acc) < need:
                    acc.extend([0] * (need - len(acc)))
                for k, c in enumerate(sub):
                    acc[k + bump] += c
        return tuple(acc)

    return f


def w_polynomial_dp(P: FinitePoset) -> IntPolynomial:
    """Count-only route: memoized over (down-set, last element), no word is materialized."""
    f = _down_set_table(tuple(P.predecessor_masks()))
    return IntPolynomial(f(0, -1))


def linear_extension_count(P: FinitePoset) -> int:
    """Number of linear extensions, memoized over down-sets only."""
    pred = P.predecessor_masks()
    n = P.n
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def g(mask: int) -> int:
        if mask == full:
            return 1
        return sum(g(mask | 1 << e) for e in range(n)
                   if not mask >> e & 1 and pred[e] & ~mask == 0)

    return g(0)


def _check_guard(P: FinitePoset, guard: int | None):
    if guard is not None:
        size = linear_extension_count(P)
        if size > guard:
            raise GuardExceeded(f"poset has {size} linear extensions, above the guard {guard}")


def jordan_holder_set(P: FinitePoset, guard: int | None = INTERVAL_GUARD) -> list[Permutation]:
    """Linear extensions as words, lexicographic order."""
    _check_guard(P, guard)
    return [Permutation(w) for w in _kernels.linear_extension_words(P.n, P.predecessor_masks())]


def w_polynomial(P: FinitePoset, guard: int | None = INTERVAL_GUARD) -> IntPolynomial:
    return _stat_over_extensions(P, StatKind.DESCENT, guard)


def _stat_over_extensions(P: FinitePoset, kind: StatKind, guard: int | None) -> IntPolynomial:
    _check_guard(P, guard)
    return IntPolynomial(_kernels.linear_extension_stat_counts(P.n, P.predecessor_masks(), kind.code))


def verify_jordan_holder_is_weak_interval(p) -> bool:
    """Is the Jordan-Holder set of ``P_p`` the weak lower interval of ``p^{-1}``?"""
    p = _perm(p)
    jh = {q.word for q in jordan_holder_set(permutation_poset(p), guard=None)}
    weak = {q.word for q in lower_interval(p.inverse(), OrderKind.WEAK, guard=None)}
    return jh == weak


_FAST_PATH_CHECK_N = 5
_fast_path_ok: bool | None = None


def weak_order_fast_path_valid() -> bool:
    """Exhaustive Jordan-Holder / weak-interval check through ``n = 5``, run once."""
    global _fast_path_ok
    if _fast_path_ok is None:
        _fast_path_ok = all(verify_jordan_holder_is_weak_interval(w)
                            for n in range(1, _FAST_PATH_CHECK_N + 1)
                            for w in _itperms(range(1, n + 1)))
    return _fast_path_ok


def weak_interval_stat_polynomial(p, kind=StatKind.DESCENT,
                                  guard: int | None = INTERVAL_GUARD) -> IntPolynomial:
    """``sum t**stat(sigma)`` over ``sigma <=_W p``.

    Enumerates linear extensions of ``P_{p^{-1}}`` (same set as the interval)
    once the convention check has passed; otherwise falls back to BFS.
    """
    p = _perm(p)
    kind = StatKind.parse(kind)
    if weak_order_fast_path_valid():
        return _stat_over_extensions(permutation_poset(p.inverse()), kind, guard)
    return interval_stat_polynomial(p, OrderKind.WEAK, kind, guard)


def poset_width(P: FinitePoset) -> int:
    """Largest antichain, as ``n`` minus a maximum matching in the strict-order split graph."""
    if P.n == 0:
        return 0
    g = nx.Graph()
    left = [("a", i) for i in range(P.n)]
    g.add_nodes_from(left)
    g.add_nodes_from(("b", j) for j in range(P.n))
    g.add_edges_from((("a", i), ("b", j)) for i in range(P.n) for j in range(P.n)
                     if i != j and P.leq[i][j])
    matching = nx.bipartite.hopcroft_karp_matching(g, top_nodes=left)
    return P.n - len(matching) // 2


def poset_width_brute(P: FinitePoset) -> int:
    """Exponential oracle: extend antichains one element at a time."""
    best = 0

    def rec(start, chosen):
        nonlocal best
        best = max(best, len(chosen))
        for e in range(start, P.n):
            if all(not P.leq[c][e] and not P.leq[e][c] for c in chosen):
                chosen.append(e)
                rec(e + 1, chosen)
                chosen.pop()

    rec(0, [])
    return best


def longest_decreasing_subsequence(w: Sequence[int]) -> int:
    best = [1] * len(w)
    for j in range(len(w)):
        for i in range(j):
            if w[i] > w[j]:
                best[j] = max(best[j], best[i] + 1)
    return max(best, default=0)


def width_two_to_permutation(P: FinitePoset) -> Permutation:
    """A permutation ``pi`` with ``P_pi == P`` for a naturally labeled poset of width <= 2.

    Values follow the labels along comparable pairs and reverse them along
    incomparable ones; the resulting order is checked by rebuilding ``P_pi``.
    """
    if not P.is_naturally_labeled():
        raise PosetError("poset is not naturally labeled")
    w = poset_width(P)
    if w > 2:
        raise PosetError(f"poset has width {w}, need at most 2")
    n = P.n
    # element a gets a smaller value than b iff (a < b and comparable) or (a > b and incomparable)
    before = [[(a < b) == P.comparable(a + 1, b + 1) if a != b else False for b in range(n)]
              for a in range(n)]
    rank = [sum(1 for b in range(n) if before[b][a]) for a in range(n)]
    if sorted(rank) != list(range(n)):
        raise PosetError("labeling does not induce a total order on values")
    pi = Permutation(tuple(r + 1 for r in rank))
    if permutation_poset(pi) != P:
        raise PosetError(f"round trip failed for candidate {pi}")
    return pi
