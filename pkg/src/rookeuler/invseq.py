"""s-inversion sequences and s-Eulerian polynomials.

An s-inversion sequence has ``0 <= e_i < s_i``.  Position ``i`` (0-based,
with the phantom ``e_0 = 0, s_0 = 1`` in front) is an ascent when
``e_i / s_i < e_{i+1} / s_{i+1}``; comparisons are cross-multiplied.

``s_eulerian`` is a transfer DP over the last entry; ``s_eulerian_brute``
enumerates and is kept as the test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Iterator, Sequence

from .exactpoly import IntPolynomial

__all__ = [
    "SVector", "InversionSequence", "ascent_statistic", "s_eulerian", "s_eulerian_brute",
    "reduce_consecutive_ones", "candidate_vectors", "search_s_match", "SearchResult",
    "PRODUCT_GUARD",
]

PRODUCT_GUARD = 10 ** 7


@dataclass(frozen=True)
class SVector:
    s: tuple[int, ...]

    def __post_init__(self):
        s = tuple(int(x) for x in self.s)
        object.__setattr__(self, "s", s)
        if any(x < 1 for x in s):
            raise ValueError(f"s-vector entries must be positive: {s}")

    def __len__(self):
        return len(self.s)

    def size(self) -> int:
        return prod(self.s)


@dataclass(frozen=True)
class InversionSequence:
    e: tuple[int, ...]
    parent: SVector

    def __post_init__(self):
        e = tuple(self.e)
        object.__setattr__(self, "e", e)
        if len(e) != len(self.parent):
            raise ValueError("length mismatch between sequence and s-vector")
        for x, s in zip(e, self.parent.s):
            if not 0 <= x < s:
                raise ValueError(f"entry {x} outside [0, {s})")


def _sv(s) -> SVector:
    return s if isinstance(s, SVector) else SVector(tuple(s))


def _ratio_ascents(e: Sequence[int], s: Sequence[int]) -> int:
    asc = 0
    pe, ps = 0, 1
    for x, sx in zip(e, s):
        if pe * sx < x * ps:
            asc += 1
        pe, ps = x, sx
    return asc


def ascent_statistic(e: InversionSequence) -> int:
    return _ratio_ascents(e.e, e.parent.s)


def s_eulerian_brute(s) -> IntPolynomial:
    s = _sv(s)
    hist: dict[int, int] = {}
    for e in product(*(range(x) for x in s.s)):
        a = _ratio_ascents(e, s.s)
        hist[a] = hist.get(a, 0) + 1
    return IntPolynomial.from_counts(hist)


def s_eulerian(s, guard: int | None = PRODUCT_GUARD) -> IntPolynomial:
    """``E^(s)(t)`` by dynamic programming over the value of the last entry."""
    s = _sv(s)
    if guard is not None and s.size() > guard:
        raise ValueError(f"product of s is {s.size()}, above the guard {guard}")
    # state: last (e, s) pair -> coefficient list by ascents
    states: dict[int, list[int]] = {0: [1]}
    prev_s = 1
    for sx in s.s:
        nxt: dict[int, list[int]] = {}
        for pe, poly in states.items():
            for x in range(sx):
                bump = 1 if pe * sx < x * prev_s else 0
                acc = nxt.setdefault(x, [])
                need = len(poly) + bump
                if len(acc) < need:
                    acc.extend([0] * (need - len(acc)))
                for k, c in enumerate(poly):
                    acc[k + bump] += c
        states = nxt
        prev_s = sx
    total = IntPolynomial()
    for poly in states.values():
        total = total + IntPolynomial(poly)
    return total


def reduce_consecutive_ones(s) -> SVector:
    out: list[int] = []
    for x in _sv(s).s:
        if x == 1 and out and out[-1] == 1:
            continue
        out.append(x)
    return SVector(tuple(out))


def _ordered_factorizations(n: int) -> Iterator[tuple[int, ...]]:
    """Ordered factorizations of ``n`` into factors >= 2, lexicographic."""
    if n == 1:
        yield ()
        return
    for d in range(2, n + 1):
        if n % d == 0:
            for rest in _ordered_factorizations(n // d):
                yield (d,) + rest


def _omega(n: int) -> int:
    k, p = 0, 2
    while p * p <= n:
        while n % p == 0:
            n //= p
            k += 1
        p += 1
    return k + (n > 1)


def candidate_vectors(total: int, max_len: int | None = None) -> Iterator[SVector]:
    """Every 1-reduced s-vector with entry product ``total``.

    Factors >= 2 are interleaved with optional single 1s in each of the
    ``k + 1`` gaps (before, between, after), so lengths stay below ``2k + 2``.
    """
    if total < 1:
        return
    if max_len is None:
        k = _omega(total)
        max_len = 2 * k + 1
    if total == 1:
        yield SVector((1,))
        return
    for fac in _ordered_factorizations(total):
        gaps = len(fac) + 1
        for mask in range(1 << gaps):
            s: list[int] = []
            for g in range(gaps):
                if mask >> g & 1:
                    s.append(1)
                if g < len(fac):
                    s.append(fac[g])
            if len(s) <= max_len:
                yield SVector(tuple(s))


@dataclass
class SearchResult:
    target: IntPolynomial
    match: SVector | None
    candidates: int


def search_s_match(target: IntPolynomial, max_len: int | None = None) -> SearchResult:
    """Look for an s-vector whose s-Eulerian polynomial equals ``target``.

    Only vectors with ``prod(s) == target(1)`` can match; runs of 1s collapse
    without changing the polynomial, so the reduced candidates are exhaustive.
    """
    if any(c < 0 for c in target.coeffs):
        raise ValueError("target must have nonnegative coefficients")
    total = target(1)
    if total < 1:
        raise ValueError("target(1) must be positive")
    n = 0
    for s in candidate_vectors(total, max_len):
        n += 1
        if s_eulerian(s, guard=None) == target:
            return SearchResult(target, s, n)
    return SearchResult(target, None, n)
