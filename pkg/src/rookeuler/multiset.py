"""Multiset rook-Eulerian polynomials on skew Ferrers boards.

A word ``w`` fits the skew board ``lambda / mu`` when ``mu_i < w_i <= lambda_i``
for every row; its content counts how often each letter occurs.  Ascents are
strict, so equal neighbours never count.

Unlike rook placements, letters may repeat, so the outer shape only has to be
positive and weakly increasing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from math import factorial, prod
from typing import Iterator, Sequence

from . import _kernels
from .exactpoly import IntPolynomial, interlaces, is_interlacing_sequence, is_real_rooted

__all__ = [
    "InvalidSkewBoardError", "SkewBoard", "Content", "enumerate_words",
    "multiset_rook_eulerian", "multiset_refined", "present_refined",
    "multiset_recursion_step", "InterlacingProbeReport", "interlacing_probe",
    "all_shapes_in_square", "all_contents", "multinomial",
]


class InvalidSkewBoardError(ValueError):
    pass


def _weakly_increasing(xs: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(xs, xs[1:]))


@dataclass(frozen=True)
class SkewBoard:
    outer: tuple[int, ...]
    inner: tuple[int, ...] = ()

    def __post_init__(self):
        outer = tuple(int(x) for x in self.outer)
        inner = tuple(int(x) for x in self.inner)
        if not outer:
            raise InvalidSkewBoardError("board needs at least one row")
        if len(inner) > len(outer):
            raise InvalidSkewBoardError("inner shape has more rows than the outer shape")
        # rows run top to bottom with increasing lengths, so a short inner shape sits at the bottom
        inner = (0,) * (len(outer) - len(inner)) + inner
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        if any(x < 1 for x in outer):
            raise InvalidSkewBoardError(f"outer parts must be positive: {outer}")
        if not _weakly_increasing(outer):
            raise InvalidSkewBoardError(f"outer parts must be weakly increasing: {outer}")
        if any(x < 0 for x in inner) or not _weakly_increasing(inner):
            raise InvalidSkewBoardError(f"inner parts must be nonnegative and weakly increasing: {inner}")
        for i, (a, b) in enumerate(zip(inner, outer)):
            if a >= b:
                raise InvalidSkewBoardError(f"row {i + 1} is empty: inner {a} >= outer {b}")

    @property
    def n(self) -> int:
        return len(self.outer)

    @property
    def is_straight(self) -> bool:
        return not any(self.inner)

    def __str__(self):
        s = ",".join(map(str, self.outer))
        if not self.is_straight:
            s += "/" + ",".join(map(str, self.inner))
        return s


@dataclass(frozen=True)
class Content:
    alpha: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.alpha)
        object.__setattr__(self, "alpha", a)
        if any(x < 0 for x in a):
            raise ValueError(f"content entries must be nonnegative: {a}")

    @property
    def total(self) -> int:
        return sum(self.alpha)

    def add_letter(self, i: int) -> "Content":
        a = list(self.alpha) + [0] * max(0, i - len(self.alpha))
        a[i - 1] += 1
        return Content(tuple(a))

    def __str__(self):
        return ",".join(map(str, self.alpha))


def _coerce(board, content) -> tuple[SkewBoard, Content]:
    board = board if isinstance(board, SkewBoard) else SkewBoard(tuple(board))
    content = content if isinstance(content, Content) else Content(tuple(content))
    if content.total != board.n:
        raise ValueError(f"content sums to {content.total} but the board has {board.n} rows")
    return board, content


def enumerate_words(board, content) -> Iterator[tuple[int, ...]]:
    """Every fitting word with the given content, lexicographic order."""
    board, content = _coerce(board, content)
    rem = list(content.alpha)
    word: list[int] = []

    def rec(row):
        if row == board.n:
            yield tuple(word)
            return
        for c in range(board.inner[row] + 1, min(board.outer[row], len(rem)) + 1):
            if rem[c - 1]:
                rem[c - 1] -= 1
                word.append(c)
                yield from rec(row + 1)
                word.pop()
                rem[c - 1] += 1

    yield from rec(0)


def multiset_refined(board, content) -> list[IntPolynomial]:
    """``[R_1, ..., R_{lambda_1}]`` split by first letter; letters that cannot start a word give 0."""
    board, content = _coerce(board, content)
    table = _kernels.multiset_ascent_table(board.outer, board.inner, content.alpha)
    return [IntPolynomial(row) for row in table[:board.outer[0]]]


def present_refined(family: Sequence[IntPolynomial]) -> list[tuple[int, IntPolynomial]]:
    """``(letter, R_j)`` for the letters that actually start some word."""
    return [(j, q) for j, q in enumerate(family, start=1) if q]


def multiset_rook_eulerian(board, content) -> IntPolynomial:
    return sum(multiset_refined(board, content), IntPolynomial())


def multiset_recursion_step(lower: Sequence[IntPolynomial], m: int, i: int) -> IntPolynomial:
    """``R_i`` of ``((m, lambda), alpha + e_i)`` from the refined family of ``(lambda, alpha)``.

    ``R_i(+) = sum_{j<=i} R_j + t * sum_{j>i} R_j``; ``lower`` has one entry per
    column of the old first row, so ``len(lower) == lambda_1``.
    """
    l1 = len(lower)
    if not 1 <= i <= m <= l1:
        raise ValueError(f"need 1 <= i <= m <= lambda_1, got i={i}, m={m}, lambda_1={l1}")
    head = sum(lower[:i], IntPolynomial())
    tail = sum(lower[i:], IntPolynomial())
    return head + tail.shift(1)


def multinomial(alpha: Sequence[int]) -> int:
    return factorial(sum(alpha)) // prod(factorial(a) for a in alpha)


def all_shapes_in_square(size: int) -> Iterator[tuple[int, ...]]:
    """Weakly increasing positive shapes with at most ``size`` rows and parts at most ``size``."""
    def rec(prefix, n):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for p in range(prefix[-1] if prefix else 1, size + 1):
            prefix.append(p)
            yield from rec(prefix, n)
            prefix.pop()

    for n in range(1, size + 1):
        yield from rec([], n)


def all_contents(n: int, letters: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``n`` into ``letters`` parts, trailing zeros trimmed."""
    for a in product(range(n + 1), repeat=letters):
        if sum(a) == n:
            a = list(a)
            while a and a[-1] == 0:
                a.pop()
            yield tuple(a)


@dataclass
class InterlacingProbeReport:
    checked: int = 0
    skipped_empty: int = 0
    counterexample: dict | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def _check_instance(shape, alpha) -> dict | None:
    fam = multiset_refined(SkewBoard(shape), Content(alpha))
    present = [q for _, q in present_refined(fam)]
    total = sum(present, IntPolynomial())
    if not total:
        return {}
    rep = is_real_rooted(total)
    if not rep.is_real_rooted:
        return {"shape": list(shape), "content": list(alpha), "failure": "R not real-rooted",
                "polynomial": list(total.coeffs)}
    seq = list(reversed(present))
    if not is_interlacing_sequence(seq):
        bad = next((a, b) for a in range(len(seq)) for b in range(a + 1, len(seq))
                   if not interlaces(seq[a], seq[b]))
        return {"shape": list(shape), "content": list(alpha), "failure": "refined family not interlacing",
                "pair": [list(seq[bad[0]].coeffs), list(seq[bad[1]].coeffs)]}
    return None


def interlacing_probe(max_n: int = 4, seed: int = 0, trials: int = 0,
                      random_size: int = 6) -> InterlacingProbeReport:
    """Real-rootedness of ``R`` and interlacing of ``(R_{lambda_1}, ..., R_1)`` on straight shapes.

    Exhaustive over shapes in the ``max_n`` square and every content, then
    ``trials`` random instances drawn from the ``random_size`` square.
    """
    rep = InterlacingProbeReport()

    def run(shape, alpha) -> bool:
        bad = _check_instance(shape, alpha)
        if bad == {}:
            rep.skipped_empty += 1
            return True
        rep.checked += 1
        if bad is not None:
            rep.counterexample = bad
            return False
        return True

    for shape in all_shapes_in_square(max_n):
        for alpha in all_contents(len(shape), shape[-1]):
            if not run(shape, alpha):
                return rep
    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.randint(1, random_size)
        shape = tuple(sorted(rng.randint(1, random_size) for _ in range(n)))
        cuts = sorted(rng.randint(0, n) for _ in range(shape[-1] - 1))
        alpha = [b - a for a, b in zip([0] + cuts, cuts + [n])]
        if not run(shape, tuple(alpha)):
            return rep
    return rep
