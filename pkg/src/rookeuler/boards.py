"""Ferrers boards, row-complete rook placements and rook-Eulerian polynomials.

Boards use weakly increasing parts: row ``i`` (1-based, top to bottom) holds
cells in columns ``1..parts[i-1]``.  A row-complete placement is a word with
distinct entries ``w[i] <= parts[i]``.

Three routes compute the same refined family ``Q_1, ..., Q_{parts[0]}``
(index = column of the first rook): brute force over placements, the
first-row recursion, and its transfer-matrix form.  Tests hold them equal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterator, Sequence

from . import _kernels
from .exactpoly import IntPolynomial, RootednessReport, clear_denominators, is_real_rooted

__all__ = [
    "InvalidBoardError", "FerrersBoard", "RookPlacement", "RayDirection",
    "enumerate_row_complete", "ascent_set", "ascent_count", "rook_eulerian_brute",
    "rook_eulerian_refined", "recursion_step", "transfer_matrix", "apply_transfer_matrix",
    "rook_eulerian_recursive", "multivariate_ray_restriction", "same_phase_stability_probe",
    "SamePhaseReport", "all_boards_in_square",
]

T = IntPolynomial([0, 1])


class InvalidBoardError(ValueError):
    pass


@dataclass(frozen=True)
class FerrersBoard:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise InvalidBoardError("board needs at least one row")
        if any(p < 1 for p in parts):
            raise InvalidBoardError(f"parts must be positive: {parts}")
        if any(a > b for a, b in zip(parts, parts[1:])):
            raise InvalidBoardError(f"parts must be weakly increasing: {parts}")
        bad = [i + 1 for i, p in enumerate(parts) if p < i + 1]
        if bad:
            raise InvalidBoardError(
                f"row {bad[0]} has {parts[bad[0] - 1]} cells; a rook placement needs at least {bad[0]}")

    @classmethod
    def parse(cls, text: str) -> "FerrersBoard":
        """Accept ``"3,4,4,6,7"`` or the compact digit form ``"34467"``."""
        text = text.strip()
        if "," in text or " " in text:
            vals = [int(x) for x in text.replace(",", " ").split()]
        else:
            vals = [int(ch) for ch in text]
        return cls(tuple(vals))

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def first(self) -> int:
        return self.parts[0]

    def placement_count(self) -> int:
        return prod(p - i for i, p in enumerate(self.parts))

    def __str__(self):
        return ",".join(map(str, self.parts))


def _board(b) -> FerrersBoard:
    return b if isinstance(b, FerrersBoard) else FerrersBoard(tuple(b))


@dataclass(frozen=True)
class RookPlacement:
    word: tuple[int, ...]
    board: FerrersBoard

    def __post_init__(self):
        w = tuple(self.word)
        object.__setattr__(self, "word", w)
        if len(w) != self.board.n:
            raise ValueError("placement needs one rook per row")
        if len(set(w)) != len(w):
            raise ValueError(f"two rooks share a column in {w}")
        for i, (c, p) in enumerate(zip(w, self.board.parts)):
            if not 1 <= c <= p:
                raise ValueError(f"rook in row {i + 1} at column {c} is off the board")

    @property
    def is_complete(self) -> bool:
        return set(self.word) == set(range(1, len(self.word) + 1))


@dataclass(frozen=True)
class RayDirection:
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        w = tuple(Fraction(x) for x in self.weights)
        object.__setattr__(self, "weights", w)
        if any(x <= 0 for x in w):
            raise ValueError("ray weights must be strictly positive")


def enumerate_row_complete(board) -> Iterator[RookPlacement]:
    """Stream every row-complete placement, rows top to bottom, columns ascending."""
    board = _board(board)
    parts = board.parts
    n = board.n
    word: list[int] = []
    used = set()

    def rec(row):
        if row == n:
            yield RookPlacement(tuple(word), board)
            return
        for c in range(1, parts[row] + 1):
            if c in used:
                continue
            used.add(c)
            word.append(c)
            yield from rec(row + 1)
            word.pop()
            used.discard(c)

    yield from rec(0)


def ascent_set(word: Sequence[int]) -> set[int]:
    """1-based positions ``i`` with ``word[i] < word[i+1]``."""
    return {i + 1 for i in range(len(word) - 1) if word[i] < word[i + 1]}


def ascent_count(word: Sequence[int]) -> int:
    return sum(1 for i in range(len(word) - 1) if word[i] < word[i + 1])


def rook_eulerian_refined(board) -> list[IntPolynomial]:
    """``[Q_1, ..., Q_{parts[0]}]``: ascent polynomials split by the first rook's column."""
    board = _board(board)
    return [IntPolynomial(row) for row in _kernels.rook_ascent_table(board.parts)]


def rook_eulerian_brute(board) -> IntPolynomial:
    """Ascent-generating polynomial over all row-complete placements."""
    return sum(rook_eulerian_refined(board), IntPolynomial())


def recursion_step(lower: Sequence[IntPolynomial], m: int) -> list[IntPolynomial]:
    """Refined family of ``(m, l1+1, ..., ln+1)`` from the refined family of ``l``.

    ``Q+_i = sum_{j<i} Q_j + t * sum_{j>=i} Q_j`` for ``i = 1..m``.
    """
    l1 = len(lower)
    if not 1 <= m <= l1 + 1:
        raise ValueError(f"first row length {m} must lie in 1..{l1 + 1}")
    prefix = [IntPolynomial()]
    for q in lower:
        prefix.append(prefix[-1] + q)
    total = prefix[-1]
    return [prefix[i - 1] + (total - prefix[i - 1]).shift(1) for i in range(1, m + 1)]


def transfer_matrix(l1: int, m: int) -> list[list[IntPolynomial]]:
    """The ``m x l1`` matrix ``G`` with ``g[i][j] = t`` iff ``j <= l1 - (i - 1)`` (1-based).

    Row ``i`` produces ``Q+_i``; column ``j`` multiplies ``Q_{l1 - j + 1}``,
    i.e. the reversed input vector.
    """
    one = IntPolynomial([1])
    return [[T if j <= l1 - (i - 1) else one for j in range(1, l1 + 1)]
            for i in range(1, m + 1)]


def apply_transfer_matrix(lower: Sequence[IntPolynomial], m: int) -> list[IntPolynomial]:
    l1 = len(lower)
    if not 1 <= m <= l1 + 1:
        raise ValueError(f"first row length {m} must lie in 1..{l1 + 1}")
    G = transfer_matrix(l1, m)
    rev = list(reversed(lower))
    return [sum((g * q for g, q in zip(row, rev)), IntPolynomial()) for row in G]


def _peel(parts: tuple[int, ...]) -> list[int]:
    """First-row lengths met while peeling; the last entry is the base single row."""
    firsts = []
    while len(parts) > 1:
        firsts.append(parts[0])
        parts = tuple(p - 1 for p in parts[1:])
    firsts.append(parts[0])
    return firsts


def rook_eulerian_recursive(board) -> tuple[IntPolynomial, list[IntPolynomial]]:
    """``(Q, [Q_1, ...])`` built bottom-up by the first-row recursion.

    Peeling the first row and first-rook column from ``(m, l1+1, ..., ln+1)``
    leaves ``(l1, ..., ln)``; the process ends at a single row ``(a)``, whose
    refined family is ``a`` copies of 1.
    """
    board = _board(board)
    firsts = _peel(board.parts)
    base = firsts.pop()
    family = [IntPolynomial([1])] * base
    for m in reversed(firsts):
        assert m <= len(family) + 1, "peeling produced an invalid board"
        family = recursion_step(family, m)
    return sum(family, IntPolynomial()), family


def _ascent_masks(board: FerrersBoard) -> dict[int, int]:
    counts: dict[int, int] = {}
    for pl in enumerate_row_complete(board):
        w = pl.word
        mask = 0
        for i in range(len(w) - 1):
            if w[i] < w[i + 1]:
                mask |= 1 << i
        counts[mask] = counts.get(mask, 0) + 1
    return counts


def multivariate_ray_restriction(board, direction) -> tuple[Fraction, ...]:
    """Coefficients of ``sum_sigma prod_{i in Asc} (mu_i t)``, lowest degree first."""
    board = _board(board)
    if not isinstance(direction, RayDirection):
        direction = RayDirection(tuple(direction))
    if len(direction.weights) != board.n - 1:
        raise ValueError(f"direction needs {board.n - 1} weights, got {len(direction.weights)}")
    return _ray_coeffs(_ascent_masks(board), direction.weights, board.n)


def _ray_coeffs(masks: dict[int, int], mu: Sequence[Fraction], n: int) -> tuple[Fraction, ...]:
    coeffs = [Fraction(0)] * n
    for mask, cnt in masks.items():
        w = Fraction(cnt)
        k = 0
        for i in range(n - 1):
            if mask >> i & 1:
                w *= mu[i]
                k += 1
        coeffs[k] += w
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass
class SamePhaseReport:
    board: FerrersBoard
    trials: int
    passed: int
    counterexample: RayDirection | None = None
    counterexample_report: RootednessReport | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def same_phase_stability_probe(board, trials: int, seed: int = 0, max_weight: int = 20) -> SamePhaseReport:
    """Sample positive rational rays and check each restriction for real roots.

    A falsifier only: passing every sampled ray proves nothing about the
    rays that were not sampled.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    board = _board(board)
    rng = random.Random(seed)
    masks = _ascent_masks(board)
    passed = 0
    for _ in range(trials):
        d = RayDirection(tuple(Fraction(rng.randint(1, max_weight), rng.randint(1, max_weight))
                               for _ in range(board.n - 1)))
        rep = is_real_rooted(clear_denominators(_ray_coeffs(masks, d.weights, board.n)))
        if not rep.is_real_rooted:
            return SamePhaseReport(board, trials, passed, d, rep)
        passed += 1
    return SamePhaseReport(board, trials, passed)


def all_boards_in_square(size: int, require_last_full: bool = False) -> Iterator[FerrersBoard]:
    """Every valid board with ``n`` rows, ``1 <= n <= size``, and parts at most ``size``."""
    def rec(prefix, n):
        i = len(prefix)
        if i == n:
            if not require_last_full or prefix[-1] == n:
                yield FerrersBoard(tuple(prefix))
            return
        lo = max(prefix[-1] if prefix else 1, i + 1)
        for p in range(lo, size + 1):
            prefix.append(p)
            yield from rec(prefix, n)
            prefix.pop()

    for n in range(1, size + 1):
        yield from rec([], n)
