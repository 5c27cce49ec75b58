"""Permutations: statistics, 312 patterns, Bruhat and weak order, and the
board <-> 312-avoider correspondence.

Permutations are one-line words on ``1..n``.  Both orders are generated
downward from a top element by swapping inversion pairs; the weak order only
swaps adjacent positions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations as _itperms
from typing import Iterable, Sequence

from . import _kernels
from .boards import FerrersBoard, InvalidBoardError, enumerate_row_complete
from .exactpoly import IntPolynomial

__all__ = [
    "Permutation", "OrderKind", "StatKind", "PatternError", "GuardExceeded",
    "stat", "contains_312", "bruhat_leq", "bruhat_leq_closure", "lower_interval",
    "interval_stat_polynomial", "board_to_permutation", "permutation_to_board",
    "verify_interval_equals_placements", "avoiders_312", "value_inversions",
    "INTERVAL_GUARD",
]

INTERVAL_GUARD = 10 ** 6


class OrderKind(enum.Enum):
    BRUHAT = "bruhat"
    WEAK = "weak"


class StatKind(enum.Enum):
    ASCENT = "asc"
    DESCENT = "des"
    EXCEDANCE = "exc"
    PEAK = "peak"

    @property
    def code(self) -> int:
        return _STAT_CODES[self]

    @classmethod
    def parse(cls, s: "str | StatKind") -> "StatKind":
        if isinstance(s, StatKind):
            return s
        return cls(s.lower())


_STAT_CODES = {
    StatKind.ASCENT: _kernels.ASC,
    StatKind.DESCENT: _kernels.DES,
    StatKind.EXCEDANCE: _kernels.EXC,
    StatKind.PEAK: _kernels.PEAK,
}


class PatternError(ValueError):
    def __init__(self, msg, witness):
        super().__init__(msg)
        self.witness = witness


class GuardExceeded(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.word)
        object.__setattr__(self, "word", w)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"{w} is not a permutation of 1..{len(w)}")

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """``"4,6,2,1,7,3,5"`` or, for n <= 9, ``"4621735"``."""
        text = text.strip().strip("[]")
        if "," in text or " " in text:
            return cls(tuple(int(x) for x in text.replace(",", " ").split()))
        return cls(tuple(int(ch) for ch in text))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @property
    def n(self) -> int:
        return len(self.word)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.word):
            inv[v - 1] = i + 1
        return Permutation(tuple(inv))

    def inversions(self) -> int:
        w = self.word
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    def __len__(self):
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __getitem__(self, i):
        return self.word[i]

    def __str__(self):
        sep = "" if self.n <= 9 else ","
        return sep.join(map(str, self.word))


def _perm(p) -> Permutation:
    return p if isinstance(p, Permutation) else Permutation(tuple(p))


def stat(p, kind) -> int:
    return _kernels.word_stat(_perm(p).word, StatKind.parse(kind).code)


def contains_312(p) -> tuple[bool, tuple[int, int, int] | None]:
    """Return ``(True, (i, j, k))`` with 1-based positions of a 312 pattern, else ``(False, None)``.

    O(n^2): for each pair ``j < k`` with ``w[j] < w[k]`` it suffices to compare
    ``w[k]`` against the largest value left of ``j``.
    """
    w = _perm(p).word
    n = len(w)
    best = 0
    arg = -1
    for j in range(n):
        if best:
            for k in range(j + 1, n):
                if w[j] < w[k] < best:
                    return True, (arg + 1, j + 1, k + 1)
        if w[j] > best:
            best, arg = w[j], j
    return False, None


def avoiders_312(n: int) -> Iterable[Permutation]:
    for w in _itperms(range(1, n + 1)):
        p = Permutation(w)
        if not contains_312(p)[0]:
            yield p


def bruhat_leq(u, v) -> bool:
    """Tableau criterion: every prefix of ``u``, sorted, is dominated by that of ``v``."""
    u, v = _perm(u).word, _perm(v).word
    if len(u) != len(v):
        raise ValueError("permutations of different sizes")
    for k in range(1, len(u)):
        a = sorted(u[:k])
        b = sorted(v[:k])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def bruhat_leq_closure(u, v) -> bool:
    """Definitional check: is ``u`` reachable from ``v`` by inversion-reducing transpositions."""
    u, v = _perm(u), _perm(v)
    if u.n != v.n:
        raise ValueError("permutations of different sizes")
    return u.word in set(_kernels.lower_interval_words(v.word, False, 0))


def _order(order) -> OrderKind:
    return order if isinstance(order, OrderKind) else OrderKind(order)


def lower_interval(top, order=OrderKind.BRUHAT,
                   guard: int | None = INTERVAL_GUARD) -> list[Permutation]:
    """Every ``sigma <= top``, sorted lexicographically."""
    top = _perm(top)
    try:
        words = _kernels.lower_interval_words(top.word, _order(order) is OrderKind.WEAK, guard or 0)
    except OverflowError:
        raise GuardExceeded(f"interval below {top} exceeds {guard} elements") from None
    return [Permutation(w) for w in sorted(words)]


def interval_stat_polynomial(top, order=OrderKind.BRUHAT, kind=StatKind.DESCENT,
                             guard: int | None = INTERVAL_GUARD) -> IntPolynomial:
    """``sum_{sigma <= top} t**stat(sigma)`` over the lower interval."""
    top = _perm(top)
    kind = StatKind.parse(kind)
    try:
        hist = _kernels.lower_interval_stat_counts(
            top.word, _order(order) is OrderKind.WEAK, kind.code, guard or 0)
    except OverflowError:
        raise GuardExceeded(f"interval below {top} exceeds {guard} elements") from None
    return IntPolynomial(hist)


def board_to_permutation(board) -> Permutation:
    """Greedy right-most complete placement; the result avoids 312."""
    board = board if isinstance(board, FerrersBoard) else FerrersBoard(tuple(board))
    parts = board.parts
    n = board.n
    if parts[-1] != n:
        raise InvalidBoardError(f"last row must have exactly {n} cells, got {parts[-1]}")
    used = set()
    word = []
    for p in parts:
        c = p
        while c in used:
            c -= 1
        word.append(c)
        used.add(c)
    perm = Permutation(tuple(word))
    assert not contains_312(perm)[0], "greedy placement produced a 312 pattern"
    return perm


def permutation_to_board(p) -> FerrersBoard:
    """``parts[i] = max(w[0..i])``; defined on 312-avoiders only."""
    p = _perm(p)
    has, wit = contains_312(p)
    if has:
        raise PatternError(f"{p} contains 312 at positions {wit}", wit)
    parts = []
    m = 0
    for x in p.word:
        m = max(m, x)
        parts.append(m)
    return FerrersBoard(tuple(parts))


def verify_interval_equals_placements(board) -> bool:
    board = board if isinstance(board, FerrersBoard) else FerrersBoard(tuple(board))
    top = board_to_permutation(board)
    interval = {q.word for q in lower_interval(top, OrderKind.BRUHAT)}
    placements = {pl.word for pl in enumerate_row_complete(board) if pl.is_complete}
    return interval == placements


def value_inversions(p) -> frozenset[tuple[int, int]]:
    """Pairs of values ``(a, b)``, ``a < b``, with ``b`` appearing before ``a``."""
    w = _perm(p).word
    return frozenset((w[j], w[i]) for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
