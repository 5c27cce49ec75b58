"""Exact univariate polynomials over the integers and real-root decision procedures.

Everything in here is exact: Sturm chains are built from subresultant
pseudo-remainder sequences so intermediate coefficients stay integral, and
bisection points are rationals evaluated homogeneously without ever forming a
``Fraction`` per coefficient.

>>> p = IntPolynomial([1, 13, 9, 1])
>>> str(p)
't^3 + 9t^2 + 13t + 1'
>>> p(1)
24
>>> is_real_rooted(p).is_real_rooted
True
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd as _igcd
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]

__all__ = [
    "IntPolynomial", "RationalInterval", "RootednessReport", "NotRealRootedError",
    "add", "multiply", "evaluate_at", "pseudo_remainder", "subresultant_prs",
    "poly_gcd", "squarefree_part", "squarefree_decomposition", "sturm_chain",
    "sturm_real_root_count", "is_real_rooted", "isolate_roots", "interlaces",
    "is_interlacing_sequence", "is_log_concave", "is_ultra_log_concave",
    "is_unimodal", "clear_denominators",
]


class IntPolynomial:
    """Dense polynomial with arbitrary-precision integer coefficients.

    ``coeffs[k]`` is the coefficient of ``t**k``.  Trailing zeros are trimmed
    on construction, so the zero polynomial has an empty coefficient tuple.
    Instances are immutable and hashable.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "_c", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def from_counts(cls, counts: dict[int, int] | Sequence[int]) -> "IntPolynomial":
        """Build sum(counts[k] * t**k) from a histogram (dict or list)."""
        if isinstance(counts, dict):
            if not counts:
                return cls()
            out = [0] * (max(counts) + 1)
            for k, v in counts.items():
                out[k] += v
            return cls(out)
        return cls(counts)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    @property
    def lc(self) -> int:
        return self._c[-1] if self._c else 0

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __getitem__(self, k):
        if isinstance(k, slice):
            return self._c[k]
        return self._c[k] if 0 <= k < len(self._c) else 0

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == IntPolynomial([other])._c
        return NotImplemented

    def __hash__(self):
        return hash(("IntPolynomial", self._c))

    def __repr__(self):
        return f"IntPolynomial({list(self._c)})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "t") -> str:
        """Descending-power algebraic notation, e.g. ``t^3 + 9t^2 + 13t + 1``."""
        if not self._c:
            return "0"
        parts = []
        for k in range(len(self._c) - 1, -1, -1):
            a = self._c[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                coef = "" if mag == 1 else str(mag)
                body = coef + (var if k == 1 else f"{var}^{k}")
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-x for x in self._c)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(x * other for x in self._c)
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntPolynomial([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int = 1) -> "IntPolynomial":
        """Multiply by ``t**k``."""
        if not self._c:
            return self
        return IntPolynomial((0,) * k + self._c)

    def __call__(self, x: Rational) -> Rational:
        """Horner evaluation; exact for ints and Fractions."""
        acc: Rational = 0
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * a for k, a in enumerate(self._c) if k)

    def content(self) -> int:
        g = 0
        for a in self._c:
            g = _igcd(g, a)
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide by the content and make the leading coefficient positive."""
        if not self._c:
            return self
        g = self.content()
        if self._c[-1] < 0:
            g = -g
        return IntPolynomial(a // g for a in self._c)

    def reverse(self) -> "IntPolynomial":
        return IntPolynomial(reversed(self._c))

    def sign_at(self, num: int, den: int = 1) -> int:
        """Sign of ``p(num/den)`` for ``den > 0`` using integer arithmetic only."""
        acc = 0
        dpow = 1
        # homogenised Horner: den**d * p(num/den)
        for a in reversed(self._c):
            acc = acc * num + a * dpow
            dpow *= den
        return (acc > 0) - (acc < 0)

    def sign_at_infinity(self, positive: bool = True) -> int:
        if not self._c:
            return 0
        s = 1 if self._c[-1] > 0 else -1
        if not positive and self.degree % 2:
            s = -s
        return s


def _coerce(x) -> IntPolynomial | None:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    return None


@dataclass(frozen=True, order=True)
class RationalInterval:
    """Closed interval with exact rational endpoints; ``lo == hi`` marks an exact root."""
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def disjoint(self, other: "RationalInterval") -> bool:
        """Disjointness treating non-degenerate intervals as open, points as closed."""
        if self.is_point and other.is_point:
            return self.lo != other.lo
        if self.is_point:
            return not (other.lo < self.lo < other.hi)
        if other.is_point:
            return not (self.lo < other.lo < self.hi)
        return self.hi <= other.lo or other.hi <= self.lo


@dataclass(frozen=True)
class RootednessReport:
    is_real_rooted: bool
    real_root_count: int  # with multiplicity
    degree: int
    isolating_intervals: tuple[tuple[RationalInterval, int], ...] = ()
    witness: IntPolynomial | None = None
    squarefree_factors: tuple[tuple[IntPolynomial, int], ...] = field(default=(), repr=False)


class NotRealRootedError(ValueError):
    def __init__(self, report: RootednessReport):
        super().__init__(
            f"polynomial of degree {report.degree} has only "
            f"{report.real_root_count} real roots")
        self.report = report


def add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p + q


def multiply(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p * q


def evaluate_at(p: IntPolynomial, x: Rational) -> Rational:
    return p(Fraction(x)) if isinstance(x, Fraction) else p(x)


def clear_denominators(coeffs: Sequence[Rational]) -> IntPolynomial:
    """Scale rational coefficients by the lcm of their denominators."""
    fr = [Fraction(c) for c in coeffs]
    m = 1
    for c in fr:
        m = m * c.denominator // _igcd(m, c.denominator)
    return IntPolynomial(int(c * m) for c in fr)


# --- division and remainder sequences -------------------------------------

def pseudo_remainder(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """``prem(f, g) = lc(g)**(deg f - deg g + 1) * f  mod g`` over the integers."""
    if g.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    dg = g.degree
    if f.degree < dg:
        return f
    r = list(f.coeffs)
    gc = g.coeffs
    lcg = gc[-1]
    # one scaling per quotient slot, so the total factor is lc(g)**(delta+1)
    for k in range(len(r) - 1, dg - 1, -1):
        lead = r[k]
        r = [x * lcg for x in r]
        if lead:
            off = k - dg
            for j, y in enumerate(gc):
                r[off + j] -= lead * y
        r.pop()
    return IntPolynomial(r)


def exact_div(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Quotient ``f / g`` when it is known to be integral; raises otherwise."""
    if g.is_zero():
        raise ZeroDivisionError
    r = list(f.coeffs)
    gc = g.coeffs
    dg = len(gc) - 1
    lcg = gc[-1]
    if len(r) - 1 < dg:
        if r:
            raise ValueError("inexact polynomial division")
        return IntPolynomial()
    q = [0] * (len(r) - dg)
    for k in range(len(r) - 1, dg - 1, -1):
        c, rem = divmod(r[k], lcg)
        if rem:
            raise ValueError("inexact polynomial division")
        q[k - dg] = c
        if c:
            for j, y in enumerate(gc):
                r[k - dg + j] -= c * y
    if any(r[:dg]):
        raise ValueError("inexact polynomial division")
    return IntPolynomial(q)


def _subresultant_steps(f: IntPolynomial, g: IntPolynomial):
    """Yield ``(r, beta)`` for each new element ``r = prem(prev, cur) / beta``."""
    d = f.degree - g.degree
    beta = -1 if (d + 1) % 2 else 1  # (-1)^(d+1)
    psi = -1
    a, b = f, g
    while True:
        pr = pseudo_remainder(a, b)
        if pr.is_zero():
            return
        r = IntPolynomial(x // beta for x in pr.coeffs)
        yield r, beta, b, d
        lcb = b.lc
        # psi_{i+1} = (-lc)^d / psi^(d-1)
        if d >= 1:
            psi = (-lcb) ** d // psi ** (d - 1)
        d_new = b.degree - r.degree
        beta = -lcb * psi ** d_new
        a, b, d = b, r, d_new


def subresultant_prs(f: IntPolynomial, g: IntPolynomial) -> list[IntPolynomial]:
    """Subresultant polynomial remainder sequence of ``f`` and ``g`` (deg f >= deg g)."""
    if f.degree < g.degree:
        f, g = g, f
    if g.is_zero():
        return [f]
    out = [f, g]
    for r, *_ in _subresultant_steps(f, g):
        out.append(r)
    return out


def poly_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient."""
    if f.is_zero():
        return g.primitive()
    if g.is_zero():
        return f.primitive()
    return subresultant_prs(f, g)[-1].primitive()


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    if p.degree <= 0:
        return p.primitive()
    return exact_div(p.primitive(), poly_gcd(p, p.derivative()))


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: ``p = c * prod(s_k ** k)`` with squarefree, coprime ``s_k``.

    Returns the non-constant factors as ``(s_k, k)`` pairs, each primitive.
    """
    if p.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    if p.degree == 0:
        return []
    p = p.primitive()
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = exact_div(p, a)
    c = exact_div(dp, a)
    d = c - b.derivative()
    out = []
    k = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = exact_div(b, a)
        c = exact_div(d, a)
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a.primitive(), k))
        k += 1
    return out


# --- Sturm sequences --------------------------------------------------------

def sturm_chain(p: IntPolynomial) -> list[IntPolynomial]:
    """Sturm sequence of ``p`` built from the subresultant PRS of ``(p, p')``.

    Each element is a positive multiple of the classical Euclidean Sturm
    remainder; signs are corrected from the subresultant ``beta`` factors.
    """
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial is undefined")
    dp = p.derivative()
    if dp.is_zero():
        return [p]
    chain = [p, dp]
    signs = [1, 1]
    for r, beta, b, d in _subresultant_steps(p, dp):
        # prem(a, b) = lc(b)^(d+1) rem(a, b);  r = prem / beta
        s = -signs[-2]
        if beta < 0:
            s = -s
        if b.lc < 0 and (d + 1) % 2:
            s = -s
        chain.append(r)
        signs.append(s)
    return [c if s > 0 else -c for c, s in zip(chain, signs)]


def _variations(signs: Iterable[int]) -> int:
    v = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            v += 1
        last = s
    return v


def _v_at(chain: Sequence[IntPolynomial], x: Fraction) -> int:
    num, den = x.numerator, x.denominator
    return _variations(c.sign_at(num, den) for c in chain)


def _v_inf(chain: Sequence[IntPolynomial], positive: bool) -> int:
    return _variations(c.sign_at_infinity(positive) for c in chain)


def _count(chain, lo: Fraction | None, hi: Fraction | None) -> int:
    """Distinct roots of the squarefree chain head in ``(lo, hi]``; None = infinity."""
    vlo = _v_inf(chain, False) if lo is None else _v_at(chain, lo)
    vhi = _v_inf(chain, True) if hi is None else _v_at(chain, hi)
    return vlo - vhi


def sturm_real_root_count(p: IntPolynomial, interval: RationalInterval | None = None) -> int:
    """Number of distinct real roots of ``p`` on the closed interval (or the whole line)."""
    if p.is_zero():
        raise ValueError("root count of the zero polynomial is undefined")
    q = squarefree_part(p)
    if q.degree <= 0:
        return 0
    chain = sturm_chain(q)
    if interval is None:
        return _count(chain, None, None)
    n = _count(chain, interval.lo, interval.hi)
    if q(interval.lo) == 0:
        n += 1
    return n


def cauchy_bound(p: IntPolynomial) -> Fraction:
    """All roots lie strictly inside ``(-B, B)``."""
    lc = abs(p.lc)
    return 1 + Fraction(max(abs(a) for a in p.coeffs[:-1]), lc) if p.degree > 0 else Fraction(1)


def _isolate_squarefree(q: IntPolynomial) -> list[RationalInterval]:
    """Disjoint isolating intervals of the real roots of squarefree ``q``, descending.

    Each interval is either a point holding an exact rational root or an open
    interval ``(lo, hi)`` with ``q(lo) != 0 != q(hi)`` containing one root.
    """
    if q.degree <= 0:
        return []
    chain = sturm_chain(q)
    b = cauchy_bound(q)
    out: list[RationalInterval] = []
    stack = [(-b, b, _count(chain, -b, b))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(_tighten(q, chain, lo, hi))
            continue
        mid = (lo + hi) / 2
        left = _count(chain, lo, mid)
        stack.append((lo, mid, left))
        stack.append((mid, hi, n - left))
    out.sort(key=lambda iv: iv.lo, reverse=True)
    return out


def _tighten(q, chain, lo: Fraction, hi: Fraction) -> RationalInterval:
    # the unique root lies in (lo, hi]
    if q.sign_at(hi.numerator, hi.denominator) == 0:
        return RationalInterval(hi, hi)
    while q.sign_at(lo.numerator, lo.denominator) == 0:
        mid = (lo + hi) / 2
        if q.sign_at(mid.numerator, mid.denominator) == 0:
            return RationalInterval(mid, mid)
        if _count(chain, mid, hi) == 1:
            lo = mid
        else:
            hi = mid
    return RationalInterval(lo, hi)


def refine_interval(q: IntPolynomial, iv: RationalInterval, width: Fraction) -> RationalInterval:
    """Bisect an isolating interval of squarefree ``q`` until narrower than ``width``."""
    lo, hi = iv.lo, iv.hi
    if lo == hi:
        return iv
    slo = q.sign_at(lo.numerator, lo.denominator)
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = q.sign_at(mid.numerator, mid.denominator)
        if sm == 0:
            return RationalInterval(mid, mid)
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return RationalInterval(lo, hi)


def _multiplicities(factors, intervals) -> list[int]:
    """Multiplicity of the root inside each interval, from a Yun decomposition."""
    out = []
    charts = [(s, k, sturm_chain(s)) for s, k in factors]
    for iv in intervals:
        m = 0
        for s, k, ch in charts:
            if iv.is_point:
                hit = s(iv.lo) == 0
            else:
                hit = _count(ch, iv.lo, iv.hi) > 0
            if hit:
                m = k
                break
        out.append(m)
    return out


def is_real_rooted(p: IntPolynomial) -> RootednessReport:
    """Decide real-rootedness exactly.

    Constants count as real-rooted.  Failure reports carry a squarefree factor
    whose Sturm count falls short of its degree.
    """
    if p.is_zero():
        raise ValueError("real-rootedness of the zero polynomial is undefined")
    factors = squarefree_decomposition(p)
    total = 0
    witness = None
    for s, k in factors:
        cnt = _count(sturm_chain(s), None, None)
        total += cnt * k
        if cnt < s.degree and witness is None:
            witness = s
    ok = total == p.degree
    intervals: tuple = ()
    if ok:
        q = squarefree_part(p)
        ivs = _isolate_squarefree(q)
        intervals = tuple(zip(ivs, _multiplicities(factors, ivs)))
    return RootednessReport(ok, total, p.degree, intervals, witness, tuple(factors))


def isolate_roots(p: IntPolynomial) -> list[tuple[RationalInterval, int]]:
    """Isolating intervals with multiplicities, sorted by descending root."""
    rep = is_real_rooted(p)
    if not rep.is_real_rooted:
        raise NotRealRootedError(rep)
    return list(rep.isolating_intervals)


# --- interlacing ------------------------------------------------------------

def _check_positive_lc(f: IntPolynomial, name: str):
    if f.is_zero():
        raise ValueError(f"{name} is the zero polynomial")
    if f.lc < 0:
        raise ValueError(f"{name} has a negative leading coefficient")


def _nonpositive_rooted(f: IntPolynomial) -> bool:
    if f.degree <= 0:
        return True
    q = squarefree_part(f)
    return _count(sturm_chain(q), Fraction(0), None) == 0


def interlaces(f: IntPolynomial, g: IntPolynomial) -> bool:
    """True iff ``f`` interlaces ``g`` (weakly): ... <= a2 <= b2 <= a1 <= b1 <= 0.

    Common roots are handled exactly through the joint squarefree part of
    ``f * g``; no floating point is involved.
    """
    _check_positive_lc(f, "f")
    _check_positive_lc(g, "g")
    if g.degree - f.degree not in (0, 1):
        return False
    for h in (f, g):
        if not is_real_rooted(h).is_real_rooted or not _nonpositive_rooted(h):
            return False
    if g.degree == 0:
        return True
    joint = squarefree_part(f * g)
    ivs = _isolate_squarefree(joint)
    mf = _multiplicities(squarefree_decomposition(f), ivs) if f.degree > 0 else [0] * len(ivs)
    mg = _multiplicities(squarefree_decomposition(g), ivs)
    # counts of roots >= x must satisfy F(x) <= G(x) <= F(x) + 1 everywhere
    F = G = 0
    for a, b in zip(mf, mg):
        F += a
        G += b
        if not F <= G <= F + 1:
            return False
    return F == f.degree and G == g.degree


def is_interlacing_sequence(fs: Sequence[IntPolynomial]) -> bool:
    """Pairwise check ``fs[i]`` interlaces ``fs[j]`` for all ``i < j``."""
    return all(interlaces(fs[i], fs[j])
               for i in range(len(fs)) for j in range(i + 1, len(fs)))


# --- coefficient inequalities -----------------------------------------------

def _nonneg(p: IntPolynomial):
    if any(a < 0 for a in p.coeffs):
        raise ValueError("coefficient inequalities require nonnegative coefficients")


def is_log_concave(p: IntPolynomial) -> bool:
    _nonneg(p)
    a = p.coeffs
    return all(a[k] * a[k] >= a[k - 1] * a[k + 1] for k in range(1, len(a) - 1))


def is_ultra_log_concave(p: IntPolynomial) -> bool:
    """Log-concavity of ``a_k / C(d, k)``, by integer cross-multiplication."""
    _nonneg(p)
    a = p.coeffs
    d = len(a) - 1
    for k in range(1, d):
        lhs = a[k] * a[k] * comb(d, k - 1) * comb(d, k + 1)
        rhs = a[k - 1] * a[k + 1] * comb(d, k) ** 2
        if lhs < rhs:
            return False
    return True


def is_unimodal(p: IntPolynomial) -> bool:
    _nonneg(p)
    a = p.coeffs
    k = 0
    while k + 1 < len(a) and a[k] <= a[k + 1]:
        k += 1
    while k + 1 < len(a) and a[k] >= a[k + 1]:
        k += 1
    return k >= len(a) - 1
