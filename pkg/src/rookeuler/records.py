"""Line-delimited JSON result records.

Coefficients are written as decimal strings so arbitrarily large integers
survive any JSON reader unchanged.
"""

from __future__ import annotations

import json
from decimal import ROUND_HALF_EVEN, Decimal
from dataclasses import asdict, dataclass, field
from typing import Any, Sequence

import mpmath

from .exactpoly import (IntPolynomial, is_interlacing_sequence, is_log_concave,
                        is_real_rooted, is_ultra_log_concave, is_unimodal)

__all__ = ["ResultRecord", "encode_poly", "decode_poly", "approximate_roots", "verdicts_for",
           "format_root"]

VERDICTS = ("real_rooted", "ulc", "log_concave", "unimodal", "interlacing")


def encode_poly(p: IntPolynomial) -> list[str]:
    return [str(c) for c in p.coeffs]


def decode_poly(coeffs: Sequence[str]) -> IntPolynomial:
    return IntPolynomial(int(c) for c in coeffs)


@dataclass
class ResultRecord:
    command: str
    inputs: dict[str, Any] = field(default_factory=dict)
    polynomial: list[str] | None = None
    refined: list[list[str]] | None = None
    verdicts: dict[str, bool] = field(default_factory=dict)
    roots: list[list[str]] | None = None
    extra: dict[str, Any] = field(default_factory=dict)
    elapsed_ms: float = 0.0

    def set_polynomial(self, p: IntPolynomial) -> None:
        self.polynomial = encode_poly(p)

    def set_refined(self, fam: Sequence[IntPolynomial]) -> None:
        self.refined = [encode_poly(q) for q in fam]

    def poly(self) -> IntPolynomial | None:
        return None if self.polynomial is None else decode_poly(self.polynomial)

    def refined_polys(self) -> list[IntPolynomial] | None:
        return None if self.refined is None else [decode_poly(q) for q in self.refined]

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "ResultRecord":
        return cls(**json.loads(line))

    def to_text(self) -> str:
        lines = [f"[{self.command}] " + " ".join(f"{k}={_show(v)}" for k, v in self.inputs.items())]
        if self.polynomial is not None:
            lines.append(f"  polynomial: {self.poly()}")
        if self.refined is not None:
            for j, q in enumerate(self.refined_polys(), start=1):
                lines.append(f"  refined[{j}]: {q}")
        for k, v in self.verdicts.items():
            lines.append(f"  {k}: {'yes' if v else 'no'}")
        if self.roots is not None:
            lines.append("  roots: " + ", ".join(format_root(r) for r in self.roots))
        for k, v in self.extra.items():
            if isinstance(v, list) and v and all(isinstance(x, str) for x in v):
                lines.append(f"  {k}:")
                lines.extend(f"    {x}" for x in v)
            else:
                lines.append(f"  {k}: {_show(v)}")
        lines.append(f"  elapsed: {self.elapsed_ms:.1f} ms")
        return "\n".join(lines)


def _show(v) -> str:
    if isinstance(v, (list, tuple)):
        return ",".join(map(str, v))
    return str(v)


def format_root(r: Sequence[str]) -> str:
    re_, im = r
    if Decimal(im).is_zero():
        return re_
    sign = "-" if im.startswith("-") else "+"
    return f"{re_}{sign}{im.lstrip('-')}i"


def approximate_roots(p: IntPolynomial, digits: int = 7) -> list[list[str]]:
    """Numerical roots as ``[re, im]`` strings rounded to ``digits`` decimals.

    Sorted by real part, then imaginary part; display only, never used for a verdict.
    """
    if p.degree < 1:
        return []
    with mpmath.workdps(60):
        rs = mpmath.polyroots(list(reversed(p.coeffs)), maxsteps=500, extraprec=400)
        out = []
        for r in rs:
            r = mpmath.mpc(r)
            out.append((float(r.real), float(r.imag),
                        mpmath.nstr(r.real, 40, min_fixed=-mpmath.inf, max_fixed=mpmath.inf),
                        mpmath.nstr(r.imag, 40, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)))
    out.sort(key=lambda x: (x[0], x[1]))
    return [[_fixed(re_, digits), _fixed(im, digits)] for _, _, re_, im in out]


def _fixed(s: str, digits: int) -> str:
    q = Decimal(s).quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN)
    return format(q.copy_abs() if q.is_zero() else q, "f")


def verdicts_for(p: IntPolynomial, which: Sequence[str],
                 family: Sequence[IntPolynomial] | None = None) -> dict[str, bool]:
    out: dict[str, bool] = {}
    for w in which:
        if w == "real_rooted":
            out[w] = is_real_rooted(p).is_real_rooted
        elif w == "ulc":
            out[w] = is_ultra_log_concave(p)
        elif w == "log_concave":
            out[w] = is_log_concave(p)
        elif w == "unimodal":
            out[w] = is_unimodal(p)
        elif w == "interlacing":
            if family is None:
                raise ValueError("interlacing verdict needs a refined family")
            out[w] = is_interlacing_sequence([q for q in reversed(family) if q])
        else:
            raise ValueError(f"unknown verdict {w!r}")
    return out
