"""Command-line interface.

Each command prints one JSON record per line (``--human`` for readable text).
Exit status: 0 success, 1 usage or input error, 2 reproduction mismatch,
3 conjecture counterexample.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Sequence

from . import harness
from .boards import FerrersBoard, InvalidBoardError, rook_eulerian_recursive, rook_eulerian_refined
from .exactpoly import IntPolynomial
from .invseq import PRODUCT_GUARD, s_eulerian, search_s_match
from .multiset import Content, SkewBoard, multiset_refined
from .perms import INTERVAL_GUARD, GuardExceeded, OrderKind, Permutation, StatKind, interval_stat_polynomial
from .posets import weak_interval_stat_polynomial
from .records import ResultRecord, approximate_roots, verdicts_for

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3

ORIENTATION_NOTE = """\
Shapes are given as weakly increasing row lengths, top row first, e.g.
3,4,4,6,7.  A board written with decreasing rows (such as 333321 over 11)
is entered reversed, with the inner shape aligned to the same rows:
--shape 1,2,3,3,3,3 --mu 0,0,0,0,1,1.  Digit strings such as 34467 are
accepted when every entry is a single digit.
"""


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip().strip("[]()")
    if not text:
        return ()
    try:
        if "," in text or " " in text:
            return tuple(int(x) for x in text.replace(",", " ").split())
        return tuple(int(ch) for ch in text)
    except ValueError:
        raise UsageError(f"cannot parse integer list {text!r}") from None


def _coeffs(text: str) -> IntPolynomial:
    try:
        return IntPolynomial(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"cannot parse coefficient list {text!r}") from None


def _checks(args) -> list[str]:
    out = []
    for c in args.check or ():
        out.extend(x.strip().replace("-", "_") for x in c.split(","))
    return out


def _finish(rec: ResultRecord, p: IntPolynomial | None, args, family=None) -> ResultRecord:
    if p is not None:
        rec.set_polynomial(p)
        rec.verdicts = verdicts_for(p, _checks(args), family) if p else {}
        if getattr(args, "roots", False):
            rec.roots = approximate_roots(p)
    return rec


def cmd_board_poly(args) -> tuple[list[ResultRecord], int]:
    board = FerrersBoard(_ints(args.shape))
    rec = ResultRecord("board-poly", {"shape": list(board.parts), "method": args.method})
    fam = rook_eulerian_refined(board) if args.method in ("brute", "both") else None
    if args.method in ("recursive", "both"):
        _, rfam = rook_eulerian_recursive(board)
        if fam is not None and list(fam) != list(rfam):
            raise RuntimeError(f"enumeration and recursion disagree on {board}: {fam} vs {rfam}")
        fam = rfam
    total = sum(fam, IntPolynomial())
    if args.refined:
        rec.set_refined(fam)
    return [_finish(rec, total, args, fam)], EXIT_OK


def cmd_interval(args) -> tuple[list[ResultRecord], int]:
    top = Permutation(_ints(args.top))
    order = OrderKind(args.order)
    kind = StatKind.parse(args.stat)
    guard = None if args.no_guard else INTERVAL_GUARD
    rec = ResultRecord("interval", {"top": list(top.word), "order": order.value, "stat": kind.value})
    if order is OrderKind.WEAK:
        p = weak_interval_stat_polynomial(top, kind, guard)
    else:
        p = interval_stat_polynomial(top, order, kind, guard)
    rec.extra["size"] = p(1)
    return [_finish(rec, p, args)], EXIT_OK


def cmd_s_eulerian(args) -> tuple[list[ResultRecord], int]:
    s = _ints(args.s)
    rec = ResultRecord("s-eulerian", {"s": list(s)})
    p = s_eulerian(s, guard=None if args.no_guard else PRODUCT_GUARD)
    return [_finish(rec, p, args)], EXIT_OK


def cmd_search_s(args) -> tuple[list[ResultRecord], int]:
    if (args.shape is None) == (args.target is None):
        raise UsageError("give exactly one of --shape or --target")
    if args.target is not None:
        targets = [("target", _coeffs(args.target))]
        inputs = {"target": args.target}
    else:
        board = FerrersBoard(_ints(args.shape))
        targets = [("ascent", sum(rook_eulerian_refined(board), IntPolynomial())),
                   ("descent", harness.descent_reading(board))]
        inputs = {"shape": list(board.parts)}
    out = []
    for reading, t in targets:
        res = search_s_match(t, args.max_len)
        rec = ResultRecord("search-s", dict(inputs, reading=reading))
        rec.set_polynomial(t)
        rec.extra = {"match": None if res.match is None else list(res.match.s),
                     "candidates": res.candidates}
        out.append(rec)
    return out, EXIT_OK


def cmd_multiset(args) -> tuple[list[ResultRecord], int]:
    board = SkewBoard(_ints(args.shape), _ints(args.mu) if args.mu else ())
    content = Content(_ints(args.content))
    fam = multiset_refined(board, content)
    rec = ResultRecord("multiset", {"shape": list(board.outer), "mu": list(board.inner),
                                    "content": list(content.alpha)})
    if args.refined:
        rec.set_refined(fam)
    return [_finish(rec, sum(fam, IntPolynomial()), args, fam)], EXIT_OK


def cmd_analyze(args) -> tuple[list[ResultRecord], int]:
    p = _coeffs(args.coeffs)
    if not p:
        raise UsageError("the zero polynomial has no verdicts")
    rec = ResultRecord("analyze", {"coeffs": args.coeffs})
    if not args.check:
        args.check = ["real-rooted,ulc,log-concave,unimodal"]
    return [_finish(rec, p, args)], EXIT_OK


def cmd_reproduce(args) -> tuple[list[ResultRecord], int]:
    names = list(harness.TARGETS) if args.target == "all" else [args.target]
    status = EXIT_OK
    out = []
    for name in names:
        t0 = time.perf_counter()
        checks = harness.run_target(name)
        rec = ResultRecord("reproduce", {"target": name})
        rec.verdicts = {"passed": all(c.ok for c in checks)}
        rec.extra = {"checks": [c.line() for c in checks]}
        rec.elapsed_ms = (time.perf_counter() - t0) * 1000
        if not rec.verdicts["passed"]:
            status = EXIT_MISMATCH
        out.append(rec)
    return out, status


def cmd_probe(args) -> tuple[list[ResultRecord], int]:
    name = args.conjecture
    if name == "ulc-weak":
        rep = harness.probe_ulc_weak(args.n or 6, args.seed, args.trials)
    elif name == "exc-bruhat":
        include = [_ints(w) for w in args.include or ()]
        rep = harness.probe_exc_bruhat(args.n or 7, not args.no_312_filter, include)
    elif name == "multiset-interlace":
        rep = harness.probe_multiset_interlace(args.n or 4, args.seed, args.trials)
    else:
        shapes = [_ints(s) for s in args.shape] if args.shape else ((3, 4, 4, 6, 7), (5, 5, 5, 5, 5))
        rep = harness.probe_same_phase(shapes, args.trials or 50, args.seed)
    rec = ResultRecord("probe", {"conjecture": name, **rep.params})
    rec.verdicts = {"counterexample_found": not rep.ok}
    rec.extra = {"checked": rep.checked, "counterexample": rep.counterexample}
    return [rec], EXIT_OK if rep.ok else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="rookeuler",
        description="Rook-Eulerian polynomials, Bruhat and weak intervals, and real-rootedness checks.",
        epilog=ORIENTATION_NOTE + "\nSet ROOKEULER_WORKERS to use several processes in sweeps.",
        formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--human", action="store_true", help="readable text instead of JSON lines")
    ap.add_argument("--seed", type=int, default=0, help="seed for randomized probes (default 0)")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_checks(p, roots=True):
        p.add_argument("--check", action="append",
                       help="comma list of: real-rooted, ulc, log-concave, unimodal, interlacing")
        if roots:
            p.add_argument("--roots", action="store_true", help="approximate roots to 7 decimals")

    p = sub.add_parser("board-poly", help="rook-Eulerian polynomial of a Ferrers board",
                       epilog=ORIENTATION_NOTE, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--shape", required=True)
    p.add_argument("--refined", action="store_true", help="also emit Q_i by first-rook column")
    p.add_argument("--method", choices=("brute", "recursive", "both"), default="both")
    with_checks(p)
    p.set_defaults(func=cmd_board_poly)

    p = sub.add_parser("interval", help="statistic polynomial of a Bruhat or weak lower interval")
    p.add_argument("--top", required=True, help="permutation, e.g. 4,6,2,1,7,3,5")
    p.add_argument("--order", choices=("bruhat", "weak"), default="bruhat")
    p.add_argument("--stat", choices=("des", "asc", "exc", "peak"), default="des")
    p.add_argument("--no-guard", action="store_true", help=f"lift the {INTERVAL_GUARD}-element limit")
    with_checks(p)
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("s-eulerian", help="s-Eulerian polynomial")
    p.add_argument("--s", required=True)
    p.add_argument("--no-guard", action="store_true", help=f"lift the product limit {PRODUCT_GUARD}")
    with_checks(p)
    p.set_defaults(func=cmd_s_eulerian)

    p = sub.add_parser("search-s", help="look for an s-vector reproducing a polynomial",
                       epilog="With --shape both the ascent and the descent reading of the board are searched.")
    p.add_argument("--shape")
    p.add_argument("--target", help="ascending coefficients, e.g. 1,13,9,1")
    p.add_argument("--max-len", type=int, default=None)
    p.set_defaults(func=cmd_search_s)

    p = sub.add_parser("multiset", help="multiset rook-Eulerian polynomial of a skew board",
                       epilog=ORIENTATION_NOTE, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--shape", required=True)
    p.add_argument("--mu", default="", help="inner shape; a short list is padded with zeros at the top")
    p.add_argument("--content", required=True)
    p.add_argument("--refined", action="store_true")
    with_checks(p)
    p.set_defaults(func=cmd_multiset)

    p = sub.add_parser("reproduce", help="recompute embedded reference values and diff")
    p.add_argument("target", choices=("all",) + tuple(harness.TARGETS))
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("probe", help="search for conjecture counterexamples")
    p.add_argument("conjecture", choices=tuple(harness.PROBES))
    p.add_argument("--n", type=int, default=None, help="exhaustive size bound")
    p.add_argument("--trials", type=int, default=0, help="extra random instances")
    p.add_argument("--no-312-filter", action="store_true", help="exc-bruhat: scan all of S_n")
    p.add_argument("--include", action="append", help="exc-bruhat: permutation checked first")
    p.add_argument("--shape", action="append", help="same-phase: board (repeatable)")
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("analyze", help="verdicts for a raw coefficient list")
    p.add_argument("coeffs", help="ascending coefficients, e.g. 1,43,196,168,23,1")
    with_checks(p)
    p.set_defaults(func=cmd_analyze)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    t0 = time.perf_counter()
    try:
        records, status = args.func(args)
    except (UsageError, InvalidBoardError, GuardExceeded, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    elapsed = (time.perf_counter() - t0) * 1000
    for r in records:
        if not r.elapsed_ms:
            r.elapsed_ms = elapsed
    text = "\n".join(r.to_text() if args.human else r.to_json() for r in records)
    sys.stdout.write(text + "\n")
    sys.stdout.flush()
    return status


if __name__ == "__main__":
    sys.exit(main())
