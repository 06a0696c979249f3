"""Command-line front end: compute objects and run verification suites.

Exit codes: 0 success, 1 a verified identity failed, 2 invalid input,
3 internal invariant violation (an exact division that should succeed did not).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import List, Optional

from .euler import alternate_borel_euler, euler_closed, euler_glmn
from .formatting import to_json_obj, to_text
from .laurent import LaurentPoly, NotDivisible
from .partitions import EVEN, ODD, HookContext, Partition
from .superjacobi import specialized_sj, super_jacobi
from .superschur import berele_regev, super_schur_jt, super_schur_weyl
from .verify import SUITE_NAMES, GuardError, SuiteConfig, run_suite

FORMAT_ENV = "SJLAB_FORMAT"
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from None


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad rational {text!r}") from None


def _context_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition, required=True, help="comma-separated parts; '' is empty")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sjlab", description="Super Schur, super Jacobi and Euler supercharacters.")
    parser.add_argument("--format", choices=("json", "text"), default=None, help=f"overrides ${FORMAT_ENV}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("sschur", help="super Schur polynomial in x, y")
    _context_args(p)
    p.add_argument("--route", choices=("jt", "weyl", "berele-regev"), default="jt")
    p.add_argument("--nu", type=_partition, default=None, help="admissible nu for the weyl route")
    p.add_argument("--literal", action="store_true", help="weyl route with the bare (-1)^b sign")

    p = sub.add_parser("sjacobi", help="super Jacobi polynomial at k = -1 in u, v")
    _context_args(p)
    p.add_argument("--special", choices=(ODD, EVEN), default=None)
    p.add_argument("--p", type=_rational, default=None)
    p.add_argument("--q", type=_rational, default=None)
    p.add_argument("--literal", action="store_true", help="use the bare (-1)^b sign")

    p = sub.add_parser("euler", help="Euler supercharacter")
    _context_args(p)
    p.add_argument("--family", choices=(ODD, EVEN), default=ODD)
    p.add_argument("--route", choices=("glmn", "closed", "alternate"), default="glmn")
    p.add_argument("--vars", choices=("xy", "uv"), default="xy", help="uv rewrites in u = x + 1/x")
    p.add_argument("--literal", action="store_true", help="closed route with the bare (-1)^b sign")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITE_NAMES + ("all",), required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--samples", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--timing", action="store_true", help="include per-case elapsed seconds")
    p.add_argument("--literal", action="store_true", help="check the Weyl-type formulas with the bare (-1)^b sign")
    return parser


def _output_format(args) -> str:
    fmt = args.format or os.environ.get(FORMAT_ENV, "text").strip().lower() or "text"
    if fmt not in ("json", "text"):
        raise UsageError(f"{FORMAT_ENV} must be json or text, got {fmt!r}")
    return fmt


def _compute(args) -> LaurentPoly:
    ctx = HookContext(args.m, args.n)
    lam = args.lam
    if args.command == "sschur":
        if args.route == "jt":
            return super_schur_jt(lam, ctx)
        if args.route == "weyl":
            return super_schur_weyl(lam, args.nu, ctx, args.literal)
        return berele_regev(lam, ctx)
    if args.command == "sjacobi":
        generic = args.p is not None or args.q is not None
        if generic == (args.special is not None):
            raise UsageError("give either --special or both --p and --q")
        if generic:
            if args.p is None or args.q is None:
                raise UsageError("--p and --q go together")
            return super_jacobi(lam, ctx, args.p, args.q, literal=args.literal).value
        return specialized_sj(lam, ctx, args.special, literal=args.literal).value
    if args.route == "closed":
        e = euler_closed(lam, ctx, args.family, literal=args.literal)
    else:
        route = {"glmn": euler_glmn, "alternate": alternate_borel_euler}[args.route]
        e = route(lam, ctx, args.family)
    if args.vars == "uv":
        if e.uv is None:
            raise UsageError("this Euler supercharacter is not a polynomial in u, v")
        return e.uv
    return e.value


def _emit_poly(f: LaurentPoly, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(to_json_obj(f)))
    else:
        print(to_text(f))


def _verify(args, fmt: str) -> int:
    config = SuiteConfig(
        suite=args.suite,
        m=args.m,
        n=args.n,
        max_size=args.max_size,
        samples=args.samples,
        seed=args.seed,
        workers=args.workers,
        allow_large=args.allow_large,
        literal=args.literal,
    )
    report = run_suite(config)
    if fmt == "json":
        print(json.dumps(report.to_json_obj(args.timing), indent=1))
    else:
        for case in report.cases:
            line = f"{'PASS' if case.passed else 'FAIL'} {case.label}"
            if args.timing and case.elapsed is not None:
                line += f" ({case.elapsed:.4f}s)"
            print(line)
        pts = ", ".join(f"({p}, {q})" for p, q in report.notes["points"])
        print(f"points: {pts}")
        print(f"{report.suite}: {len(report.cases) - len(report.failures)}/{len(report.cases)} passed")
    return EXIT_OK if report.passed else EXIT_FAIL


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        fmt = _output_format(args)
        if args.command == "verify":
            return _verify(args, fmt)
        _emit_poly(_compute(args), fmt)
        return EXIT_OK
    except (NotDivisible, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, GuardError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
