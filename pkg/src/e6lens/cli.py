"""Command line front end: compute one invariant, sweep a table, run the
verification suites, or test homotopy equivalence.

Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage
error (argparse or bad arguments such as non-coprime p, q).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import invariant, rep
from .report import merge

VERIFY_TARGETS = (
    "relations",
    "kernel",
    "welldefined",
    "periodicity",
    "closedform",
    "corollary",
    "all",
)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="e6lens",
        description="E6 state sum invariants of lens spaces, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute Z(L(p,q))")
    c.add_argument("p", type=int)
    c.add_argument("q", type=int)
    c.add_argument("--precision", type=int, default=64, metavar="BITS",
                   help="internal float precision in bits (>= 53, default 64)")

    t = sub.add_parser("table", help="sweep all coprime (p,q) with p <= pmax")
    t.add_argument("--pmax", type=int, default=12)
    t.add_argument("--format", choices=("text", "json", "csv"), default="text")
    t.add_argument("--precision", type=int, default=64, metavar="BITS")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("target", type=str.lower, choices=VERIFY_TARGETS)
    v.add_argument("--pmax", type=int, default=None,
                   help="sweep bound (defaults: closedform/periodicity/"
                        "welldefined 48, corollary 60)")
    v.add_argument("--format", choices=("text", "json"), default="text")

    h = sub.add_parser("homotopy", help="orientation-preserving homotopy test")
    h.add_argument("p", type=int)
    h.add_argument("q", type=int)
    h.add_argument("p2", type=int)
    h.add_argument("q2", type=int)

    return parser


def _lens_or_exit(p, q, out):
    try:
        return invariant.LensSpace(p, q)
    except ValueError:
        g = math.gcd(p, q)
        print(f"error: gcd({p},{q})={g}; p and q must be coprime", file=out)
        raise SystemExit(2)


def _cmd_compute(args, out):
    space = _lens_or_exit(args.p, args.q, out)
    if args.precision < 53:
        print("error: --precision must be at least 53", file=out)
        return 2
    value = invariant.state_sum(space)
    re, im = value.approx(args.precision)
    fr = invariant._format_float(re)
    fi = invariant._format_float(im)
    fl = fr if im == 0 else (f"{fr} + {fi}i" if im > 0 else f"{fr} - {fi[1:]}i")
    print(f"Z({space}) exact: {value.to_text()}", file=out)
    print(f"Z({space}) surd:  {value.surd_str()}", file=out)
    print(f"Z({space}) float: {fl}", file=out)
    return 0


def _cmd_table(args, out):
    if args.pmax < 1:
        print("error: --pmax must be at least 1", file=out)
        return 2
    if args.precision < 53:
        print("error: --precision must be at least 53", file=out)
        return 2
    rows = invariant.sweep_table(args.pmax)
    if args.format == "csv":
        out.write(invariant.table_csv(rows, args.precision))
    elif args.format == "json":
        out.write(json.dumps(invariant.table_json_obj(rows, args.precision), indent=1))
        out.write("\n")
    else:
        out.write(invariant.table_text(rows, args.precision))
    return 0


def _verify_reports(target, pmax):
    if target in ("relations", "all"):
        yield rep.verify_relations()
        yield rep.verify_unitary()
    if target in ("kernel", "all"):
        yield rep.verify_kernel_generators()
    if target in ("welldefined", "all"):
        yield invariant.verify_well_defined(p_max=pmax or 48)
    if target in ("periodicity", "all"):
        yield invariant.verify_periodicity(p_max=pmax or 48)
    if target in ("closedform", "all"):
        yield invariant.verify_closed_form(p_max=pmax or 48)
    if target in ("corollary", "all"):
        yield invariant.verify_corollary(p_max=pmax or 60)


def _cmd_verify(args, out):
    try:
        reports = list(_verify_reports(args.target, args.pmax))
    except ValueError as exc:
        print(f"error: {exc}", file=out)
        return 2
    combined = merge(args.target, reports)
    if args.format == "json":
        out.write(combined.to_json())
        out.write("\n")
    else:
        for r in reports:
            for line in r.lines():
                print(line, file=out)
        total = len(combined.checks)
        failed = len(combined.failures())
        print(f"{args.target}: {total - failed}/{total} checks passed", file=out)
    return 0 if combined.passed else 1


def _cmd_homotopy(args, out):
    one = _lens_or_exit(args.p, args.q, out)
    two = _lens_or_exit(args.p2, args.q2, out)
    eq = invariant.homotopy_equivalent(one, two)
    print(f"{one} ~ {two}: {'true' if eq else 'false'}", file=out)
    return 0


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "compute":
            return _cmd_compute(args, out)
        if args.command == "table":
            return _cmd_table(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "homotopy":
            return _cmd_homotopy(args, out)
    except SystemExit as exc:
        return exc.code
    return 2


if __name__ == "__main__":
    sys.exit(main())
