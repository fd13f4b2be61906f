"""Command line interface over JSON system files.

Subcommands: solve (solution report), det (determinant only), gen (test
matrix generator). Exit codes: 0 success, 2 input or format problem,
3 zero pivot in a mode without the symbolic rescue, 4 singular matrix.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import (InputFormatError, NearlyPentaError, SingularMatrix,
                     ZeroPivot)
from .factor import band_matvec, determinant, factorize, solve_knpenta
from .matrix import gen_laplacian, gen_random, load_system, to_json_dict
from .oracle import dense_det, dense_solve
from .scalars import FLOAT, RATIONAL, format_rational
from .symbolic import ksnpenta_determinant, solve_auto, solve_ksnpenta

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_ZERO_PIVOT = 3
EXIT_SINGULAR = 4

_MODES = ("auto", "numeric", "exact", "symbolic")


def _field_for(mode):
    return FLOAT if mode == "numeric" else RATIONAL


def _solve_dispatch(m, y, mode, tol):
    if mode == "numeric":
        return solve_knpenta(m, y, pivot_tol=tol)
    if mode == "exact":
        return solve_knpenta(m, y)
    if mode == "symbolic":
        return solve_ksnpenta(m, y)
    return solve_auto(m, y)


def _report_json(report, verbose):
    # fixed key order keeps the output stable for golden-file comparison
    out = {}
    if report.mode == "numeric":
        out["x"] = [float(v) for v in report.x]
        out["det"] = float(report.det)
    else:
        out["x"] = [format_rational(v) for v in report.x]
        out["det"] = format_rational(report.det)
    out["mode"] = report.mode
    out["zero_pivots"] = list(report.zero_pivots)
    if report.residual_norm is not None:
        out["residual_norm"] = report.residual_norm
    if verbose and report.symbolic_x is not None:
        out["symbolic_x"] = [str(v) for v in report.symbolic_x]
    return out


def _cmd_solve(args):
    m, y = load_system(args.path, field=_field_for(args.mode))
    if y is None:
        raise InputFormatError('input file has no "y" vector to solve against')
    report = _solve_dispatch(m, y, args.mode, args.tol)
    print(json.dumps(_report_json(report, args.verbose)))
    return EXIT_OK


def _cmd_det(args):
    m, _ = load_system(args.path, field=_field_for(args.mode))
    if args.mode == "numeric":
        print(json.dumps(float(determinant(factorize(m, pivot_tol=args.tol)))))
        return EXIT_OK
    if args.mode == "exact":
        det = determinant(factorize(m))
    elif args.mode == "symbolic":
        det, _pivots = ksnpenta_determinant(m)
    else:
        try:
            det = determinant(factorize(m))
        except ZeroPivot:
            det, _pivots = ksnpenta_determinant(m)
    print(json.dumps(format_rational(det)))
    return EXIT_OK


def _cmd_gen(args):
    if args.kind == "laplacian":
        m = gen_laplacian(args.n)
    else:
        m = gen_random(args.n, seed=args.seed)
    # include a right-hand side with known solution (1, 2, ..., n)
    y = band_matvec(m, list(range(1, args.n + 1)))
    text = json.dumps(to_json_dict(m, y=y))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _cmd_oracle_solve(args):
    # reference path for fixture generation: dense exact elimination
    m, y = load_system(args.path, field=RATIONAL)
    dense = m.to_dense()
    out = {}
    if y is not None:
        out["x"] = [format_rational(v) for v in dense_solve(dense, y)]
    out["det"] = format_rational(dense_det(dense))
    print(json.dumps(out))
    return EXIT_OK


def _add_mode_args(sub, with_verbose=False):
    sub.add_argument("path", help="JSON system file")
    sub.add_argument("--mode", choices=_MODES, default="auto",
                     help="arithmetic to use (default: auto, exact with "
                          "symbolic fallback)")
    sub.add_argument("--tol", type=float, default=0.0,
                     help="pivot tolerance for numeric mode "
                          "(default 0: exact zero test)")
    if with_verbose:
        sub.add_argument("--verbose", action="store_true",
                         help="include the symbolic solution components "
                              "when the rescue ran")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="npenta",
        description="Solve nearly pentadiagonal linear systems stored as JSON.",
    )
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="{solve,det,gen}")

    p_solve = sub.add_parser("solve", help="solve A x = y and print a report")
    _add_mode_args(p_solve, with_verbose=True)
    p_solve.set_defaults(func=_cmd_solve)

    p_det = sub.add_parser("det", help="print the determinant")
    _add_mode_args(p_det)
    p_det.set_defaults(func=_cmd_det)

    p_gen = sub.add_parser("gen", help="generate a test system")
    p_gen.add_argument("kind", choices=("laplacian", "random"))
    p_gen.add_argument("n", type=int)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", help="write to this path instead of stdout")
    p_gen.set_defaults(func=_cmd_gen)

    p_oracle = sub.add_parser("oracle-solve")  # intentionally unlisted
    p_oracle.add_argument("path")
    p_oracle.set_defaults(func=_cmd_oracle_solve)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ZeroPivot as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ZERO_PIVOT
    except SingularMatrix as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except NearlyPentaError as exc:
        # input shape, value and size problems
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
