"""Symbolic rescue for eliminations that hit a zero pivot.

The banded recurrences are rerun over the rational function field. Every
pivot that comes out identically zero is replaced by the indeterminate;
the elimination then continues unharmed, and the true solution and
determinant are read off by evaluating at zero at the very end. The
rescue is exact whenever the matrix itself is nonsingular; a genuinely
singular system surfaces as SingularMatrix instead of a wrong answer.

Only pivots that are zero as functions are replaced. A pivot that merely
vanishes at the evaluation point is a normal field element and divides
fine.
"""
from __future__ import annotations

import math

from .errors import PoleAtZero, SingularMatrix, ZeroPivot
from .factor import (SolveReport, _backward_generic, _factor_generic,
                     _forward_generic, solve_knpenta)
from .matrix import NearlyPentaMatrix
from .ratfunc import RATFUNC, SYMBOL, rf_eval_at_zero

__all__ = ["solve_ksnpenta", "solve_auto", "ksnpenta_determinant"]


def _require_rational(m: NearlyPentaMatrix):
    if not m.field.is_exact:
        raise TypeError("the symbolic solve requires exact rational entries")


def _factor_symbolic(m: NearlyPentaMatrix):
    """Run the elimination over rational functions; returns the factor
    vectors, the lifted s corner and the 1-based rescued pivot indices."""
    lift = RATFUNC.coerce
    d = [lift(v) for v in m.d]
    a = [lift(v) for v in m.a]
    at = [lift(v) for v in m.a_tilde]
    b = [lift(v) for v in m.b]
    bt = [lift(v) for v in m.b_tilde]
    s = lift(m.s)
    t = lift(m.t)
    rescued = []

    def on_zero(k):
        rescued.append(k)
        if k == 1:
            d[0] = SYMBOL  # the pivot's source entry follows it; never read again
        return SYMBOL

    c, e, f, r, g, ak = _factor_generic(
        d, a, at, b, bt, s, t,
        pivot_is_zero=lambda v: v.is_zero, on_zero_pivot=on_zero,
    )
    return (c, e, f, r, g, ak, s), rescued


def _det_at_zero(c):
    # the pivot product cancels to a polynomial when the rescue is
    # consistent; a surviving pole means there is no value to report
    prod = math.prod(c, start=RATFUNC.one)
    try:
        return rf_eval_at_zero(prod)
    except PoleAtZero as exc:
        raise SingularMatrix("determinant has no value at the rescue point") from exc


def solve_ksnpenta(m: NearlyPentaMatrix, y) -> SolveReport:
    """Solve A x = y, replacing vanishing pivots symbolically.

    Entries must be exact rationals. On systems the direct elimination
    handles, this returns identical values with zero_pivots empty. The
    report's symbolic_x holds the pre-substitution solution components.

    Raises SingularMatrix when the determinant evaluates to 0 or a
    solution component has a pole at the evaluation point.
    """
    _require_rational(m)
    if len(y) != m.n:
        from .errors import InputFormatError
        raise InputFormatError(f"right-hand side must have length {m.n}")
    (c, e, f, r, g, ak, s), rescued = _factor_symbolic(m)
    det = _det_at_zero(c)
    if det == 0:
        raise SingularMatrix("matrix is singular: determinant is 0")
    yv = [RATFUNC.coerce(m.field.coerce(v)) for v in y]
    z = _forward_generic(f, r, g, yv)
    xs = _backward_generic(c, e, ak, s, z)
    try:
        x = [rf_eval_at_zero(xi) for xi in xs]
    except PoleAtZero as exc:
        raise SingularMatrix(
            "a solution component has a pole at the rescue point"
        ) from exc
    return SolveReport(x=x, det=det, mode="symbolic",
                       zero_pivots=list(rescued), symbolic_x=xs)


def solve_auto(m: NearlyPentaMatrix, y) -> SolveReport:
    """Direct elimination first, symbolic rescue when a pivot vanishes.

    The report's mode field records which path produced the answer.
    """
    _require_rational(m)
    try:
        return solve_knpenta(m, y)
    except ZeroPivot:
        return solve_ksnpenta(m, y)


def ksnpenta_determinant(m: NearlyPentaMatrix):
    """Determinant via the symbolic elimination; needs no right-hand side.

    Returns (det, zero_pivots). A 0 determinant is returned, not raised;
    a determinant query has an answer for singular matrices too.
    """
    _require_rational(m)
    (c, *_), rescued = _factor_symbolic(m)
    return _det_at_zero(c), list(rescued)
