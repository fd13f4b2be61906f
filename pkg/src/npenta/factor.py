"""Banded LU factorization and the O(n) solve built on it.

Eliminating a nearly pentadiagonal matrix never creates fill outside a
fixed pattern: L is unit lower triangular with one multiplier
subdiagonal, one second subdiagonal and two extra entries in the last
row (from eliminating the t corner); U is upper triangular with the
pivots on the diagonal, a modified first superdiagonal, the second
superdiagonal with a single modified entry at (2, 4) (from eliminating
under the s corner) and the untouched s at (1, 4). Everything is
computed by short recurrences in one left-to-right pass, so the full
solve costs O(n) and the matrix is never densified.

The recurrences are strictly sequential (each pivot depends on the two
before it); a completed Factorization is immutable and can serve any
number of right-hand sides, concurrently if desired.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as _field
from typing import Optional, Sequence

import numpy as np

from . import _backend
from .errors import InputFormatError, ZeroPivot
from .matrix import NearlyPentaMatrix
from .scalars import ScalarField

__all__ = [
    "Factorization",
    "SolveReport",
    "factorize",
    "determinant",
    "forward_substitute",
    "back_substitute",
    "band_matvec",
    "solve_knpenta",
]


@dataclass(frozen=True)
class Factorization:
    """Compact LU of a nearly pentadiagonal matrix.

    Layout (entry names 1-based, storage 0-based):

      c   pivots, the U diagonal; c[k-1] = c_k
      e   U first superdiagonal for k = 1..n-1; e[n-1] holds the modified
          (2, 4) entry of U instead
      f   L first subdiagonal, f[k-1] = L[k, k-1] for k = 2..n; f[0]
          holds the fill-in multiplier L[n, n-2] instead
      r   L second subdiagonal, r[k-3] = L[k, k-2] for k = 3..n-1
      g   fill-in multiplier L[n, n-3]
      s   U corner entry (1, 4), unchanged by elimination
      a_tilde_kept  U second superdiagonal: the input a_tilde with
          position 2 replaced by the modified (2, 4) entry

    Multiplying the implied L and U reproduces the original matrix
    exactly in exact arithmetic.
    """

    n: int
    c: Sequence
    e: Sequence
    f: Sequence
    r: Sequence
    g: object
    s: object
    a_tilde_kept: Sequence
    field: ScalarField


@dataclass
class SolveReport:
    """Outcome of a solve: solution, determinant and diagnostics."""

    x: Sequence
    det: object
    mode: str  # "numeric", "exact" or "symbolic"
    zero_pivots: list = _field(default_factory=list)  # 1-based rescued pivots
    residual_norm: Optional[float] = None  # max |Ax - y| entry, numeric only
    symbolic_x: Optional[list] = None  # pre-substitution components


def _factor_generic(d, a, at, b, bt, s, t, pivot_is_zero, on_zero_pivot):
    """Shared elimination recurrence over any scalar realization.

    Inputs are 0-based lists. on_zero_pivot(k) either raises or returns a
    replacement pivot value (the symbolic rescue). The a_tilde copy has
    its position 2 replaced by the modified corner before any later step
    reads it, which the k=3 and k=4 recurrences do.
    """
    n = len(d)
    c = [None] * n
    e = [None] * n
    f = [None] * n
    r = [None] * (n - 3)
    ak = list(at)

    ck = d[0]
    if pivot_is_zero(ck):
        ck = on_zero_pivot(1)
    c[0] = ck
    e[0] = a[0]
    f[1] = b[0] / c[0]
    ck = d[1] - f[1] * e[0]
    if pivot_is_zero(ck):
        ck = on_zero_pivot(2)
    c[1] = ck
    e[1] = a[1] - f[1] * at[0]
    corner = at[1] - f[1] * s
    e[n - 1] = corner
    ak[1] = corner
    for i in range(3, n):  # 1-based pivot index, c_3 .. c_{n-1}
        ri = bt[i - 3] / c[i - 3]
        r[i - 3] = ri
        fi = (b[i - 2] - ri * e[i - 3]) / c[i - 2]
        f[i - 1] = fi
        ck = d[i - 1] - fi * e[i - 2] - ri * ak[i - 3]
        if pivot_is_zero(ck):
            ck = on_zero_pivot(i)
        c[i - 1] = ck
        if i == 3:
            # row 3 also eliminates against the s corner
            e[2] = a[2] - fi * ak[1] - ri * s
        else:
            e[i - 1] = a[i - 1] - fi * ak[i - 2]
    g = t / c[n - 4]
    f[0] = (bt[n - 3] - g * e[n - 4]) / c[n - 3]
    f[n - 1] = (b[n - 2] - g * ak[n - 4] - f[0] * e[n - 3]) / c[n - 2]
    ck = d[n - 1] - f[0] * ak[n - 3] - f[n - 1] * e[n - 2]
    if pivot_is_zero(ck):
        # the factorization exists without c_n; only the solve needs it,
        # so the last pivot is reported after the structure is complete
        ck = on_zero_pivot(n)
    c[n - 1] = ck
    return c, e, f, r, g, ak


def _forward_generic(f, r, g, y):
    n = len(y)
    z = [None] * n
    z[0] = y[0]
    z[1] = y[1] - f[1] * z[0]
    for i in range(3, n):
        z[i - 1] = y[i - 1] - f[i - 1] * z[i - 2] - r[i - 3] * z[i - 3]
    z[n - 1] = y[n - 1] - f[n - 1] * z[n - 2] - f[0] * z[n - 3] - g * z[n - 4]
    return z


def _backward_generic(c, e, ak, s, z):
    n = len(z)
    x = [None] * n
    x[n - 1] = z[n - 1] / c[n - 1]
    x[n - 2] = (z[n - 2] - e[n - 2] * x[n - 1]) / c[n - 2]
    for i in range(n - 3, 0, -1):
        x[i] = (z[i] - e[i] * x[i + 1] - ak[i] * x[i + 2]) / c[i]
    x[0] = (z[0] - e[0] * x[1] - ak[0] * x[2] - s * x[3]) / c[0]
    return x


def _as_lists(m: NearlyPentaMatrix):
    vecs = (m.d, m.a, m.a_tilde, m.b, m.b_tilde)
    return [v.tolist() if isinstance(v, np.ndarray) else list(v) for v in vecs]


def _raise_zero_pivot(k):
    raise ZeroPivot(k)


def factorize(m: NearlyPentaMatrix, pivot_tol: float = 0.0) -> Factorization:
    """Factor a packed matrix; raises ZeroPivot(k) on a vanishing pivot.

    pivot_tol applies to float matrices only: a pivot with |c| <= tol is
    treated as zero. Exact fields use the exact zero test and ignore it.
    The input matrix is never modified.
    """
    fld = m.field
    if not fld.is_exact:
        kern = _backend.kernels()
        if kern is not None:
            fail, c, e, f, r, g, ak = kern.factor(
                m.d, m.a, m.a_tilde, m.b, m.b_tilde,
                float(m.s), float(m.t), float(pivot_tol),
            )
            if fail:
                raise ZeroPivot(fail)
            return Factorization(m.n, c, e, f, r, g, m.s, ak, fld)
        tol = float(pivot_tol)
        pivot_is_zero = lambda v: abs(v) <= tol
    else:
        pivot_is_zero = fld.is_zero
    d, a, at, b, bt = _as_lists(m)
    c, e, f, r, g, ak = _factor_generic(
        d, a, at, b, bt, m.s, m.t,
        pivot_is_zero=pivot_is_zero, on_zero_pivot=_raise_zero_pivot,
    )
    return Factorization(m.n, tuple(c), tuple(e), tuple(f), tuple(r),
                         g, m.s, tuple(ak), fld)


def determinant(fac: Factorization):
    """Determinant of the factored matrix: the product of the pivots."""
    if isinstance(fac.c, np.ndarray):
        with np.errstate(over="ignore"):
            return float(np.prod(fac.c))
    return math.prod(fac.c, start=fac.field.one)


def _check_length(vec, n, what):
    if len(vec) != n:
        raise InputFormatError(f"{what} must have length {n}")


def forward_substitute(fac: Factorization, y):
    """Solve L z = y with the stored multipliers."""
    _check_length(y, fac.n, "right-hand side")
    if isinstance(fac.c, np.ndarray):
        kern = _backend.kernels()
        yv = np.ascontiguousarray(y, dtype=np.float64)
        if kern is not None:
            return kern.forward(fac.f, fac.r, float(fac.g), yv)
        return np.asarray(_forward_generic(
            fac.f.tolist(), fac.r.tolist(), float(fac.g), yv.tolist()))
    yv = [fac.field.coerce(v) for v in y]
    return _forward_generic(fac.f, fac.r, fac.g, yv)


def back_substitute(fac: Factorization, z):
    """Solve U x = z against the pivots."""
    _check_length(z, fac.n, "intermediate vector")
    if isinstance(fac.c, np.ndarray):
        kern = _backend.kernels()
        zv = np.ascontiguousarray(z, dtype=np.float64)
        if kern is not None:
            return kern.backward(fac.c, fac.e, fac.a_tilde_kept, float(fac.s), zv)
        return np.asarray(_backward_generic(
            fac.c.tolist(), fac.e.tolist(), fac.a_tilde_kept.tolist(),
            float(fac.s), zv.tolist()))
    zv = list(z)
    return _backward_generic(fac.c, fac.e, fac.a_tilde_kept, fac.s, zv)


def band_matvec(m: NearlyPentaMatrix, x):
    """Product A @ x using only the packed bands; O(n) time."""
    _check_length(x, m.n, "vector")
    if not m.field.is_exact:
        xv = np.ascontiguousarray(x, dtype=np.float64)
        out = np.asarray(m.d) * xv
        out[:-1] += np.asarray(m.a) * xv[1:]
        out[:-2] += np.asarray(m.a_tilde) * xv[2:]
        out[1:] += np.asarray(m.b) * xv[:-1]
        out[2:] += np.asarray(m.b_tilde) * xv[:-2]
        out[0] += m.s * xv[3]
        out[-1] += m.t * xv[-4]
        return out
    xv = [m.field.coerce(v) for v in x]
    n = m.n
    d, a, at, b, bt = m.d, m.a, m.a_tilde, m.b, m.b_tilde
    out = [None] * n
    out[0] = d[0] * xv[0] + a[0] * xv[1] + at[0] * xv[2] + m.s * xv[3]
    out[1] = b[0] * xv[0] + d[1] * xv[1] + a[1] * xv[2] + at[1] * xv[3]
    for i in range(2, n - 2):
        out[i] = (bt[i - 2] * xv[i - 2] + b[i - 1] * xv[i - 1]
                  + d[i] * xv[i] + a[i] * xv[i + 1] + at[i] * xv[i + 2])
    out[n - 2] = (bt[n - 4] * xv[n - 4] + b[n - 3] * xv[n - 3]
                  + d[n - 2] * xv[n - 2] + a[n - 2] * xv[n - 1])
    out[n - 1] = (m.t * xv[n - 4] + bt[n - 3] * xv[n - 3]
                  + b[n - 2] * xv[n - 2] + d[n - 1] * xv[n - 1])
    return out


def solve_knpenta(m: NearlyPentaMatrix, y, pivot_tol: float = 0.0) -> SolveReport:
    """Factor once and solve A x = y in a single O(n) pass.

    Raises ZeroPivot when any pivot vanishes (see factorize); callers
    wanting the symbolic rescue on that should use solve_auto. Float
    matrices get a max-norm residual in the report; exact results are
    validated by construction and carry none.
    """
    fac = factorize(m, pivot_tol=pivot_tol)
    if not m.field.is_exact:
        yv = np.ascontiguousarray(y, dtype=np.float64)
    else:
        yv = [m.field.coerce(v) for v in y]
    z = forward_substitute(fac, yv)
    x = back_substitute(fac, z)
    det = determinant(fac)
    if m.field.is_exact:
        return SolveReport(x=x, det=det, mode="exact")
    residual = float(np.max(np.abs(band_matvec(m, x) - yv)))
    return SolveReport(x=np.asarray(x), det=det, mode="numeric",
                       residual_norm=residual)
