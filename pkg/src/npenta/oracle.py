"""Dense exact-arithmetic reference solver.

Gaussian elimination over Fractions, pivoting to the first nonzero entry
(exact arithmetic needs no magnitude pivoting; the smallest row index is
the deterministic tie-break). This is the independent yardstick the
banded solvers are validated against, and it backs the hidden CLI
subcommand used for fixture generation. Performance is a non-goal.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import InputFormatError, SingularMatrix
from .scalars import parse_rational

__all__ = ["dense_solve", "dense_det"]


def _to_rows(matrix):
    rows = [[parse_rational(v) for v in row] for row in matrix]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise InputFormatError("matrix must be square and nonempty")
    return rows, n


def _first_nonzero(rows, col, start, n):
    for i in range(start, n):
        if rows[i][col] != 0:
            return i
    return -1


def dense_solve(matrix, y):
    """Exact solution of matrix @ x = y.

    Raises SingularMatrix when rank < n, whether or not y happens to be
    consistent.
    """
    rows, n = _to_rows(matrix)
    rhs = [parse_rational(v) for v in y]
    if len(rhs) != n:
        raise InputFormatError(f"right-hand side must have length {n}")
    for col in range(n):
        p = _first_nonzero(rows, col, col, n)
        if p < 0:
            raise SingularMatrix("matrix is singular (rank below size)")
        if p != col:
            rows[col], rows[p] = rows[p], rows[col]
            rhs[col], rhs[p] = rhs[p], rhs[col]
        pivot = rows[col][col]
        base = rows[col]
        for i in range(col + 1, n):
            ratio = rows[i][col]
            if ratio == 0:
                continue
            ratio /= pivot
            row = rows[i]
            for j in range(col, n):
                row[j] -= ratio * base[j]
            rhs[i] -= ratio * rhs[col]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = rhs[i]
        row = rows[i]
        for j in range(i + 1, n):
            acc -= row[j] * x[j]
        x[i] = acc / row[i]
    return x


def dense_det(matrix) -> Fraction:
    """Exact determinant; singular input gives 0. Row swaps flip the sign."""
    rows, n = _to_rows(matrix)
    sign = 1
    for col in range(n):
        p = _first_nonzero(rows, col, col, n)
        if p < 0:
            return Fraction(0)
        if p != col:
            rows[col], rows[p] = rows[p], rows[col]
            sign = -sign
        pivot = rows[col][col]
        base = rows[col]
        for i in range(col + 1, n):
            ratio = rows[i][col]
            if ratio == 0:
                continue
            ratio /= pivot
            row = rows[i]
            for j in range(col + 1, n):
                row[j] -= ratio * base[j]
    det = Fraction(sign)
    for i in range(n):
        det *= rows[i][i]
    return det
