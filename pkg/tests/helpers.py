"""Shared test machinery: random system builders and dense reassembly."""
import random
from fractions import Fraction

from npenta import NearlyPentaMatrix, ZeroPivot, dense_det, factorize, gen_random
from npenta.scalars import RATIONAL


def random_rhs(rng, n):
    return [rng.randint(-9, 9) for _ in range(n)]


def random_exact_system(seed, n=None):
    """Seeded nonsingular system with integer entries in [-9, 9]."""
    rng = random.Random(seed)
    if n is None:
        n = rng.randint(5, 30)
    m = gen_random(n, seed=rng.randrange(1 << 30), ensure_nonsingular=True)
    return m, random_rhs(rng, n)


def random_clean_system(seed, n=None):
    """Nonsingular system whose direct factorization has no zero pivot.

    Nonsingularity alone only guarantees the last pivot; intermediate
    leading minors can still vanish, so filter those draws out.
    """
    rng = random.Random(seed)
    while True:
        m, y = random_exact_system(rng.randrange(1 << 30), n=n)
        try:
            factorize(m)
        except ZeroPivot:
            continue
        return m, y


def _with_diagonal_entry(m, k, value):
    d = list(m.d)
    d[k - 1] = value
    return NearlyPentaMatrix.from_bands(
        d, m.a, m.a_tilde, m.b, m.b_tilde, m.s, m.t, field=RATIONAL)


def zero_pivot_system(seed, n=None, k=None):
    """Nonsingular system whose leading k by k block is singular, so the
    direct elimination hits a zero pivot at position k (or earlier).

    Built independently of the banded code: the k-th leading minor is
    linear in d_k, so two dense determinant evaluations pin the d_k that
    makes it vanish.
    """
    rng = random.Random(seed)
    if n is None:
        n = rng.randint(5, 30)
    if k is None:
        k = rng.randint(1, n - 1)
    while True:
        m = gen_random(n, seed=rng.randrange(1 << 30))
        if k == 1:
            cand = _with_diagonal_entry(m, 1, 0)
        else:
            dense = m.to_dense()
            block = [row[:k] for row in dense[:k]]
            block[k - 1][k - 1] = Fraction(0)
            det0 = dense_det(block)
            block[k - 1][k - 1] = Fraction(1)
            det1 = dense_det(block)
            coef = det1 - det0  # the (k-1)-th leading minor
            if coef == 0:
                continue
            cand = _with_diagonal_entry(m, k, -det0 / coef)
        if dense_det(cand.to_dense()) == 0:
            continue
        return cand, random_rhs(rng, n), k


def double_zero_pivot_system(seed, n, k1, k2):
    """Nonsingular system with two singular leading blocks (k1 < k2)."""
    rng = random.Random(seed)
    while True:
        m, _, _ = zero_pivot_system(rng.randrange(1 << 30), n=n, k=k1)
        dense = m.to_dense()
        block = [row[:k2] for row in dense[:k2]]
        block[k2 - 1][k2 - 1] = Fraction(0)
        det0 = dense_det(block)
        block[k2 - 1][k2 - 1] = Fraction(1)
        det1 = dense_det(block)
        coef = det1 - det0
        if coef == 0:
            continue
        cand = _with_diagonal_entry(m, k2, -det0 / coef)
        if dense_det(cand.to_dense()) == 0:
            continue
        return cand, random_rhs(rng, n)


def reassemble_L_U(fac):
    """Dense L and U implied by a factorization (exact fields)."""
    n = fac.n
    one, zero = fac.field.one, fac.field.zero
    L = [[zero] * n for _ in range(n)]
    U = [[zero] * n for _ in range(n)]
    for i in range(n):
        L[i][i] = one
    for k in range(2, n + 1):
        L[k - 1][k - 2] = fac.f[k - 1]
    for k in range(3, n):
        L[k - 1][k - 3] = fac.r[k - 3]
    L[n - 1][n - 3] = fac.f[0]
    L[n - 1][n - 4] = fac.g
    for k in range(1, n + 1):
        U[k - 1][k - 1] = fac.c[k - 1]
    for k in range(1, n):
        U[k - 1][k] = fac.e[k - 1]
    for k in range(1, n - 1):
        U[k - 1][k + 1] = fac.a_tilde_kept[k - 1]
    U[0][3] = fac.s
    return L, U


def matmul(A, B):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]
