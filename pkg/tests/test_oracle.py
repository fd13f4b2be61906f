import random
from fractions import Fraction as F

import pytest

import golden
from npenta import SingularMatrix, dense_det, dense_solve, gen_random


def test_solve_golden_system():
    assert dense_solve(golden.DENSE_A, golden.Y_A) == golden.X_A


def test_solve_identity():
    ident = [[1 if i == j else 0 for j in range(6)] for i in range(6)]
    y = [5, -2, F(1, 3), 0, 7, 9]
    assert dense_solve(ident, y) == [F(v) for v in y]


def test_solve_singular_rank_deficient():
    with pytest.raises(SingularMatrix):
        dense_solve([[1, 2], [2, 4]], [1, 1])
    # consistent right-hand side still counts as singular (rank < n)
    with pytest.raises(SingularMatrix):
        dense_solve([[1, 2], [2, 4]], [1, 2])


def test_det_golden_values():
    assert dense_det(golden.DENSE_A) == golden.DET_A
    assert dense_det(golden.DENSE_B) == golden.DET_B


def test_det_identity_and_triangular():
    ident = [[1 if i == j else 0 for j in range(5)] for i in range(5)]
    assert dense_det(ident) == 1
    rng = random.Random(13)
    for _ in range(20):
        n = rng.randint(2, 8)
        tri = [[F(rng.randint(-5, 5)) if j >= i else F(0) for j in range(n)]
               for i in range(n)]
        expected = F(1)
        for i in range(n):
            expected *= tri[i][i]
        assert dense_det(tri) == expected


def test_det_singular_is_zero():
    assert dense_det([[1, 2], [2, 4]]) == 0


def test_solution_satisfies_system():
    rng = random.Random(17)
    for _ in range(25):
        n = rng.randint(5, 12)
        m = gen_random(n, seed=rng.randrange(1 << 30), ensure_nonsingular=True)
        dense = m.to_dense()
        y = [rng.randint(-9, 9) for _ in range(n)]
        x = dense_solve(dense, y)
        for i in range(n):
            assert sum(dense[i][j] * x[j] for j in range(n)) == y[i]


def test_row_swaps_tracked_in_sign():
    # permutation matrix with one swap has determinant -1
    perm = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    assert dense_det(perm) == -1
