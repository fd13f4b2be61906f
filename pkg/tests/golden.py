"""Worked 10x10 systems with all printed intermediates, frozen as fixtures.

SYSTEM A factors cleanly; SYSTEM B is identical except d_1 = 0 (and y_1
adjusted to keep the solution at 1..10), so the direct elimination dies
on the first pivot and only the symbolic rescue solves it.
"""
from fractions import Fraction as F

DENSE_A = [
    [3, -1, 3, 5, 0, 0, 0, 0, 0, 0],
    [-2, 2, 1, 2, 0, 0, 0, 0, 0, 0],
    [3, -4, 5, 5, 1, 0, 0, 0, 0, 0],
    [0, 3, -2, 1, 1, 3, 0, 0, 0, 0],
    [0, 0, 6, 1, 2, 5, 1, 0, 0, 0],
    [0, 0, 0, 3, -3, 2, 7, -5, 0, 0],
    [0, 0, 0, 0, -8, 1, 12, 3, -4, 0],
    [0, 0, 0, 0, 0, 2, 5, 3, 1, 20],
    [0, 0, 0, 0, 0, 0, 3, 11, 21, 3],
    [0, 0, 0, 0, 0, 0, -2, 4, -9, 31],
]

BANDS_A = dict(
    d=[3, 2, 5, 1, 2, 2, 12, 3, 21, 31],
    a=[-1, 1, 5, 1, 5, 7, 3, 1, 3],
    a_tilde=[3, 2, 1, 3, 1, -5, -4, 20],
    b=[-2, -4, -2, 1, -3, 1, 5, 11, -9],
    b_tilde=[3, 3, 6, 3, -8, 2, 3, 4],
    s=5,
    t=-2,
)

Y_A = [30, 13, 35, 27, 69, 18, 38, 280, 328, 247]
X_A = [F(k) for k in range(1, 11)]
DET_A = F(-145151505)

# pivots c_1 .. c_10
C_A = [F(3), F(4, 3), F(35, 4), F(1), F(552, 35), F(757, 92),
       F(-1313, 1514), F(14341, 303), F(4112262, 186433), F(701215, 19866)]

# U first superdiagonal e_1 .. e_9 plus the modified (2, 4) corner entry
E_A = [F(-1), F(3), F(12), F(2), F(934, 35), F(1393, 184),
       F(26873, 2271), F(-1371, 101), F(-3532041, 186433)]
E_CORNER_A = F(16, 3)

# L multipliers: f_2 .. f_10 and the last-row fill-in entries
F_SUB_A = [F(-2, 3), F(-9, 4), F(-1), F(-253, 35), F(-105, 184),
           F(4012, 2271), F(-368, 101), F(204567, 186433),
           F(-1203361, 4112262)]
F_FILL_A = F(-91736, 186433)        # L[10, 8]
G_FILL_A = F(-2) / C_A[6]           # L[10, 7] = t / c_7 = 3028/1313

Z_A = [F(30), F(33), F(317, 4), F(32), F(8609, 35), F(11475, 184),
       F(238883, 4542), F(138311, 303), F(129996, 14341), F(3506075, 9933)]


DENSE_B = [row[:] for row in DENSE_A]
DENSE_B[0][0] = 0

BANDS_B = dict(BANDS_A, d=[0] + BANDS_A["d"][1:])

Y_B = [27] + Y_A[1:]
X_B = [F(k) for k in range(1, 11)]
DET_B = F(61394805)

# pre-substitution solution components: (scale, [num coeffs low->high]);
# every component shares the denominator 4589918 x - 4092987
SYM_DEN_B = [-4092987, 4589918]
SYM_NUM_B = [
    (F(1), [-4092987]),
    (F(3), [-2728658, 1490963]),
    (F(1), [-12278961, 11371544]),
    (F(6), [-2728658, 3279301]),
    (F(3), [-6821645, 7767312]),
    (F(1, 3), [-73673766, 90274465]),
    (F(1, 3), [-85952727, 95213875]),
    (F(1, 5), [-163719480, 188851771]),
    (F(1, 15), [-552553245, 612846296]),
    (F(2, 15), [-306974025, 342051296]),
]
