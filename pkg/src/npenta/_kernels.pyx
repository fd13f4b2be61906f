# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled float64 recurrences: band factorization and the two sweeps.

These mirror the pure Python implementations in npenta.factor term for
term, in the same evaluation order, so both backends produce identical
results (the build disables floating-point contraction).
"""

import numpy as np

from libc.math cimport fabs


def factor(const double[::1] d, const double[::1] a, const double[::1] at,
           const double[::1] b, const double[::1] bt,
           double s, double t, double tol):
    """Factor the packed bands.

    Returns (fail, c, e, f, r, g, ak) where fail is the 1-based index of
    the first pivot with |pivot| <= tol, or 0 on success. On failure the
    arrays hold whatever was computed before the stop.
    """
    cdef Py_ssize_t n = d.shape[0]
    c_arr = np.empty(n)
    e_arr = np.empty(n)
    f_arr = np.empty(n)
    r_arr = np.empty(n - 3)
    ak_arr = np.empty(n - 2)
    cdef double[::1] c = c_arr
    cdef double[::1] e = e_arr
    cdef double[::1] f = f_arr
    cdef double[::1] r = r_arr
    cdef double[::1] ak = ak_arr
    cdef Py_ssize_t i
    cdef double ri, fi, ck, corner
    cdef double g = 0.0

    for i in range(n - 2):
        ak[i] = at[i]

    ck = d[0]
    if fabs(ck) <= tol:
        return 1, c_arr, e_arr, f_arr, r_arr, g, ak_arr
    c[0] = ck
    e[0] = a[0]
    f[1] = b[0] / c[0]
    ck = d[1] - f[1] * e[0]
    if fabs(ck) <= tol:
        return 2, c_arr, e_arr, f_arr, r_arr, g, ak_arr
    c[1] = ck
    e[1] = a[1] - f[1] * at[0]
    corner = at[1] - f[1] * s
    e[n - 1] = corner
    ak[1] = corner
    for i in range(3, n):
        ri = bt[i - 3] / c[i - 3]
        r[i - 3] = ri
        fi = (b[i - 2] - ri * e[i - 3]) / c[i - 2]
        f[i - 1] = fi
        ck = d[i - 1] - fi * e[i - 2] - ri * ak[i - 3]
        if fabs(ck) <= tol:
            return i, c_arr, e_arr, f_arr, r_arr, g, ak_arr
        c[i - 1] = ck
        if i == 3:
            e[2] = a[2] - fi * ak[1] - ri * s
        else:
            e[i - 1] = a[i - 1] - fi * ak[i - 2]
    g = t / c[n - 4]
    f[0] = (bt[n - 3] - g * e[n - 4]) / c[n - 3]
    f[n - 1] = (b[n - 2] - g * ak[n - 4] - f[0] * e[n - 3]) / c[n - 2]
    ck = d[n - 1] - f[0] * ak[n - 3] - f[n - 1] * e[n - 2]
    c[n - 1] = ck
    if fabs(ck) <= tol:
        # the factorization itself is complete; only the solve is blocked
        return n, c_arr, e_arr, f_arr, r_arr, g, ak_arr
    return 0, c_arr, e_arr, f_arr, r_arr, g, ak_arr


def forward(const double[::1] f, const double[::1] r, double g,
            const double[::1] y):
    """Forward sweep: unit lower triangular solve with the stored multipliers."""
    cdef Py_ssize_t n = y.shape[0]
    z_arr = np.empty(n)
    cdef double[::1] z = z_arr
    cdef Py_ssize_t i
    z[0] = y[0]
    z[1] = y[1] - f[1] * z[0]
    for i in range(3, n):
        z[i - 1] = y[i - 1] - f[i - 1] * z[i - 2] - r[i - 3] * z[i - 3]
    z[n - 1] = y[n - 1] - f[n - 1] * z[n - 2] - f[0] * z[n - 3] - g * z[n - 4]
    return z_arr


def backward(const double[::1] c, const double[::1] e, const double[::1] ak,
             double s, const double[::1] z):
    """Backward sweep: upper triangular solve against the pivots."""
    cdef Py_ssize_t n = z.shape[0]
    x_arr = np.empty(n)
    cdef double[::1] x = x_arr
    cdef Py_ssize_t i
    x[n - 1] = z[n - 1] / c[n - 1]
    x[n - 2] = (z[n - 2] - e[n - 2] * x[n - 1]) / c[n - 2]
    for i in range(n - 3, 0, -1):
        x[i] = (z[i] - e[i] * x[i + 1] - ak[i] * x[i + 2]) / c[i]
    x[0] = (z[0] - e[0] * x[1] - ak[0] * x[2] - s * x[3]) / c[0]
    return x_arr
