# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops.  Signatures mirror ``_kernels_py``.

Accumulation uses Neumaier's compensated summation.
"""

from libc.math cimport log, pow, exp, expm1, fabs

BACKEND = "cython"


cdef inline void _neumaier(double x, double* s, double* c) noexcept nogil:
    cdef double t = s[0] + x
    if fabs(s[0]) >= fabs(x):
        c[0] += (s[0] - t) + x
    else:
        c[0] += (x - t) + s[0]
    s[0] = t


def log_power_sum(double a, int n_terms, int k):
    cdef double s = 0.0, c = 0.0, y, lg
    cdef int j
    for j in range(n_terms):
        y = j + a
        lg = log(y)
        _neumaier(pow(lg, k) / y, &s, &c)
    return s + c


def dirichlet_deriv_sums(double s, double a, int n_terms, int max_order):
    cdef double sums[8]
    cdef double comp[8]
    cdef double y, t, neg_log
    cdef int n, r
    if max_order > 7:
        raise ValueError("max_order must be <= 7")
    for r in range(max_order + 1):
        sums[r] = 0.0
        comp[r] = 0.0
    for n in range(n_terms):
        y = n + a
        t = pow(y, -s)
        neg_log = -log(y)
        for r in range(max_order + 1):
            _neumaier(t, &sums[r], &comp[r])
            t *= neg_log
    return [sums[r] + comp[r] for r in range(max_order + 1)]


def dirichlet_series_sums(double s, double a, int max_order, double rel_floor, int max_terms):
    cdef double sums[8]
    cdef double comp[8]
    cdef double y, t, base, neg_log
    cdef double first = pow(a, -s)
    cdef int n = 0, r
    if max_order > 7:
        raise ValueError("max_order must be <= 7")
    for r in range(max_order + 1):
        sums[r] = 0.0
        comp[r] = 0.0
    while n < max_terms:
        y = n + a
        base = pow(y, -s)
        neg_log = -log(y)
        t = base
        for r in range(max_order + 1):
            _neumaier(t, &sums[r], &comp[r])
            t *= neg_log
        n += 1
        if base < rel_floor * first:
            break
    return [sums[r] + comp[r] for r in range(max_order + 1)], n


cdef inline double _poly_at(double[::1] coefs, double[::1] exps, double at_one,
                            double u) noexcept nogil:
    cdef double s = at_one, c = 0.0
    cdef Py_ssize_t j
    for j in range(coefs.shape[0]):
        _neumaier(coefs[j] * expm1(-exps[j] * u), &s, &c)
    return s + c


def loglog_trapezoid(double[::1] u, double[::1] logu, double[::1] w,
                     double[::1] num_c, double[::1] num_e, double num_one,
                     double[::1] den_c, double[::1] den_e, double den_one, int k):
    cdef double s = 0.0, c = 0.0, num, den, ui
    cdef Py_ssize_t i
    with nogil:
        for i in range(u.shape[0]):
            ui = u[i]
            num = _poly_at(num_c, num_e, num_one, ui)
            den = _poly_at(den_c, den_e, den_one, ui)
            _neumaier(w[i] * exp(-ui) * num / den * pow(logu[i], k), &s, &c)
    return s + c
