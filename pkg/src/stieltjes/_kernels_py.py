"""Pure-Python inner loops; reference twin of ``_kernels_cy.pyx``.

Every accumulation goes through ``math.fsum`` so that the fallback is at
least as accurate as the compiled Neumaier-compensated loops.
"""

import math

BACKEND = "python"


def log_power_sum(a, n_terms, k):
    """sum_{j=0}^{n_terms-1} ln^k(j+a) / (j+a)."""
    terms = []
    for j in range(n_terms):
        y = j + a
        terms.append(math.log(y) ** k / y)
    return math.fsum(terms)


def dirichlet_deriv_sums(s, a, n_terms, max_order):
    """sum_{n<n_terms} (-ln(n+a))^r (n+a)^{-s} for r = 0..max_order."""
    cols = [[] for _ in range(max_order + 1)]
    for n in range(n_terms):
        y = n + a
        base = y ** (-s)
        neg_log = -math.log(y)
        t = base
        for r in range(max_order + 1):
            cols[r].append(t)
            t *= neg_log
    return [math.fsum(c) for c in cols]


def dirichlet_series_sums(s, a, max_order, rel_floor, max_terms):
    """Unbounded direct series for ``s`` large enough to converge quickly.

    Stops once the order-0 term drops below ``rel_floor`` times the first
    term.  Returns ``(sums, terms_used)``.
    """
    cols = [[] for _ in range(max_order + 1)]
    first = a ** (-s)
    n = 0
    while n < max_terms:
        y = n + a
        base = y ** (-s)
        neg_log = -math.log(y)
        t = base
        for r in range(max_order + 1):
            cols[r].append(t)
            t *= neg_log
        n += 1
        if base < rel_floor * first:
            break
    return [math.fsum(c) for c in cols], n


def _poly_at(coefs, exps, at_one, u):
    # P(e^{-u}) = P(1) + sum c_j expm1(-e_j u), exact at x -> 1
    acc = [at_one]
    for c, e in zip(coefs, exps):
        acc.append(c * math.expm1(-e * u))
    return math.fsum(acc)


def loglog_trapezoid(u, logu, w, num_c, num_e, num_one, den_c, den_e, den_one, k):
    """Trapezoid sum of f(e^{-u}) e^{-u} ln^k(u) over precomputed DE nodes."""
    terms = []
    for i in range(len(u)):
        ui = u[i]
        num = _poly_at(num_c, num_e, num_one, ui)
        den = _poly_at(den_c, den_e, den_one, ui)
        terms.append(w[i] * math.exp(-ui) * num / den * logu[i] ** k)
    return math.fsum(terms)
