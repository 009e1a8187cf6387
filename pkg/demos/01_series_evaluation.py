"""
Evaluating the normalized series
================================

The normalized generalized Rabotnov function is a power series

    R(z) = z + sum_{n>=1} A_n z^{n+1},   A_n = beta^n Gamma(s) / Gamma(s (n+1)),

with s = gamma + alpha.  This script evaluates it, its derivative and its
Alexander transform, and checks a few parameter choices that reduce to
elementary functions.
"""

import cmath
import math

import numpy as np

from rabotnov import (
    RabotnovParams,
    SeriesKind,
    SpecialCase,
    coefficient,
    eval_mittag_leffler,
    eval_partial_sum,
    eval_series,
    eval_special_case,
)

###############################################################################
# Coefficients
# ------------
# Coefficients are computed in log space, so huge Gamma values never
# overflow.  With alpha = 0, gamma = 1 the coefficients are beta^n / n!.

p = RabotnovParams(alpha=0.0, gamma_shape=1.0, beta=-1 / 3)
for n in range(1, 5):
    c = coefficient(p, n)
    print(f"A_{n} = {c.value.real:+.10f}   (beta^n/n! = {(-1 / 3) ** n / math.factorial(n):+.10f})")

###############################################################################
# One evaluation, with its certified truncation
# ---------------------------------------------
# Every evaluation reports how many terms were used and a rigorous bound on
# the neglected tail.

res = eval_series(p, SeriesKind.BASE, 0.5)
print(f"\nR(0.5) = {res.value.real:.15f} using {res.terms_used} terms, tail <= {res.tail_bound:.1e}")
print(f"closed form 0.5 exp(-1/6) = {0.5 * math.exp(-0.5 / 3):.15f}")

###############################################################################
# The three series kinds
# ----------------------

z = 0.4 + 0.3j
for kind in SeriesKind:
    print(f"{kind.value:>10}: {eval_series(p, kind, z).value:.12f}")

###############################################################################
# Partial sums
# ------------
# The m-th partial sum keeps the first m correction terms.  As m grows it
# approaches the full series.

full = eval_series(p, SeriesKind.BASE, 0.9).value
for m in (0, 1, 2, 4, 8):
    gap = abs(eval_partial_sum(p, SeriesKind.BASE, m, 0.9) - full)
    print(f"m = {m}: |R - R_m| = {gap:.3e}")

###############################################################################
# Elementary special cases
# ------------------------
# Five parameter choices collapse to exponentials and hyperbolic or
# trigonometric functions of sqrt(z).  The series and the closed forms agree
# to rounding over the whole disk.

rng = np.random.default_rng(0)
pts = 0.999 * np.sqrt(rng.uniform(size=500)) * np.exp(1j * rng.uniform(-np.pi, np.pi, 500))
for case in SpecialCase:
    series = np.array([eval_series(case.params, SeriesKind.BASE, w).value for w in pts])
    err = np.max(np.abs(series - eval_special_case(case, pts)))
    print(f"{case.name:<12} max |series - closed form| = {err:.1e}")

###############################################################################
# Relation to the two-parameter Mittag-Leffler function
# -----------------------------------------------------
# R(z) = z Gamma(s) E_{s,s}(beta z), which follows by matching coefficients.

q = RabotnovParams(alpha=0.7, gamma_shape=1.0, beta=cmath.rect(1.5, 2.0))
w = 0.3 - 0.6j
s = q.order
lhs = eval_series(q, SeriesKind.BASE, w).value
rhs = w * math.gamma(s) * eval_mittag_leffler(s, s, q.beta * w).value
print(f"\nR(w) = {lhs:.14f}\nz Gamma(s) E(beta z) = {rhs:.14f}")
