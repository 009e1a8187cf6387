"""
A random parameter sweep
========================

The ratio bounds are inequalities, so the meaningful test is that no sampled
infimum ever drops below its bound.  This sweep draws random parameter sets
inside the hypothesis region, including complex beta, and checks every ratio
for several partial-sum orders.
"""

import cmath

import numpy as np

from rabotnov import RabotnovParams, RatioKind
from rabotnov.verify import SamplingGrid, run_parallel, verify_theorem

rng = np.random.default_rng(2024)

###############################################################################
# Draw parameters
# ---------------
# |beta| <= (gamma + alpha) / 3 satisfies all three hypotheses at once.

params = []
for _ in range(12):
    alpha = rng.uniform(0, 3)
    gamma = rng.uniform(1, 4)
    beta = cmath.rect(rng.uniform(0, 1) * (alpha + gamma) / 3, rng.uniform(-np.pi, np.pi))
    params.append(RabotnovParams(alpha=alpha, gamma_shape=gamma, beta=beta))

###############################################################################
# Verify
# ------
# A lighter grid keeps the sweep quick.  Certificates run in a thread pool;
# set RABOTNOV_SINGLE_THREAD=1 to run serially with identical results.

grid = SamplingGrid(points_per_circle=1024, refine_rounds=2)
jobs = [(p, r, m, grid) for p in params for r in RatioKind for m in (0, 1, 2, 5)]
certs = run_parallel(verify_theorem, jobs)

worst = min(certs, key=lambda c: c.margin)
print(f"{len(certs)} certificates, {sum(c.passed for c in certs)} pass, "
      f"{sum(c.pole_flags for c in certs)} pole flags")
print(f"tightest: {worst.ratio.value} m={worst.m} beta={worst.params.beta:.4f} "
      f"s={worst.params.order:.4f} margin {worst.margin:.2e}")

###############################################################################
# How tight are the bounds?
# -------------------------
# Margin per ratio, smallest over the sweep.

for r in RatioKind:
    margins = [c.margin for c in certs if c.ratio is r]
    print(f"{r.value:<10} min margin {min(margins):.4f}  median {np.median(margins):.4f}")
