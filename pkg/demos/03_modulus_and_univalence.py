"""
Modulus bounds and a univalence check
=====================================

Besides ratio bounds, each series obeys a simple upper bound on its modulus
over the unit disk.  And when the derivative-ratio bound is nonnegative the
derivative has positive real part, which makes the function univalent.

Both facts are sampled here.
"""

import numpy as np

from rabotnov import RabotnovParams, SeriesKind, verify_lemma2, verify_univalence_remark
from rabotnov.bounds import all_lemma2_bounds

###############################################################################
# Modulus bounds
# --------------
# Upper bounds ("orientation" upper).  The certificate stores the largest
# sampled modulus and margin = bound - observed.

p = RabotnovParams(alpha=0.0, gamma_shape=1.0, beta=-1 / 3)
for kind, res in all_lemma2_bounds(p).items():
    cert = verify_lemma2(p, kind)
    print(f"{kind.value:>10}: sup|f| = {cert.observed_infimum:.6f} <= {res.bound:.6f}  ({cert.passed})")

###############################################################################
# Strict hypotheses
# -----------------
# At |beta| = gamma + alpha the derivative bound blows up and the check is
# refused rather than failed.

edge = RabotnovParams(alpha=0.0, gamma_shape=1.0, beta=1.0)
res = all_lemma2_bounds(edge)[SeriesKind.DERIVATIVE]
print(f"\nedge case: bound {res.bound}, hypothesis ok: {res.hypothesis_ok}")

###############################################################################
# Positive real part of the derivative
# ------------------------------------

cases = [
    RabotnovParams(alpha=0.0, gamma_shape=1.0, beta=-1 / 3),
    RabotnovParams(alpha=1.0, gamma_shape=1.0, beta=0.5),
    RabotnovParams(alpha=1.0, gamma_shape=1.0, beta=0.2 + 0.2j),
]
for q in cases:
    cert = verify_univalence_remark(q)
    print(f"beta = {q.beta:.4f}: min Re R' = {cert.observed_infimum:.6f} >= {cert.bound:.6f}  ({cert.passed})")

###############################################################################
# Where the extremes sit
# ----------------------
# For all these cases the extreme values are on the outermost sampled
# circle, consistent with the minimum principle for harmonic functions.

cert = verify_univalence_remark(RabotnovParams(alpha=1.0, gamma_shape=1.0, beta=0.5))
print(f"\nargmin z = {cert.argmin:.6f}, |z| = {abs(cert.argmin):.4f}, angle/pi = {np.angle(cert.argmin) / np.pi:.4f}")
