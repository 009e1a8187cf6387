"""Evaluation of the normalized function, its derivative, its Alexander
transform, their partial sums, the closed-form special cases and the
two-parameter Mittag-Leffler function.

All three series share the "reduced" form 1 + sum_n c_n z^n with c_n the
weighted coefficient; the base and Alexander series are z times it and the
derivative series is the reduced form itself.
"""

from __future__ import annotations

import cmath
import enum
import functools
import math
from dataclasses import dataclass

import numpy as np

from .bounds import RatioKind
from .coeffs import (
    TERM_CAP,
    RabotnovParams,
    SeriesKind,
    coefficient_table,
    log_gamma,
    tail_majorant,
)
from .errors import ConvergenceError, DomainError, PoleError

__all__ = [
    "DEFAULT_TOL",
    "MAX_RADIUS",
    "POLE_RTOL",
    "EvalResult",
    "SpecialCase",
    "truncation_terms",
    "reduced_values",
    "series_values",
    "ratio_values",
    "eval_series",
    "eval_partial_sum",
    "eval_special_case",
    "eval_mittag_leffler",
    "eval_ratio",
]

DEFAULT_TOL = 1e-12
# infinite series are evaluated only for |z| <= MAX_RADIUS
MAX_RADIUS = 1.0 - 1e-6
# |den| < POLE_RTOL * max(1, |num|) marks a ratio sample as pole-proximate
POLE_RTOL = 1e-13


@dataclass(frozen=True)
class EvalResult:
    value: complex
    terms_used: int
    tail_bound: float


class SpecialCase(enum.Enum):
    """Parameter triples whose series sum to elementary functions.

    Each member's value is (alpha, beta, gamma).
    """

    EXP = (0.0, -1.0 / 3.0, 1.0)
    SINH_HALF = (1.0, 0.5, 1.0)
    SIN_QUARTER = (1.0, -0.25, 1.0)
    SINH_ONE = (1.0, 1.0, 1.0)
    SINH_TWO = (1.0, 2.0, 1.0)

    @property
    def params(self) -> RabotnovParams:
        alpha, beta, gamma_shape = self.value
        return RabotnovParams(alpha=alpha, gamma_shape=gamma_shape, beta=beta)


def _check_tol(tol: float) -> float:
    tol = float(tol)
    if not tol > 0.0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")
    return tol


@functools.lru_cache(maxsize=4096)
def truncation_terms(params: RabotnovParams, kind: SeriesKind, radius: float, tol: float) -> tuple[int, float]:
    """Smallest N whose tail bound at ``|z| = radius`` is within ``tol``.

    Returns ``(N, tail_bound)``.  The tail bound is the coefficient tail
    majorant times radius**(N+1) for the base and Alexander series and
    radius**N for the derivative.
    """
    tol = _check_tol(tol)
    if not 0.0 <= radius <= MAX_RADIUS:
        raise DomainError(f"|z| must be at most {MAX_RADIUS}, got {radius!r}")
    shift = 0 if kind is SeriesKind.DERIVATIVE else 1
    for n in range(TERM_CAP + 1):
        bound = tail_majorant(params, n, kind) * radius ** (n + shift)
        if bound <= tol:
            return n, bound
    raise ConvergenceError(
        f"series for {params} ({kind.value}) needs more than {TERM_CAP} terms "
        f"to reach tolerance {tol:g} at |z| = {radius}"
    )


def reduced_values(params: RabotnovParams, kind: SeriesKind, z, n_terms: int) -> np.ndarray:
    """Horner evaluation of 1 + sum_{n=1}^{n_terms} c_n z^n, highest degree first."""
    c = coefficient_table(params, kind, n_terms)
    z = np.asarray(z, dtype=complex)
    acc = np.full(z.shape, c[-1], dtype=complex)
    for coef in c[-2::-1]:
        acc = acc * z + coef
    return acc


def _from_reduced(kind: SeriesKind, z, reduced):
    if kind is SeriesKind.DERIVATIVE:
        return reduced
    return z * reduced


def series_values(params: RabotnovParams, kind: SeriesKind, z, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Vectorised infinite-series values at every point of ``z``.

    One truncation index, chosen for the largest ``|z|``, serves the array.
    """
    z = np.asarray(z, dtype=complex)
    radius = float(np.max(np.abs(z))) if z.size else 0.0
    n_terms, _ = truncation_terms(params, kind, radius, tol)
    return _from_reduced(kind, z, reduced_values(params, kind, z, n_terms))


def ratio_values(params: RabotnovParams, ratio: RatioKind, m: int, z, tol: float = DEFAULT_TOL):
    """Vectorised ratio values and a boolean mask of pole-proximate samples.

    Both numerator and denominator are taken in reduced form, so the common
    factor z cancels exactly and the ratio at z = 0 is 1.
    """
    m = _check_m(m)
    kind = ratio.kind
    z = np.asarray(z, dtype=complex)
    radius = float(np.max(np.abs(z))) if z.size else 0.0
    n_terms, _ = truncation_terms(params, kind, radius, tol)
    full = reduced_values(params, kind, z, max(n_terms, m))
    partial = reduced_values(params, kind, z, m)
    num, den = (full, partial) if ratio.full_over_partial else (partial, full)
    poles = np.abs(den) < POLE_RTOL * np.maximum(1.0, np.abs(num))
    with np.errstate(divide="ignore", invalid="ignore"):
        values = num / den
    return values, poles


def _check_m(m: int) -> int:
    if int(m) != m or m < 0:
        raise DomainError(f"m must be a nonnegative integer, got {m!r}")
    if m > TERM_CAP:
        raise DomainError(f"m must not exceed {TERM_CAP}, got {m}")
    return int(m)


def eval_series(params: RabotnovParams, kind: SeriesKind, z: complex, tol: float = DEFAULT_TOL) -> EvalResult:
    z = complex(z)
    r = abs(z)
    if r >= 1.0:
        raise DomainError(f"z must lie in the open unit disk, got |z| = {r}")
    if z == 0:
        return EvalResult(1.0 + 0j if kind is SeriesKind.DERIVATIVE else 0j, 0, 0.0)
    n_terms, tail = truncation_terms(params, kind, r, tol)
    value = _from_reduced(kind, z, complex(reduced_values(params, kind, z, n_terms)))
    return EvalResult(complex(value), n_terms, tail)


def eval_partial_sum(params: RabotnovParams, kind: SeriesKind, m: int, z: complex) -> complex:
    """The m-th partial sum; m = 0 gives z (base, Alexander) or 1 (derivative)."""
    m = _check_m(m)
    z = complex(z)
    if abs(z) > 1.0:
        raise DomainError(f"partial sums are evaluated on the closed unit disk, got |z| = {abs(z)}")
    return complex(_from_reduced(kind, z, complex(reduced_values(params, kind, z, m))))


def eval_special_case(case: SpecialCase, z):
    """Elementary closed form of the series for ``case``, principal square root.

    Works on scalars and arrays; the value at z = 0 is the limit 0.
    """
    z = np.asarray(z, dtype=complex)
    root = np.sqrt(z)
    if case is SpecialCase.EXP:
        out = z * np.exp(-z / 3.0)
    elif case is SpecialCase.SINH_HALF:
        out = np.sqrt(2.0) * root * np.sinh(root / np.sqrt(2.0))
    elif case is SpecialCase.SIN_QUARTER:
        out = 2.0 * root * np.sin(root / 2.0)
    elif case is SpecialCase.SINH_ONE:
        out = root * np.sinh(root)
    elif case is SpecialCase.SINH_TWO:
        out = 0.5 * np.sqrt(2.0) * root * np.sinh(np.sqrt(2.0) * root)
    else:
        raise TypeError(f"not a SpecialCase: {case!r}")
    return complex(out) if out.ndim == 0 else out


def eval_mittag_leffler(a: float, b: float, w: complex, tol: float = DEFAULT_TOL) -> EvalResult:
    """E_{a,b}(w) = sum_k w^k / Gamma(a k + b) by direct summation.

    Tail control: the term ratio |w| Gamma(ak+b)/Gamma(ak+a+b) decreases in k
    (the digamma function is increasing), so once it drops below 1 the tail
    after term K is at most |t_{K+1}| / (1 - ratio_{K+1}).
    """
    a, b = float(a), float(b)
    if not (a > 0.0 and b > 0.0 and math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"Mittag-Leffler parameters must be positive, got a={a!r}, b={b!r}")
    tol = _check_tol(tol)
    w = complex(w)
    wabs = abs(w)
    if wabs == 0.0:
        return EvalResult(complex(math.exp(-log_gamma(b))), 1, 0.0)
    log_w = math.log(wabs)
    real_w = w.imag == 0.0
    arg_w = cmath.phase(w)

    def term(k: int) -> complex:
        mag = math.exp(k * log_w - log_gamma(a * k + b))
        if real_w:
            return complex(-mag if (w.real < 0.0 and k % 2) else mag)
        return cmath.rect(mag, k * arg_w)

    total = 0j
    for k in range(TERM_CAP + 1):
        total += term(k)
        nxt = k + 1
        log_next = nxt * log_w - log_gamma(a * nxt + b)
        ratio = wabs * math.exp(log_gamma(a * nxt + b) - log_gamma(a * nxt + a + b))
        if ratio < 1.0:
            tail = math.exp(log_next) / (1.0 - ratio)
            if tail <= tol:
                return EvalResult(total, k + 1, tail)
    raise ConvergenceError(f"E_(a={a}, b={b})(w={w}) needs more than {TERM_CAP} terms for tol {tol:g}")


def eval_ratio(params: RabotnovParams, ratio: RatioKind, m: int, z: complex, tol: float = DEFAULT_TOL) -> complex:
    """One of the six series / partial-sum ratios at a single point.

    Raises PoleError when the denominator is numerically zero.
    """
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError(f"z must lie in the open unit disk, got |z| = {abs(z)}")
    values, poles = ratio_values(params, ratio, m, np.array([z]), tol)
    if poles[0]:
        raise PoleError(f"denominator of {ratio.value} vanishes numerically at z = {z}")
    return complex(values[0])
