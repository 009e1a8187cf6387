"""Series coefficients of the normalized generalized Rabotnov function.

The normalized function is

    R(z) = z + sum_{n>=1} A_n z^(n+1),   A_n = beta^n Gamma(g+a) / Gamma((g+a)(n+1))

with ``a = alpha >= 0``, ``g = gamma_shape >= 1`` and complex ``beta``.  Every
coefficient is evaluated in log space, so arguments of Gamma far past the
overflow point of ``Gamma`` itself are fine.
"""

from __future__ import annotations

import cmath
import enum
import math
import threading
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "TERM_CAP",
    "RabotnovParams",
    "SeriesKind",
    "Coefficient",
    "log_gamma",
    "coefficient",
    "weighted_coefficient",
    "coefficient_table",
    "lemma1_margin",
    "tail_majorant",
]

# Hard cap on the truncation index of any series in the package.
TERM_CAP = 500

_EULER_GAMMA = 0.57721566490153286061
_HALF_LOG_2PI = 0.91893853320467274178

# zeta(k) - 1 for k = 2, 3, ..., 31
_ZETA_MINUS_ONE = (
    0.64493406684822643647,
    0.2020569031595942854,
    0.082323233711138191516,
    0.036927755143369926331,
    0.017343061984449139715,
    0.0083492773819228268398,
    0.0040773561979443393787,
    0.0020083928260822144179,
    0.00099457512781808533715,
    0.0004941886041194645587,
    0.00024608655330804829864,
    0.00012271334757848914675,
    0.000061248135058704829259,
    0.000030588236307020493552,
    0.000015282259408651871733,
    7.6371976378997622736e-6,
    3.8172932649998398565e-6,
    1.9082127165539389257e-6,
    9.5396203387279611315e-7,
    4.7693298678780646312e-7,
    2.3845050272773299e-7,
    1.1921992596531107307e-7,
    5.9608189051259479612e-8,
    2.9803503514652280186e-8,
    1.4901554828365041235e-8,
    7.450711789835429492e-9,
    3.7253340247884570548e-9,
    1.8626597235130490064e-9,
    9.3132743241966818287e-10,
    4.656629065033784073e-10,
)

# B_{2k} / (2k (2k-1)) for k = 1..8, the Stirling correction coefficients
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)

_STIRLING_MIN = 10.0


def _log_gamma_two_plus(eps: float) -> float:
    """ln Gamma(2 + eps) for |eps| <= 1/2 from the zeta series."""
    acc = 0.0
    power = -eps
    for k, zk in enumerate(_ZETA_MINUS_ONE, start=2):
        power *= -eps
        acc += zk * power / k
    return eps * (1.0 - _EULER_GAMMA) + acc


def _log_gamma_stirling(x: float) -> float:
    inv = 1.0 / x
    inv2 = inv * inv
    corr = 0.0
    for c in reversed(_STIRLING):
        corr = corr * inv2 + c
    return (x - 0.5) * math.log(x) - x + _HALF_LOG_2PI + corr * inv


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for real ``x > 0``.

    Near the zeros of ln Gamma (x = 1 and x = 2) the value comes from the
    Taylor expansion about 2, so the relative error stays at a few ulp there
    too; ``log_gamma(1.0)`` and ``log_gamma(2.0)`` are exactly 0.
    """
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"log_gamma requires a finite positive argument, got {x!r}")
    if x >= _STIRLING_MIN:
        return _log_gamma_stirling(x)
    if x < 0.5:
        return log_gamma(x + 1.0) - math.log(x)
    if x < 1.5:
        eps = x - 1.0
        return _log_gamma_two_plus(eps) - math.log1p(eps)
    # x = 2 + eps + shift with |eps| <= 1/2, then Gamma(x) = Gamma(2+eps) * prod
    shift = int(math.floor(x - 1.5))
    eps = x - (2.0 + shift)
    prod = 1.0
    for j in range(shift):
        prod *= x - (shift - j)
    return _log_gamma_two_plus(eps) + math.log(prod)


@dataclass(frozen=True)
class RabotnovParams:
    """The parameter triple (alpha, beta, gamma) of the generalized function."""

    alpha: float
    gamma_shape: float
    beta: complex

    def __post_init__(self):
        alpha = float(self.alpha)
        gamma_shape = float(self.gamma_shape)
        beta = complex(self.beta)
        if not math.isfinite(alpha) or alpha < 0.0:
            raise DomainError(f"alpha must be finite and >= 0, got {self.alpha!r}")
        if not math.isfinite(gamma_shape) or gamma_shape < 1.0:
            raise DomainError(f"gamma must be finite and >= 1, got {self.gamma_shape!r}")
        if not (math.isfinite(beta.real) and math.isfinite(beta.imag)):
            raise DomainError(f"beta must be finite, got {self.beta!r}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "gamma_shape", gamma_shape)
        object.__setattr__(self, "beta", beta)

    @property
    def order(self) -> float:
        """gamma + alpha, the quantity every bound is expressed in."""
        return self.gamma_shape + self.alpha

    @property
    def beta_abs(self) -> float:
        return abs(self.beta)


class SeriesKind(enum.Enum):
    """Which of the three related series is meant."""

    BASE = "base"
    DERIVATIVE = "derivative"
    ALEXANDER = "alexander"

    def weight(self, n: int) -> float:
        if self is SeriesKind.DERIVATIVE:
            return float(n + 1)
        if self is SeriesKind.ALEXANDER:
            return 1.0 / (n + 1)
        return 1.0


@dataclass(frozen=True)
class Coefficient:
    index: int
    value: complex
    magnitude_majorant: float


def _check_index(n: int) -> int:
    if int(n) != n or n < 1:
        raise DomainError(f"coefficient index must be a positive integer, got {n!r}")
    return int(n)


def _beta_power_phase(beta: complex, n: int) -> complex:
    """Unit-modulus phase of beta**n; exact signs for real beta."""
    if beta.imag == 0.0:
        return complex(-1.0 if (beta.real < 0.0 and n % 2) else 1.0, 0.0)
    return cmath.rect(1.0, n * cmath.phase(beta))


def coefficient(params: RabotnovParams, n: int) -> Coefficient:
    """A_n together with its factorial majorant |beta|^n / ((g+a)^n n!)."""
    n = _check_index(n)
    babs = params.beta_abs
    if babs == 0.0:
        return Coefficient(n, 0j, 0.0)
    s = params.order
    log_b = math.log(babs)
    log_mag = (n * log_b + log_gamma(s)) - log_gamma(s * (n + 1))
    log_major = (n * log_b - n * math.log(s)) - log_gamma(n + 1.0)
    value = math.exp(log_mag) * _beta_power_phase(params.beta, n)
    return Coefficient(n, value, math.exp(log_major))


def weighted_coefficient(params: RabotnovParams, n: int, kind: SeriesKind) -> complex:
    """A_n scaled by the weight of ``kind``: 1, n+1 or 1/(n+1)."""
    a = coefficient(params, n).value
    if kind is SeriesKind.DERIVATIVE:
        return a * (n + 1)
    if kind is SeriesKind.ALEXANDER:
        return a / (n + 1)
    return a


class _CoefficientCache:
    """Append-only store of weighted coefficients per (params, kind).

    Entry 0 is the leading coefficient 1, entry n is the weighted A_n.  The
    lock makes extension atomic, so readers always see a consistent prefix.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._tables: dict[tuple[RabotnovParams, SeriesKind], list[complex]] = {}

    def get(self, params: RabotnovParams, kind: SeriesKind, n_max: int) -> np.ndarray:
        if n_max < 0 or n_max > TERM_CAP:
            raise DomainError(f"truncation index must lie in [0, {TERM_CAP}], got {n_max}")
        key = (params, kind)
        with self._lock:
            table = self._tables.setdefault(key, [1.0 + 0j])
            for n in range(len(table), n_max + 1):
                table.append(weighted_coefficient(params, n, kind))
            return np.array(table[: n_max + 1], dtype=complex)

    def clear(self):
        with self._lock:
            self._tables.clear()


_CACHE = _CoefficientCache()


def coefficient_table(params: RabotnovParams, kind: SeriesKind, n_max: int) -> np.ndarray:
    """Array ``c`` of length ``n_max + 1`` with c[0] = 1 and c[n] = weighted A_n."""
    return _CACHE.get(params, kind, int(n_max))


def lemma1_margin(alpha: float, gamma_shape: float, n: int) -> float:
    """Log-gap in the gamma-factorial inequality.

    Returns ln Gamma((g+a) n) - [(n-1) ln(g+a) + ln (n-1)! + ln Gamma(g+a)],
    which is nonnegative for alpha >= 0, gamma >= 1 and exactly 0 when
    g + a = 1.
    """
    if not alpha >= 0.0:
        raise DomainError(f"alpha must be >= 0, got {alpha!r}")
    if not gamma_shape >= 1.0:
        raise DomainError(f"gamma must be >= 1, got {gamma_shape!r}")
    n = _check_index(n)
    s = gamma_shape + alpha
    rhs = (n - 1) * math.log(s) + log_gamma(float(n)) + log_gamma(s)
    return log_gamma(s * n) - rhs


def _log_exp_tail(x: float, k: int) -> float:
    """log of an upper bound on sum_{j>=k} x^j / j!  (x > 0)."""
    head = k * math.log(x) - log_gamma(k + 1.0)
    if x < k + 1:
        return head - math.log1p(-x / (k + 1))
    return head + x


def _safe_exp(v: float) -> float:
    return math.inf if v > 709.0 else math.exp(v)


def tail_majorant(params: RabotnovParams, N: int, kind: SeriesKind) -> float:
    """Upper bound on sum_{n>N} |weighted A_n| from |A_n| <= x^n / n!, x = |beta|/(g+a).

    The derivative weight is split as (n+1) x^n/n! = x^n/(n-1)! + x^n/n! and
    each piece is bounded by a geometric comparison of factorial ratios.
    """
    if int(N) != N or N < 0:
        raise DomainError(f"N must be a nonnegative integer, got {N!r}")
    N = int(N)
    x = params.beta_abs / params.order
    if x == 0.0:
        return 0.0
    base = _safe_exp(_log_exp_tail(x, N + 1))
    if kind is SeriesKind.DERIVATIVE:
        return x * _safe_exp(_log_exp_tail(x, N)) + base
    return base
