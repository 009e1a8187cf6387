"""Closed-form lower bounds for the six ratios and the three modulus bounds.

Every bound depends on beta only through |beta| and on (alpha, gamma) only
through s = gamma + alpha.  Bounds are returned even when the hypothesis of
the underlying inequality fails; ``hypothesis_ok`` says whether it holds.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .coeffs import RabotnovParams, SeriesKind

__all__ = [
    "RatioKind",
    "BoundResult",
    "theorem_bound",
    "lemma2_bound",
    "all_theorem_bounds",
    "all_lemma2_bounds",
]


class RatioKind(enum.Enum):
    """The six ratios of a series to its partial sum (or the reciprocal)."""

    F_OVER_FM = "FOverFm"
    FM_OVER_F = "FmOverF"
    FP_OVER_FMP = "FpOverFmp"
    FMP_OVER_FP = "FmpOverFp"
    I_OVER_IM = "IOverIm"
    IM_OVER_I = "ImOverI"

    @property
    def kind(self) -> SeriesKind:
        return _RATIO_SERIES[self]

    @property
    def full_over_partial(self) -> bool:
        """True when the infinite series is the numerator."""
        return self in (RatioKind.F_OVER_FM, RatioKind.FP_OVER_FMP, RatioKind.I_OVER_IM)

    @classmethod
    def parse(cls, text: str) -> "RatioKind":
        key = text.strip().lower().replace("_", "").replace("-", "")
        for r in cls:
            if r.value.lower() == key or r.name.lower().replace("_", "") == key:
                return r
        raise ValueError(f"unknown ratio {text!r}; expected one of {[r.value for r in cls]}")


_RATIO_SERIES = {
    RatioKind.F_OVER_FM: SeriesKind.BASE,
    RatioKind.FM_OVER_F: SeriesKind.BASE,
    RatioKind.FP_OVER_FMP: SeriesKind.DERIVATIVE,
    RatioKind.FMP_OVER_FP: SeriesKind.DERIVATIVE,
    RatioKind.I_OVER_IM: SeriesKind.ALEXANDER,
    RatioKind.IM_OVER_I: SeriesKind.ALEXANDER,
}


@dataclass(frozen=True)
class BoundResult:
    """A bound value and whether the hypothesis it rests on is satisfied.

    ``orientation`` is "lower" for bounds on Re of a ratio and "upper" for
    modulus bounds.
    """

    bound: float
    hypothesis_ok: bool
    hypothesis_text: str
    orientation: str = "lower"


def _quotient(num: float, den: float, at_zero: float) -> float:
    return num / den if den != 0.0 else at_zero


def theorem_bound(params: RabotnovParams, ratio: RatioKind) -> BoundResult:
    s = params.order
    b = params.beta_abs
    if ratio is RatioKind.F_OVER_FM:
        value = _quotient(2 * s - 3 * b, 2 * s - b, math.nan)
        ok, text = 2 * s >= 3 * b, "2(gamma+alpha) >= 3|beta|"
    elif ratio is RatioKind.FM_OVER_F:
        value = _quotient(2 * s - b, 2 * s + b, math.nan)
        ok, text = 2 * s >= 3 * b, "2(gamma+alpha) >= 3|beta|"
    elif ratio is RatioKind.FP_OVER_FMP:
        value = _quotient(s - 3 * b, s - b, math.nan)
        ok, text = s >= 3 * b, "gamma+alpha >= 3|beta|"
    elif ratio is RatioKind.FMP_OVER_FP:
        value = _quotient(s - b, s + b, math.nan)
        ok, text = s >= 3 * b, "gamma+alpha >= 3|beta|"
    elif ratio is RatioKind.I_OVER_IM:
        value = _quotient(2 * s - 2 * b, 2 * s - b, math.nan)
        ok, text = s >= b, "gamma+alpha >= |beta|"
    elif ratio is RatioKind.IM_OVER_I:
        value = (2 * s - b) / (2 * s)
        ok, text = s >= b, "gamma+alpha >= |beta|"
    else:
        raise TypeError(f"not a RatioKind: {ratio!r}")
    return BoundResult(value, bool(ok), text, "lower")


def lemma2_bound(params: RabotnovParams, kind: SeriesKind) -> BoundResult:
    """Upper bound on sup |f| over the disk for the series of ``kind``.

    The hypotheses are strict; at equality the bound is infinite and
    ``hypothesis_ok`` is False.
    """
    s = params.order
    b = params.beta_abs
    if kind is SeriesKind.BASE:
        value = _quotient(2 * s + b, 2 * s - b, math.inf)
        ok, text = 2 * s > b, "2(gamma+alpha) > |beta|"
    elif kind is SeriesKind.DERIVATIVE:
        value = _quotient(s + b, s - b, math.inf)
        ok, text = s > b, "gamma+alpha > |beta|"
    elif kind is SeriesKind.ALEXANDER:
        value = _quotient(2 * s, 2 * s - b, math.inf)
        ok, text = 2 * s > b, "2(gamma+alpha) > |beta|"
    else:
        raise TypeError(f"not a SeriesKind: {kind!r}")
    return BoundResult(value, bool(ok), text, "upper")


def all_theorem_bounds(params: RabotnovParams) -> dict[RatioKind, BoundResult]:
    return {r: theorem_bound(params, r) for r in RatioKind}


def all_lemma2_bounds(params: RabotnovParams) -> dict[SeriesKind, BoundResult]:
    return {k: lemma2_bound(params, k) for k in SeriesKind}
