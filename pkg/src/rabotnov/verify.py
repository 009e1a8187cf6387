"""Sampled verification of the ratio lower bounds and the modulus bounds.

The real part of a ratio of zero-free analytic functions is harmonic, so its
infimum over a closed disk sits on the boundary circle.  The sampler still
scans a set of concentric circles, then polishes the minimum on each circle
with golden-section search in the angle.  All samples that are evaluated,
including those from refinement, take part in the reported extreme value.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Iterable, Optional

import numpy as np

from .bounds import RatioKind, lemma2_bound, theorem_bound
from .coeffs import RabotnovParams, SeriesKind
from .errors import DegenerateDenominatorError, DomainError, HypothesisError
from .functions import DEFAULT_TOL, ratio_values, series_values

__all__ = [
    "MARGIN_TOL",
    "SINGLE_THREAD_ENV",
    "SamplingGrid",
    "VerificationCertificate",
    "CorollaryRow",
    "COROLLARIES",
    "estimate_infimum",
    "verify_theorem",
    "verify_lemma2",
    "verify_univalence_remark",
    "corollary_table",
    "run_parallel",
    "certificate_to_record",
    "certificate_from_record",
    "CERTIFICATE_FIELDS",
]

MARGIN_TOL = 1e-9
SINGLE_THREAD_ENV = "RABOTNOV_SINGLE_THREAD"

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_GOLDEN_ITERS = 16
_ROUND_SHRINK = 8.0


@dataclass(frozen=True)
class SamplingGrid:
    """Concentric sampling circles inside the unit disk.

    ``points_per_circle`` applies to the outermost circle; inner circles get
    a share proportional to their radius, never fewer than ``min_points``.
    """

    radii: tuple = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99, 0.999)
    points_per_circle: int = 4096
    refine_rounds: int = 3
    min_points: int = 256

    def __post_init__(self):
        radii = tuple(float(r) for r in self.radii)
        object.__setattr__(self, "radii", radii)
        if not radii:
            raise DomainError("grid needs at least one radius")
        if any(not 0.0 < r < 1.0 for r in radii):
            raise DomainError(f"grid radii must lie in (0, 1), got {radii}")
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise DomainError(f"grid radii must be strictly increasing, got {radii}")
        if self.points_per_circle < 1 or self.min_points < 1:
            raise DomainError("points per circle must be positive")
        if self.refine_rounds < 0:
            raise DomainError("refine_rounds must be nonnegative")

    def circle_sizes(self) -> list[int]:
        r_max = self.radii[-1]
        return [max(self.min_points, int(round(self.points_per_circle * r / r_max))) for r in self.radii]


@dataclass(frozen=True)
class VerificationCertificate:
    """Record of one sampled check.

    For lower-bound checks ``observed_infimum`` is the smallest sampled value
    and ``margin = observed - bound``.  For modulus checks (orientation
    "upper") it holds the largest sampled modulus and ``margin = bound -
    observed``.  Either way the check passes when ``margin >= -1e-9``.
    """

    check: str
    params: RabotnovParams
    ratio: Optional[RatioKind]
    kind: SeriesKind
    m: int
    observed_infimum: float
    argmin: complex
    pole_flags: int
    samples: int
    grid: SamplingGrid
    orientation: str = "lower"
    bound: Optional[float] = None
    margin: Optional[float] = None
    passed: Optional[bool] = None

    def with_bound(self, bound: float) -> "VerificationCertificate":
        if self.orientation == "upper":
            margin = bound - self.observed_infimum
        else:
            margin = self.observed_infimum - bound
        return replace(self, bound=bound, margin=margin, passed=bool(margin >= -MARGIN_TOL))


Objective = Callable[[np.ndarray], tuple]


@dataclass
class _Extremum:
    value: float = math.inf
    z: complex = 0j
    poles: int = 0
    samples: int = 0


def _minimize(objective: Objective, grid: SamplingGrid) -> _Extremum:
    """Global minimum of ``objective`` over the grid with angular refinement.

    ``objective(z)`` returns (real values, pole mask).  Pole-flagged samples
    are excluded and counted.
    """
    radii = np.array(grid.radii)
    sizes = grid.circle_sizes()
    z_all = np.concatenate(
        [r * np.exp(2j * np.pi * np.arange(n) / n) for r, n in zip(radii, sizes)]
    )
    values, poles = objective(z_all)
    values = np.where(poles | ~np.isfinite(values), np.inf, values)
    result = _Extremum(poles=int(np.count_nonzero(poles)), samples=int(z_all.size))
    if np.all(np.isinf(values)):
        raise DegenerateDenominatorError("every grid sample was discarded as pole-proximate")

    best_val = np.empty(len(sizes))
    best_theta = np.empty(len(sizes))
    start = 0
    for i, n in enumerate(sizes):
        chunk = values[start:start + n]
        k = int(np.argmin(chunk))
        best_val[i] = chunk[k]
        best_theta[i] = 2.0 * np.pi * k / n
        start += n

    def probe(theta):
        z = radii * np.exp(1j * theta)
        v, p = objective(z)
        v = np.where(p | ~np.isfinite(v), np.inf, v)
        result.poles += int(np.count_nonzero(p))
        result.samples += int(z.size)
        better = v < best_val
        best_val[better] = v[better]
        best_theta[better] = theta[better]
        return v

    half = 2.0 * np.pi / np.array(sizes, dtype=float)
    for _ in range(grid.refine_rounds):
        a = best_theta - half
        b = best_theta + half
        c = b - _GOLDEN * (b - a)
        d = a + _GOLDEN * (b - a)
        fc = probe(c)
        fd = probe(d)
        for _ in range(_GOLDEN_ITERS):
            left = fc < fd
            # keep [a, d] where f(c) < f(d), else [c, b]
            b = np.where(left, d, b)
            a = np.where(left, a, c)
            new_c = np.where(left, b - _GOLDEN * (b - a), d)
            new_d = np.where(left, c, a + _GOLDEN * (b - a))
            probe_at = np.where(left, new_c, new_d)
            fp = probe(probe_at)
            fc, fd = np.where(left, fp, fd), np.where(left, fc, fp)
            c, d = new_c, new_d
        half = half / _ROUND_SHRINK

    # fixed merge order: first circle attaining the global minimum wins
    i = int(np.argmin(best_val))
    result.value = float(best_val[i])
    result.z = complex(radii[i] * np.exp(1j * best_theta[i]))
    return result


def _ratio_objective(params, ratio, m, tol):
    def objective(z):
        values, poles = ratio_values(params, ratio, m, z, tol)
        return values.real, poles

    return objective


def _certificate(check, params, ratio, kind, m, ext, grid, orientation="lower", value=None):
    return VerificationCertificate(
        check=check,
        params=params,
        ratio=ratio,
        kind=kind,
        m=int(m),
        observed_infimum=ext.value if value is None else value,
        argmin=ext.z,
        pole_flags=ext.poles,
        samples=ext.samples,
        grid=grid,
        orientation=orientation,
    )


def estimate_infimum(
    params: RabotnovParams,
    ratio: RatioKind,
    m: int,
    grid: SamplingGrid = SamplingGrid(),
    tol: float = DEFAULT_TOL,
) -> VerificationCertificate:
    """Sampled infimum of Re{ratio} over the grid; bound and verdict left empty."""
    ext = _minimize(_ratio_objective(params, ratio, m, tol), grid)
    return _certificate("theorem", params, ratio, ratio.kind, m, ext, grid)


def verify_theorem(
    params: RabotnovParams,
    ratio: RatioKind,
    m: int,
    grid: SamplingGrid = SamplingGrid(),
    tol: float = DEFAULT_TOL,
) -> VerificationCertificate:
    bound = theorem_bound(params, ratio)
    if not bound.hypothesis_ok:
        raise HypothesisError(
            f"{ratio.value}: hypothesis {bound.hypothesis_text} fails for {params}"
        )
    return estimate_infimum(params, ratio, m, grid, tol).with_bound(bound.bound)


def verify_lemma2(
    params: RabotnovParams,
    kind: SeriesKind,
    grid: SamplingGrid = SamplingGrid(),
    tol: float = DEFAULT_TOL,
) -> VerificationCertificate:
    """Largest sampled |f| for the series of ``kind`` against its modulus bound."""
    bound = lemma2_bound(params, kind)
    if not bound.hypothesis_ok:
        raise HypothesisError(f"{kind.value}: hypothesis {bound.hypothesis_text} fails for {params}")

    def objective(z):
        values = series_values(params, kind, z, tol)
        return -np.abs(values), np.zeros(z.shape, dtype=bool)

    ext = _minimize(objective, grid)
    cert = _certificate("lemma2", params, None, kind, 0, ext, grid, "upper", value=-ext.value)
    return cert.with_bound(bound.bound)


def verify_univalence_remark(
    params: RabotnovParams,
    grid: SamplingGrid = SamplingGrid(),
    tol: float = DEFAULT_TOL,
) -> VerificationCertificate:
    """Smallest sampled Re f'(z) against the derivative-ratio bound with m = 0."""
    bound = theorem_bound(params, RatioKind.FP_OVER_FMP)
    if not bound.hypothesis_ok:
        raise HypothesisError(f"univalence: hypothesis {bound.hypothesis_text} fails for {params}")

    def objective(z):
        values = series_values(params, SeriesKind.DERIVATIVE, z, tol)
        return values.real, np.zeros(z.shape, dtype=bool)

    ext = _minimize(objective, grid)
    cert = _certificate("univalence", params, RatioKind.FP_OVER_FMP, SeriesKind.DERIVATIVE, 0, ext, grid)
    return cert.with_bound(bound.bound)


@dataclass(frozen=True)
class CorollaryRow:
    corollary: int
    expression: str
    constant: Fraction
    certificate: VerificationCertificate


_COR1 = RabotnovParams(alpha=0.0, gamma_shape=1.0, beta=-1.0 / 3.0)
_COR2 = RabotnovParams(alpha=1.0, gamma_shape=1.0, beta=0.5)
_COR3 = RabotnovParams(alpha=1.0, gamma_shape=1.0, beta=-0.25)
_COR4 = RabotnovParams(alpha=1.0, gamma_shape=1.0, beta=1.0)

# (corollary, params, ratio, constant, expression); all with m = 0
COROLLARIES = (
    (1, _COR1, RatioKind.F_OVER_FM, Fraction(3, 5), "exp(-z/3)"),
    (1, _COR1, RatioKind.FM_OVER_F, Fraction(5, 7), "exp(z/3)"),
    (1, _COR1, RatioKind.FP_OVER_FMP, Fraction(0), "-(1/3) exp(-z/3) (z-3)"),
    (1, _COR1, RatioKind.FMP_OVER_FP, Fraction(1, 2), "-3 exp(z/3) / (z-3)"),
    (2, _COR2, RatioKind.F_OVER_FM, Fraction(5, 7), "sqrt(2/z) sinh(sqrt(z/2))"),
    (2, _COR2, RatioKind.FM_OVER_F, Fraction(7, 9), "sqrt(z/2) csch(sqrt(z/2))"),
    (2, _COR2, RatioKind.FP_OVER_FMP, Fraction(1, 3), "cosh(sqrt(z/2))/2 + sinh(sqrt(z/2))/sqrt(2z)"),
    (2, _COR2, RatioKind.FMP_OVER_FP, Fraction(3, 5), "1 / (cosh(sqrt(z/2))/2 + sinh(sqrt(z/2))/sqrt(2z))"),
    (3, _COR3, RatioKind.F_OVER_FM, Fraction(13, 15), "(2/sqrt(z)) sin(sqrt(z)/2)"),
    (3, _COR3, RatioKind.FM_OVER_F, Fraction(15, 17), "(sqrt(z)/2) csc(sqrt(z)/2)"),
    (3, _COR3, RatioKind.FP_OVER_FMP, Fraction(5, 7), "cos(sqrt(z)/2)/2 + sin(sqrt(z)/2)/sqrt(z)"),
    (3, _COR3, RatioKind.FMP_OVER_FP, Fraction(7, 9), "1 / (cos(sqrt(z)/2)/2 + sin(sqrt(z)/2)/sqrt(z))"),
    (4, _COR4, RatioKind.F_OVER_FM, Fraction(1, 3), "sinh(sqrt(z))/sqrt(z)"),
    (4, _COR4, RatioKind.FM_OVER_F, Fraction(3, 5), "sqrt(z) csch(sqrt(z))"),
)


def _single_threaded() -> bool:
    return os.environ.get(SINGLE_THREAD_ENV, "").strip().lower() not in ("", "0", "false", "no")


def run_parallel(fn: Callable, jobs: Iterable[tuple]) -> list:
    """Apply ``fn(*job)`` to each job, preserving job order in the result.

    Uses a thread pool unless the RABOTNOV_SINGLE_THREAD environment variable
    is set; results are identical either way.
    """
    jobs = list(jobs)
    if _single_threaded() or len(jobs) < 2:
        return [fn(*job) for job in jobs]
    with ThreadPoolExecutor(max_workers=min(len(jobs), os.cpu_count() or 1)) as pool:
        return list(pool.map(lambda job: fn(*job), jobs))


def corollary_table(grid: SamplingGrid = SamplingGrid()) -> list[CorollaryRow]:
    """Verify the fourteen special-case inequalities (all with m = 0)."""
    certs = run_parallel(verify_theorem, [(p, r, 0, grid) for _, p, r, _, _ in COROLLARIES])
    return [
        CorollaryRow(number, expr, const, cert)
        for (number, _, _, const, expr), cert in zip(COROLLARIES, certs)
    ]


CERTIFICATE_FIELDS = (
    "check",
    "alpha",
    "beta_re",
    "beta_im",
    "gamma",
    "ratio",
    "kind",
    "orientation",
    "m",
    "bound",
    "observed_infimum",
    "argmin_re",
    "argmin_im",
    "margin",
    "pole_flags",
    "samples",
    "radii",
    "points_per_circle",
    "refine_rounds",
    "min_points",
    "pass",
)


def certificate_to_record(cert: VerificationCertificate) -> dict:
    """Flat record with stable field names; floats are kept as Python floats."""
    return {
        "check": cert.check,
        "alpha": cert.params.alpha,
        "beta_re": cert.params.beta.real,
        "beta_im": cert.params.beta.imag,
        "gamma": cert.params.gamma_shape,
        "ratio": cert.ratio.value if cert.ratio is not None else "",
        "kind": cert.kind.value,
        "orientation": cert.orientation,
        "m": cert.m,
        "bound": cert.bound,
        "observed_infimum": cert.observed_infimum,
        "argmin_re": cert.argmin.real,
        "argmin_im": cert.argmin.imag,
        "margin": cert.margin,
        "pole_flags": cert.pole_flags,
        "samples": cert.samples,
        "radii": " ".join(repr(r) for r in cert.grid.radii),
        "points_per_circle": cert.grid.points_per_circle,
        "refine_rounds": cert.grid.refine_rounds,
        "min_points": cert.grid.min_points,
        "pass": cert.passed,
    }


def _opt_float(v):
    if v is None or v == "":
        return None
    return float(v)


def _opt_bool(v):
    if v is None or v == "":
        return None
    if isinstance(v, str):
        return v.strip().lower() in ("true", "1", "yes")
    return bool(v)


def certificate_from_record(record: dict) -> VerificationCertificate:
    """Inverse of :func:`certificate_to_record`; accepts string values (CSV)."""
    radii = record["radii"]
    if isinstance(radii, str):
        radii = [float(r) for r in radii.split()]
    grid = SamplingGrid(
        radii=tuple(radii),
        points_per_circle=int(record["points_per_circle"]),
        refine_rounds=int(record["refine_rounds"]),
        min_points=int(record["min_points"]),
    )
    params = RabotnovParams(
        alpha=float(record["alpha"]),
        gamma_shape=float(record["gamma"]),
        beta=complex(float(record["beta_re"]), float(record["beta_im"])),
    )
    ratio = RatioKind(record["ratio"]) if record["ratio"] else None
    return VerificationCertificate(
        check=record["check"],
        params=params,
        ratio=ratio,
        kind=SeriesKind(record["kind"]),
        m=int(record["m"]),
        observed_infimum=float(record["observed_infimum"]),
        argmin=complex(float(record["argmin_re"]), float(record["argmin_im"])),
        pole_flags=int(record["pole_flags"]),
        samples=int(record["samples"]),
        grid=grid,
        orientation=record["orientation"],
        bound=_opt_float(record["bound"]),
        margin=_opt_float(record["margin"]),
        passed=_opt_bool(record["pass"]),
    )
