"""Numerics for the normalized generalized Rabotnov function and sampled
verification of the lower bounds for its partial-sum ratios."""

from .bounds import BoundResult, RatioKind, lemma2_bound, theorem_bound
from .coeffs import (
    Coefficient,
    RabotnovParams,
    SeriesKind,
    coefficient,
    lemma1_margin,
    log_gamma,
    tail_majorant,
    weighted_coefficient,
)
from .errors import (
    ConvergenceError,
    DegenerateDenominatorError,
    DomainError,
    HypothesisError,
    PoleError,
    RabotnovError,
)
from .functions import (
    EvalResult,
    SpecialCase,
    eval_mittag_leffler,
    eval_partial_sum,
    eval_ratio,
    eval_series,
    eval_special_case,
)
from .verify import (
    SamplingGrid,
    VerificationCertificate,
    corollary_table,
    estimate_infimum,
    verify_lemma2,
    verify_theorem,
    verify_univalence_remark,
)

__version__ = "0.1.0"

__all__ = [
    "BoundResult",
    "Coefficient",
    "coefficient",
    "ConvergenceError",
    "corollary_table",
    "DegenerateDenominatorError",
    "DomainError",
    "estimate_infimum",
    "eval_mittag_leffler",
    "eval_partial_sum",
    "eval_ratio",
    "eval_series",
    "eval_special_case",
    "EvalResult",
    "HypothesisError",
    "lemma1_margin",
    "lemma2_bound",
    "log_gamma",
    "PoleError",
    "RabotnovError",
    "RabotnovParams",
    "RatioKind",
    "SamplingGrid",
    "SeriesKind",
    "SpecialCase",
    "tail_majorant",
    "theorem_bound",
    "VerificationCertificate",
    "verify_lemma2",
    "verify_theorem",
    "verify_univalence_remark",
    "weighted_coefficient",
]
