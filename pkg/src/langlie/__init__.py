"""Langlie sensitivity-testing toolkit.

Simulates and conducts Langlie adaptive sensitivity tests, fits probit or
logistic models by maximum likelihood, and ships a Monte Carlo harness
demonstrating that the design's input sequence keeps jumping forever (so
the terminal input is not a usable median estimator, unlike
Robbins-Monro's).
"""

from .design import (
    LanglieDesign,
    RMSchedule,
    RobbinsMonroDesign,
    TrialHistory,
    balance_index,
    cumulative_sums,
    langlie_next,
    replay_inputs,
    robbins_monro_next,
    run_design,
    verify_replay,
)
from .errors import (
    CheckFailure,
    CouplingViolationError,
    DegenerateSlopeError,
    EmptyHistoryError,
    LanglieError,
    NonConvergenceError,
    RecordFormatError,
    SeparationError,
    SessionClosedError,
    StaleStimulusError,
    UnknownSessionError,
    ValidationError,
)
from .estimation import FitResult, estimate_median, fit_mle, log_likelihood
from .models import (
    FAILURE,
    SUCCESS,
    SensitivityModel,
    draw_outcome,
    eval_cdf,
    eval_sf,
    median,
    quantile,
)
from .walks import (
    CoupledPathPair,
    DominanceVerdict,
    ReflectedWalkParams,
    check_stochastic_dominance,
    coupled_langlie_paths,
    coupled_paths,
    langlie_conditional,
    reflected_walk_step,
    run_reflected_walk,
    running_max,
    stationary_distribution,
    endpoint_p_bound,
    visit_count,
)

__version__ = "0.1.0"

__all__ = [
    "CheckFailure",
    "CoupledPathPair",
    "CouplingViolationError",
    "DegenerateSlopeError",
    "DominanceVerdict",
    "EmptyHistoryError",
    "FAILURE",
    "FitResult",
    "LanglieDesign",
    "LanglieError",
    "NonConvergenceError",
    "RMSchedule",
    "RecordFormatError",
    "ReflectedWalkParams",
    "RobbinsMonroDesign",
    "SUCCESS",
    "SensitivityModel",
    "SeparationError",
    "SessionClosedError",
    "StaleStimulusError",
    "TrialHistory",
    "UnknownSessionError",
    "ValidationError",
    "balance_index",
    "check_stochastic_dominance",
    "coupled_langlie_paths",
    "coupled_paths",
    "cumulative_sums",
    "draw_outcome",
    "estimate_median",
    "eval_cdf",
    "eval_sf",
    "fit_mle",
    "langlie_conditional",
    "langlie_next",
    "log_likelihood",
    "median",
    "quantile",
    "reflected_walk_step",
    "replay_inputs",
    "robbins_monro_next",
    "run_design",
    "run_reflected_walk",
    "running_max",
    "stationary_distribution",
    "endpoint_p_bound",
    "verify_replay",
    "visit_count",
]
