"""Parametric sensitivity distributions and binary trial outcomes.

A sensitivity model is the probability F(x) that a stimulus at level x
produces a success, assumed strictly increasing in x:

    probit:    F(x) = Phi(alpha + beta * x)       (standard normal CDF)
    logistic:  F(x) = expit(alpha + beta * x)

Outcomes are coded +1 (success) / -1 (failure) throughout the toolkit;
conversion to 0/1 happens only inside the likelihood.  A single trial
consumes exactly one uniform via the indicator construction
``y = 2 * 1{u <= F(x)} - 1`` so that simulations can share uniform streams
with the comparison walks in :mod:`langlie.walks`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from .errors import ValidationError

SUCCESS = 1
FAILURE = -1

FAMILIES = ("probit", "logistic")


@dataclass(frozen=True)
class SensitivityModel:
    """Two-parameter link model for the sensitivity distribution.

    ``alpha`` is the link intercept and ``beta`` the slope (per stimulus
    unit); ``beta > 0`` keeps F strictly increasing.
    """

    family: str
    alpha: float
    beta: float

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValidationError(
                f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta)):
            raise ValidationError("model parameters must be finite")
        if self.beta <= 0:
            raise ValidationError(f"beta must be > 0, got {self.beta}")


def eval_cdf(model: SensitivityModel, x):
    """Success probability F(x); accepts scalars or arrays."""
    t = model.alpha + model.beta * np.asarray(x, dtype=np.float64)
    if model.family == "probit":
        out = special.ndtr(t)
    else:
        out = special.expit(t)
    if np.ndim(x) == 0:
        return float(out)
    return out


def eval_sf(model: SensitivityModel, x):
    """Failure probability 1 - F(x), computed via the reflected link.

    Symmetric links satisfy 1 - F(x) = link(-(alpha + beta x)), which keeps
    precision where 1 - eval_cdf(x) would round to zero.
    """
    t = model.alpha + model.beta * np.asarray(x, dtype=np.float64)
    if model.family == "probit":
        out = special.ndtr(-t)
    else:
        out = special.expit(-t)
    if np.ndim(x) == 0:
        return float(out)
    return out


def quantile(model: SensitivityModel, q):
    """Stimulus level with success probability q, i.e. F^{-1}(q).

    Round-trips with :func:`eval_cdf` to floating precision.
    """
    qa = np.asarray(q, dtype=np.float64)
    if np.any(qa <= 0.0) or np.any(qa >= 1.0):
        raise ValidationError(f"quantile level must lie in (0, 1), got {q}")
    if model.family == "probit":
        z = special.ndtri(qa)
    else:
        z = special.logit(qa)
    out = (z - model.alpha) / model.beta
    if np.ndim(q) == 0:
        return float(out)
    return out


def median(model: SensitivityModel) -> float:
    """The stimulus with 50% success probability: -alpha/beta exactly."""
    return -model.alpha / model.beta


def draw_outcome(model: SensitivityModel, x: float, rng: np.random.Generator) -> int:
    """Draw one +1/-1 outcome at stimulus x, consuming exactly one uniform."""
    u = rng.random()
    return SUCCESS if u <= eval_cdf(model, x) else FAILURE


def validate_outcome(y: int) -> int:
    if y not in (SUCCESS, FAILURE):
        raise ValidationError(f"outcome must be +1 or -1, got {y!r}")
    return int(y)
