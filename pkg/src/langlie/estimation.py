"""Maximum-likelihood estimation of the sensitivity model.

With outcomes y in {-1, +1} and z = (1+y)/2 in {0, 1}, the Bernoulli
log-likelihood is

    l(alpha, beta) = sum_i  z_i log F(x_i) + (1 - z_i) log(1 - F(x_i)).

Both supported links are symmetric (F(-t) = 1 - F(t)), so each term is
log F(y_i * t_i) with t_i = alpha + beta * x_i, which is what the stable
implementations below evaluate.  The log-likelihood is concave in
(alpha, beta) for probit and logistic, so a damped Newton ascent with a
gradient-step fallback finds the maximizer whenever one exists; data
that is completely or quasi-completely separated (all successes on one
side of all failures) has none and is rejected up front.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from .design import TrialHistory
from .errors import (
    DegenerateSlopeError,
    NonConvergenceError,
    SeparationError,
    ValidationError,
)

GRADIENT_TOLERANCE = 1e-8
MAX_ITERATIONS = 200

_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)


@dataclass(frozen=True)
class FitResult:
    alpha_hat: float
    beta_hat: float
    family: str
    converged: bool
    iterations: int
    final_gradient_norm: float
    xi50_hat: float
    log_likelihood: float


def _as_arrays(h: TrialHistory) -> tuple[np.ndarray, np.ndarray]:
    if len(h) == 0:
        raise ValidationError("history is empty")
    return np.asarray(h.x, dtype=np.float64), np.asarray(h.y, dtype=np.float64)


def _log_cdf(family: str, t: np.ndarray) -> np.ndarray:
    if family == "probit":
        return special.log_ndtr(t)
    return -np.logaddexp(0.0, -t)


def _loglik(x: np.ndarray, y: np.ndarray, alpha: float, beta: float,
            family: str) -> float:
    t = alpha + beta * x
    return float(np.sum(_log_cdf(family, y * t)))


def _grad_hess(x: np.ndarray, y: np.ndarray, alpha: float, beta: float,
               family: str) -> tuple[np.ndarray, np.ndarray]:
    """Analytic gradient and Hessian of the log-likelihood at (alpha, beta)."""
    t = alpha + beta * x
    u = y * t
    if family == "probit":
        # inverse Mills ratio lam(u) = phi(u)/Phi(u), computed in log space
        log_pdf = -0.5 * u * u - _LOG_SQRT_2PI
        lam = np.exp(log_pdf - special.log_ndtr(u))
        dldt = y * lam
        curv = lam * (u + lam)  # -d^2/dt^2, nonnegative
    else:
        dldt = y * special.expit(-u)
        curv = special.expit(u) * special.expit(-u)
    g = np.array([np.sum(dldt), np.sum(dldt * x)])
    h11 = np.sum(curv)
    h12 = np.sum(curv * x)
    h22 = np.sum(curv * x * x)
    hess = -np.array([[h11, h12], [h12, h22]])
    return g, hess


def log_likelihood(alpha: float, beta: float, h: TrialHistory,
                   family: str = "probit") -> float:
    """Bernoulli log-likelihood of (alpha, beta) given the trial history."""
    x, y = _as_arrays(h)
    return _loglik(x, y, alpha, beta, family)


def score(alpha: float, beta: float, h: TrialHistory,
          family: str = "probit") -> np.ndarray:
    """Analytic gradient of the log-likelihood in (alpha, beta)."""
    x, y = _as_arrays(h)
    g, _ = _grad_hess(x, y, alpha, beta, family)
    return g


def check_separation(x: np.ndarray, y: np.ndarray) -> None:
    """Reject data whose likelihood has no finite maximizer.

    One-sided data (all successes or all failures) is degenerate; so is
    any threshold split where every failure sits at or below every
    success (or the reverse), which sends the slope to +/- infinity.
    """
    succ = x[y > 0]
    fail = x[y < 0]
    if succ.size == 0 or fail.size == 0:
        raise SeparationError(
            "all outcomes are identical; the likelihood increases without bound")
    if fail.max() <= succ.min():
        raise SeparationError(
            f"complete or quasi-complete separation: every failure (max x "
            f"{fail.max()}) lies at or below every success (min x {succ.min()})")
    if succ.max() <= fail.min():
        raise SeparationError(
            f"complete or quasi-complete separation: every success (max x "
            f"{succ.max()}) lies at or below every failure (min x {fail.min()})")


def fit_mle(h: TrialHistory, family: str = "probit") -> FitResult:
    """Maximize the log-likelihood over (alpha, beta).

    Damped Newton ascent with step halving; falls back to a normalized
    gradient step when the Hessian solve fails.  Raises SeparationError
    when no maximizer exists and NonConvergenceError (with diagnostics)
    after MAX_ITERATIONS.
    """
    x, y = _as_arrays(h)
    return fit_mle_xy(x, y, family, bracket=(h.a, h.b) if h.bracketed else None)


def fit_mle_xy(x: np.ndarray, y: np.ndarray, family: str = "probit",
               bracket: tuple[float, float] | None = None) -> FitResult:
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    check_separation(x, y)

    # Center the stimuli: Langlie data concentrates tightly, leaving
    # (1, x) nearly collinear; the centered Hessian is far better
    # conditioned.  Parameters map back via alpha = alpha_c - beta*xm.
    xm = float(np.mean(x))
    xc = x - xm

    beta0 = 2.0 / (bracket[1] - bracket[0]) if bracket else 1.0
    theta = np.array([beta0 * xm, beta0])  # centered image of (0, beta0)
    ll = _loglik(xc, y, theta[0], theta[1], family)

    def grad_norm_original(g: np.ndarray) -> float:
        # d/dbeta at fixed alpha picks up xm * d/dalpha under centering
        return float(np.hypot(g[0], g[1] + xm * g[0]))

    iterations = 0
    for iterations in range(1, MAX_ITERATIONS + 1):
        g, hess = _grad_hess(xc, y, theta[0], theta[1], family)
        gnorm = grad_norm_original(g)
        if gnorm <= GRADIENT_TOLERANCE * max(1.0, abs(ll)):
            alpha_hat = float(theta[0] - theta[1] * xm)
            beta_hat = float(theta[1])
            return FitResult(
                alpha_hat=alpha_hat,
                beta_hat=beta_hat,
                family=family,
                converged=True,
                iterations=iterations - 1,
                final_gradient_norm=gnorm,
                xi50_hat=-alpha_hat / beta_hat if beta_hat != 0.0 else math.nan,
                log_likelihood=ll,
            )
        try:
            direction = np.linalg.solve(-hess, g)
            if not np.all(np.isfinite(direction)) or float(g @ direction) <= 0.0:
                raise np.linalg.LinAlgError
        except np.linalg.LinAlgError:
            direction = g / max(1.0, float(np.hypot(*g)))
        step = 1.0
        while step > 1e-14:
            cand = theta + step * direction
            ll_cand = _loglik(xc, y, cand[0], cand[1], family)
            if np.isfinite(ll_cand) and ll_cand >= ll:
                theta = cand
                ll = ll_cand
                break
            step /= 2.0

    g, _ = _grad_hess(xc, y, theta[0], theta[1], family)
    raise NonConvergenceError(
        f"no convergence after {MAX_ITERATIONS} iterations "
        f"(gradient norm {grad_norm_original(g):.3e})",
        alpha=float(theta[0] - theta[1] * xm),
        beta=float(theta[1]),
        gradient_norm=grad_norm_original(g),
        iterations=iterations,
    )


def estimate_median(fit: FitResult) -> float:
    """Median estimate -alpha_hat/beta_hat from a converged fit."""
    if not fit.converged:
        raise ValidationError("fit did not converge")
    if fit.beta_hat == 0.0:
        raise DegenerateSlopeError("beta_hat is zero; the median is undefined")
    return -fit.alpha_hat / fit.beta_hat
