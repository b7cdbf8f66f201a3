"""Reflected random walks, coupled path pairs, and stochastic-order checks.

The comparison object for the Langlie cumsum magnitude |S_n| is the
non-negative walk B_1 = 1, B_{n+1} = |B_n + Z_{n+1}| with independent
steps, P(Z = +1) = p < 1/2, and strong reflection at the origin.  When p
lower-bounds every conditional success probability f and its complement
1 - f along the outcome process, a shared-uniform coupling makes
B_n <= |S_n| hold on every path, which transfers to the running maxima
and yields the usual stochastic order Q_n <= P_n.

The coupling orients each outcome indicator away from the origin (see
``langlie._pure.coupled_langlie_pair``): the conditional law of every
outcome is untouched, but a walk up-move (u <= p) then always forces an
outward move of |S|, closing the induction that keeps the walk below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import kernels
from .errors import CouplingViolationError, ValidationError
from .models import SensitivityModel, eval_cdf, eval_sf
from .design import TrialHistory, langlie_next


@dataclass(frozen=True)
class ReflectedWalkParams:
    """Up-step probability of the reflected comparison walk; 0 < p < 1/2."""

    p: float

    def __post_init__(self):
        if not (np.isfinite(self.p) and 0.0 < self.p < 0.5):
            raise ValidationError(
                f"up-step probability must lie in (0, 1/2), got {self.p}")


@dataclass(frozen=True)
class CoupledPathPair:
    """Jointly built |cumsum| and reflected-walk paths sharing uniforms."""

    uniforms: np.ndarray
    a_path: np.ndarray
    b_path: np.ndarray


def reflected_walk_step(b: int, z: int) -> int:
    """One step of the reflected walk: |b + z|."""
    if b < 0:
        raise ValidationError(f"walk state must be non-negative, got {b}")
    if z not in (-1, 1):
        raise ValidationError(f"step must be +1 or -1, got {z}")
    return abs(b + z)


def run_reflected_walk(params: ReflectedWalkParams, n: int,
                       rng: np.random.Generator) -> np.ndarray:
    """Simulate B_1..B_n; B_1 = 1 and step n+1 uses the n+1st uniform."""
    if n < 1:
        raise ValidationError(f"need n >= 1, got {n}")
    return kernels.reflected_walk_path(params.p, rng.random(n))


def _check_domination(u: np.ndarray, a_path: np.ndarray,
                      b_path: np.ndarray) -> None:
    bad = np.nonzero(b_path > a_path)[0]
    if bad.size:
        k = int(bad[0])
        raise CouplingViolationError(
            f"domination violated at step {k + 1}: walk={int(b_path[k])} > "
            f"|cumsum|={int(a_path[k])}; the declared lower bound p does not "
            "hold along this prefix",
            step=k + 1,
            uniforms=u[: k + 1].copy(),
            a_prefix=a_path[: k + 1].copy(),
            b_prefix=b_path[: k + 1].copy(),
        )


def coupled_paths(conditional_prob: Callable[[tuple[int, ...]], float],
                  p: float, n: int, rng: np.random.Generator) -> CoupledPathPair:
    """Build the coupled (|cumsum|, reflected walk) pair from one uniform draw.

    ``conditional_prob`` maps an outcome prefix (y_1..y_k) to the success
    probability of trial k+1; the caller guarantees that both it and its
    complement stay >= p.  A breach of that guarantee surfaces as
    CouplingViolationError with the violating prefix attached.
    """
    params = ReflectedWalkParams(p)
    if n < 1:
        raise ValidationError(f"need n >= 1, got {n}")
    u = rng.random(n)
    a_path = np.empty(n, dtype=np.int64)
    b_path = np.empty(n, dtype=np.int64)
    y: list[int] = []
    run = 0
    bw = 1
    for i in range(n):
        f = float(conditional_prob(tuple(y)))
        if not 0.0 < f < 1.0:
            raise ValidationError(
                f"conditional probability must lie in (0, 1), got {f}")
        if run < 0:
            yi = 1 if u[i] > 1.0 - f else -1
        else:
            yi = 1 if u[i] <= f else -1
        y.append(yi)
        run += yi
        a_path[i] = abs(run)
        if i >= 1:
            bw = abs(bw + (1 if u[i] <= params.p else -1))
        b_path[i] = bw
    _check_domination(u, a_path, b_path)
    return CoupledPathPair(uniforms=u, a_path=a_path, b_path=b_path)


def coupled_langlie_paths(model: SensitivityModel, a: float, b: float,
                          p: float, n: int,
                          rng: np.random.Generator) -> CoupledPathPair:
    """Kernel-accelerated coupled pair driven by the Langlie design.

    The conditional success probability of trial k+1 is F at the stimulus
    the design rule picks from the first k outcomes; the bracket keeps
    every stimulus inside (a, b), so F(a) and 1 - F(b) certify the lower
    bound when p < min{F(a), 1-F(a), F(b), 1-F(b)}.
    """
    ReflectedWalkParams(p)
    if n < 1:
        raise ValidationError(f"need n >= 1, got {n}")
    u = rng.random(n)
    a_path, b_path, _, _ = kernels.coupled_langlie_pair(
        kernels.family_code(model.family), model.alpha, model.beta, a, b, p, u)
    _check_domination(u, a_path, b_path)
    return CoupledPathPair(uniforms=u, a_path=a_path, b_path=b_path)


def langlie_conditional(model: SensitivityModel, a: float,
                        b: float) -> Callable[[tuple[int, ...]], float]:
    """Conditional success probability of the Langlie design, as a callback.

    Caches the incrementally grown history, so repeated calls with
    extending prefixes (the pattern ``coupled_paths`` produces) cost O(n)
    per step; an unrelated prefix triggers a replay from scratch.
    """
    state = {"h": TrialHistory(a, b), "y": ()}

    def conditional(y_prefix: tuple[int, ...]) -> float:
        y_prefix = tuple(y_prefix)
        if y_prefix[: len(state["y"])] != state["y"]:
            state["h"] = TrialHistory(a, b)
            state["y"] = ()
        h = state["h"]
        for yi in y_prefix[len(state["y"]):]:
            h = h.with_trial(langlie_next(h), yi)
        state["h"] = h
        state["y"] = y_prefix
        return eval_cdf(model, langlie_next(h))

    return conditional


def endpoint_p_bound(model: SensitivityModel, a: float, b: float,
                    safety: float = 0.99) -> float:
    """Certified lower bound p = safety * min{F(a), 1-F(a), F(b), 1-F(b)}.

    Valid for the Langlie design on (a, b) because all stimuli stay
    strictly inside the bracket and F is increasing.
    """
    if not a < b:
        raise ValidationError(f"need a < b, got a={a}, b={b}")
    if not 0.0 < safety < 1.0:
        raise ValidationError(f"safety factor must lie in (0, 1), got {safety}")
    bound = safety * min(eval_cdf(model, a), eval_sf(model, a),
                         eval_cdf(model, b), eval_sf(model, b))
    if not bound > 0.0:
        raise ValidationError(
            "the bracket is so wide that F underflows at an endpoint; "
            "no positive lower bound exists at double precision")
    return float(bound)


def running_max(path: Sequence[int] | np.ndarray) -> np.ndarray:
    """Prefix maxima of a path; non-decreasing, idempotent."""
    arr = np.asarray(path)
    if arr.size == 0:
        raise ValidationError("running_max needs a nonempty path")
    return np.maximum.accumulate(arr)


def visit_count(path: Sequence[int] | np.ndarray, m: int) -> int:
    """Number of indices at which the path sits at level m."""
    if m < 0:
        raise ValidationError(f"level must be non-negative, got {m}")
    return int(np.count_nonzero(np.asarray(path) == m))


@dataclass(frozen=True)
class DominanceVerdict:
    """Outcome of an empirical stochastic-order check (falsification style)."""

    consistent: bool
    max_gap: float
    at_x: float
    threshold: float

    def __bool__(self) -> bool:
        return self.consistent


def check_stochastic_dominance(samples_p, samples_q,
                               confidence: float = 0.99) -> DominanceVerdict:
    """Check the empirical CDFs for consistency with Q <= P in the usual order.

    Q <= P requires ECDF_Q(x) >= ECDF_P(x) everywhere; "violated" is
    reported only where ECDF_P - ECDF_Q exceeds the sum of the two
    one-sided DKW bands at the given confidence.  Consistency is not a
    proof, just a failed falsification.
    """
    sp = np.sort(np.asarray(samples_p, dtype=np.float64))
    sq = np.sort(np.asarray(samples_q, dtype=np.float64))
    if sp.size == 0 or sq.size == 0:
        raise ValidationError("both sample sets must be nonempty")
    if not 0.0 < confidence < 1.0:
        raise ValidationError(f"confidence must lie in (0, 1), got {confidence}")
    eps = math.log(1.0 / (1.0 - confidence)) / 2.0
    band = math.sqrt(eps / sp.size) + math.sqrt(eps / sq.size)
    grid = np.union1d(sp, sq)
    ecdf_p = np.searchsorted(sp, grid, side="right") / sp.size
    ecdf_q = np.searchsorted(sq, grid, side="right") / sq.size
    diff = ecdf_p - ecdf_q
    k = int(np.argmax(diff))
    gap = float(diff[k])
    return DominanceVerdict(
        consistent=gap <= band,
        max_gap=gap,
        at_x=float(grid[k]),
        threshold=band,
    )


def stationary_distribution(p: float, m_max: int) -> np.ndarray:
    """Stationary law of the reflected walk on {0..m_max}, plus tail mass.

    The walk is a birth-death chain: from 0 it moves to 1 surely; from
    k >= 1 up with probability p, down with 1 - p.  Balance gives
    pi_0 = (1-2p)/(2-2p), pi_1 = pi_0/(1-p), and a geometric tail with
    ratio p/(1-p).  Returns [pi_0..pi_{m_max}] (not renormalized; the
    remainder is the mass above m_max).
    """
    ReflectedWalkParams(p)
    if m_max < 1:
        raise ValidationError(f"need m_max >= 1, got {m_max}")
    rho = p / (1.0 - p)
    pi = np.empty(m_max + 1, dtype=np.float64)
    pi[0] = (1.0 - 2.0 * p) / (2.0 - 2.0 * p)
    pi[1] = pi[0] / (1.0 - p)
    for k in range(1, m_max):
        pi[k + 1] = pi[k] * rho
    return pi
