"""Adaptive experimental designs: the Langlie rule and Robbins-Monro.

The Langlie design starts at the bracket midpoint (a+b)/2 and after n
trials picks the next stimulus by the balance rule: there is *balance at
index i* when the outcomes after trial i contain equally many successes
and failures; with cumulative sums S_n = y_1 + ... + y_n this reads
S_i = S_n.  Let tau_n be the largest balanced index (0 if none).  Then

    X_{n+1} = (X_{tau_n} + X_n) / 2          if tau_n > 0
            = (a + X_n) / 2                  if tau_n = 0 and y_n = +1
            = (X_n + b) / 2                  if tau_n = 0 and y_n = -1

so the input averages with the most recent balance point, or with a
bracket endpoint when no balance exists.  All inputs stay strictly inside
(a, b).

The Robbins-Monro design updates X_{n+1} = X_n - a_n * y_n / 2 for a
step sequence a_n; with a_n = c/n the step conditions (summable squares,
divergent sum) hold for every c > 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import accumulate
from typing import Sequence

import numpy as np

from . import kernels
from .errors import ValidationError
from .models import SUCCESS, SensitivityModel, validate_outcome

UNBOUNDED = (float("-inf"), float("inf"))


@dataclass(frozen=True)
class TrialHistory:
    """Ordered record of (stimulus, outcome) pairs plus design bounds a < b.

    Finite brackets mark Langlie-generated histories and enforce the
    design invariants (first input at the midpoint, all inputs strictly
    inside the bracket).  Free-design data (Robbins-Monro runs, archival
    datasets from other designs) uses the (-inf, +inf) sentinel bounds,
    under which only the basic shape invariants apply.
    """

    a: float
    b: float
    x: tuple[float, ...] = ()
    y: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(float(v) for v in self.x))
        object.__setattr__(self, "y", tuple(validate_outcome(v) for v in self.y))
        if not self.a < self.b:
            raise ValidationError(f"need a < b, got a={self.a}, b={self.b}")
        if len(self.x) != len(self.y):
            raise ValidationError(
                f"x and y lengths differ: {len(self.x)} vs {len(self.y)}")
        if any(not np.isfinite(v) for v in self.x):
            raise ValidationError("stimulus values must be finite")
        if self.bracketed:
            if self.x and self.x[0] != (self.a + self.b) / 2.0:
                raise ValidationError(
                    "a bracketed history must start at the midpoint "
                    f"({(self.a + self.b) / 2.0}), got {self.x[0]}")
            for v in self.x:
                if not (self.a < v < self.b):
                    raise ValidationError(
                        f"stimulus {v} outside the open bracket ({self.a}, {self.b})")

    @property
    def bracketed(self) -> bool:
        return np.isfinite(self.a) and np.isfinite(self.b)

    def __len__(self) -> int:
        return len(self.x)

    def with_trial(self, x: float, y: int) -> "TrialHistory":
        return TrialHistory(self.a, self.b, self.x + (float(x),), self.y + (y,))

    def without_last(self) -> "TrialHistory":
        if not self.x:
            raise ValidationError("history is empty")
        return TrialHistory(self.a, self.b, self.x[:-1], self.y[:-1])


def cumulative_sums(y: Sequence[int]) -> list[int]:
    """Running sums S_1..S_n of a +1/-1 outcome sequence."""
    return list(accumulate(validate_outcome(v) for v in y))


def balance_index(y: Sequence[int]) -> int:
    """Largest index i < n with balance after i, or 0 if none.

    Balance at i means the outcomes y_{i+1}..y_n split evenly between
    successes and failures, equivalently S_i = S_n.
    """
    s = cumulative_sums(y)
    n = len(s)
    if n == 0:
        raise ValidationError("balance index needs at least one outcome")
    target = s[-1]
    for i in range(n - 1, 0, -1):  # candidate indices n-1 .. 1 (1-based)
        if s[i - 1] == target:
            return i
    return 0


def langlie_next(h: TrialHistory) -> float:
    """Next stimulus under the Langlie rule; the bracket must be finite."""
    if not h.bracketed:
        raise ValidationError("the Langlie rule needs a finite bracket")
    if not h.x:
        return (h.a + h.b) / 2.0
    tau = balance_index(h.y)
    if tau > 0:
        return (h.x[tau - 1] + h.x[-1]) / 2.0
    if h.y[-1] == SUCCESS:
        return (h.a + h.x[-1]) / 2.0
    return (h.x[-1] + h.b) / 2.0


def robbins_monro_next(x_n: float, y_n: int, step: float) -> float:
    """One Robbins-Monro update: x - step * y / 2."""
    validate_outcome(y_n)
    if step < 0:
        raise ValidationError(f"step must be >= 0, got {step}")
    return x_n - step * y_n / 2.0


@dataclass(frozen=True)
class RMSchedule:
    """Harmonic step sequence a_n = c/n.

    For every c > 0 the squares are summable while the sum diverges, the
    usual stochastic-approximation step conditions.
    """

    c: float
    form: str = "harmonic"

    def __post_init__(self):
        if self.form != "harmonic":
            raise ValidationError(f"unknown schedule form {self.form!r}")
        if not (np.isfinite(self.c) and self.c > 0):
            raise ValidationError(f"schedule scale c must be > 0, got {self.c}")

    def step(self, n: int) -> float:
        if n < 1:
            raise ValidationError("trial numbers are 1-based")
        return self.c / n


@dataclass(frozen=True)
class LanglieDesign:
    a: float
    b: float

    def __post_init__(self):
        if not (np.isfinite(self.a) and np.isfinite(self.b)):
            raise ValidationError("bracket endpoints must be finite")
        if not self.a < self.b:
            raise ValidationError(f"need a < b, got a={self.a}, b={self.b}")


@dataclass(frozen=True)
class RobbinsMonroDesign:
    x1: float
    schedule: RMSchedule = field(default_factory=lambda: RMSchedule(c=1.0))

    def __post_init__(self):
        if not np.isfinite(self.x1):
            raise ValidationError("start point must be finite")


def run_design(model: SensitivityModel,
               design: LanglieDesign | RobbinsMonroDesign,
               n_trials: int,
               rng: np.random.Generator) -> TrialHistory:
    """Simulate n_trials of the given design against the model.

    Consumes exactly one uniform per trial, so the result is bitwise
    reproducible from (seed, parameters) and identical to driving
    ``langlie_next`` / ``robbins_monro_next`` with ``draw_outcome`` by hand
    on the same generator.
    """
    if n_trials < 1:
        raise ValidationError(f"need n_trials >= 1, got {n_trials}")
    u = rng.random(n_trials)
    fam = kernels.family_code(model.family)
    if isinstance(design, LanglieDesign):
        x, y, _, _, _ = kernels.langlie_path(
            fam, model.alpha, model.beta, design.a, design.b, u)
        return TrialHistory(design.a, design.b, x.tolist(), y.tolist())
    if isinstance(design, RobbinsMonroDesign):
        x, y = kernels.rm_path(
            fam, model.alpha, model.beta, design.x1, design.schedule.c, u)
        return TrialHistory(*UNBOUNDED, x[:-1].tolist(), y.tolist())
    raise ValidationError(f"unknown design {design!r}")


def replay_inputs(y: Sequence[int], a: float, b: float) -> list[float]:
    """Regenerate the Langlie input sequence implied by the outcomes alone."""
    h = TrialHistory(a, b)
    out = []
    for yi in y:
        xi = langlie_next(h)
        out.append(xi)
        h = h.with_trial(xi, yi)
    return out


def verify_replay(h: TrialHistory) -> None:
    """Check that h's inputs are exactly what the Langlie rule dictates."""
    expected = replay_inputs(h.y, h.a, h.b)
    for i, (got, want) in enumerate(zip(h.x, expected)):
        if got != want:
            raise ValidationError(
                f"history is not Langlie-generated: trial {i + 1} has "
                f"x={got!r}, the design rule dictates {want!r}")
