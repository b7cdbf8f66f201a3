"""Exception hierarchy shared across the toolkit."""

from __future__ import annotations


class LanglieError(Exception):
    """Base class for all toolkit errors."""


class ValidationError(LanglieError, ValueError):
    """A parameter, bracket, history, or configuration violates its contract."""


class SeparationError(LanglieError):
    """The likelihood has no finite maximizer (separated or one-sided data)."""


class NonConvergenceError(LanglieError):
    """The likelihood ascent hit the iteration limit before the gradient tolerance.

    Attributes carry diagnostics for post-mortem: the last iterate,
    gradient norm, and iteration count.
    """

    def __init__(self, message: str, *, alpha: float, beta: float,
                 gradient_norm: float, iterations: int):
        super().__init__(message)
        self.alpha = alpha
        self.beta = beta
        self.gradient_norm = gradient_norm
        self.iterations = iterations


class DegenerateSlopeError(LanglieError):
    """A median estimate was requested from a fit with zero slope."""


class CouplingViolationError(LanglieError):
    """Pathwise domination failed: the declared lower bound p was breached.

    Carries the violating prefix so the offending conditional probability
    can be diagnosed.
    """

    def __init__(self, message: str, *, step: int, uniforms, a_prefix, b_prefix):
        super().__init__(message)
        self.step = step
        self.uniforms = uniforms
        self.a_prefix = a_prefix
        self.b_prefix = b_prefix


class CheckFailure(LanglieError):
    """A verification experiment finished but one of its verdicts failed."""


class RecordFormatError(LanglieError, ValueError):
    """A session record document is malformed or fails its replay check."""


class SessionError(LanglieError):
    """Base class for live-session service errors."""


class UnknownSessionError(SessionError):
    """No session with the given id exists."""


class SessionClosedError(SessionError):
    """The session is closed and no longer accepts mutations."""


class StaleStimulusError(SessionError):
    """The client's view of the next stimulus is out of date."""


class EmptyHistoryError(SessionError):
    """The operation needs at least one recorded trial."""
