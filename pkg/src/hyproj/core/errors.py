"""Exception hierarchy.

Every error is a ``ValueError`` so callers that only care about "bad input"
can keep catching that.
"""

from typing import Any, Optional


class HyprojError(ValueError):
    """Base class for all hyproj errors."""


class InvalidPointError(HyprojError):
    """A point is non-finite or outside its domain (Re z <= 0, |z| >= 1)."""


class DomainError(HyprojError):
    """An argument lies outside the domain an operation is defined on."""


class TangentialCurveError(HyprojError):
    """A slope-dependent operation received a tangential (or slope-less) curve."""


class CurveError(HyprojError):
    """A curve is malformed."""


class CurveEvaluationError(HyprojError):
    """A well-formed curve evaluated to a non-finite point or never escaped."""


class InconclusiveProjectionError(HyprojError):
    """The projection engine could not certify its answer on the truncated domain."""


class ProjectionPolicyError(HyprojError):
    """A tie-break policy could not be applied (e.g. explicit point is not a minimizer)."""


class InvalidMapError(HyprojError):
    """A map specification does not define a self-map of H with Denjoy-Wolff point at infinity."""


class OrbitTruncatedError(HyprojError):
    """An orbit left H numerically."""

    def __init__(self, message: str, last_index: int):
        super().__init__(message)
        self.last_index = last_index


class EstimationError(HyprojError):
    """A limit estimate did not settle."""


class ScenarioConfigError(HyprojError):
    """A scenario configuration is inconsistent or refers to unknown objects."""


class CounterexampleNotReproducedError(HyprojError):
    """A counterexample scenario failed one of its sub-checks."""

    def __init__(self, message: str, report: Optional[Any] = None):
        super().__init__(message)
        self.report = report
