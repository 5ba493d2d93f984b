"""Options, tie-break policies and results of hyperbolic projections."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from hyproj.core.errors import ProjectionPolicyError
from hyproj.core.geometry.points import HalfPlanePoint


@dataclass(frozen=True)
class ProjectionOptions:
    """Sampling and refinement controls for the projection engine."""

    coarse_samples: int = 2000
    t_tol: float = 1e-10  # refinement tolerance in the curve parameter
    d_cluster: float = 1e-7  # distances this close to the minimum count as ties
    domain_margin: float = 0.05  # share of a truncated domain that must stay beyond t*
    continuum_run: int = 10  # tied consecutive samples that flag a continuum

    def __post_init__(self):
        if self.coarse_samples < 16:
            raise ValueError(f"coarse_samples must be at least 16, got {self.coarse_samples}")
        for name in ("t_tol", "d_cluster", "domain_margin"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if not self.domain_margin < 1:
            raise ValueError("domain_margin must be below 1")
        if self.continuum_run < 2:
            raise ValueError("continuum_run must be at least 2")


class PolicyKind(str, Enum):
    """How to choose among tied minimizers."""

    FIRST = "first"
    LAST = "last"
    ALL = "all"
    CONTINUITY = "continuity"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class ProjectionPolicy:
    """A tie-break rule, optionally overridden at selected orbit indices."""

    kind: PolicyKind = PolicyKind.LAST
    point: Optional[complex] = None
    overrides: dict[int, "ProjectionPolicy"] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.kind is PolicyKind.EXPLICIT and self.point is None:
            raise ProjectionPolicyError("An explicit policy needs a point")
        if self.kind is not PolicyKind.EXPLICIT and self.point is not None:
            raise ProjectionPolicyError(f"Policy {self.kind.value} does not take a point")

    @classmethod
    def first(cls) -> "ProjectionPolicy":
        return cls(PolicyKind.FIRST)

    @classmethod
    def last(cls) -> "ProjectionPolicy":
        return cls(PolicyKind.LAST)

    @classmethod
    def all(cls) -> "ProjectionPolicy":
        return cls(PolicyKind.ALL)

    @classmethod
    def continuity(cls) -> "ProjectionPolicy":
        return cls(PolicyKind.CONTINUITY)

    @classmethod
    def explicit(cls, point: complex) -> "ProjectionPolicy":
        return cls(PolicyKind.EXPLICIT, point=complex(point))

    def at(self, index: int) -> "ProjectionPolicy":
        """The policy in force at orbit index ``index``."""
        return self.overrides.get(index, self)


@dataclass(frozen=True)
class Minimizer:
    """A (local refinement of a) global minimizer t* with its point and distance."""

    t_star: float
    point: HalfPlanePoint
    distance: float


@dataclass
class ProjectionResult:
    """Global minimizers of t -> d_H(z, Gamma(t)) and the chosen projection."""

    minimizers: list[Minimizer]
    global_distance: float
    tie_count: int
    chosen: Minimizer
    continuum_flag: bool
    policy: PolicyKind
    domain_end: float
    selected: list[Minimizer] = field(default_factory=list)

    @property
    def t_star(self) -> float:
        return self.chosen.t_star

    @property
    def point(self) -> HalfPlanePoint:
        return self.chosen.point
