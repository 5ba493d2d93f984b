"""Nearest-point projection onto curves in the hyperbolic metric."""

from hyproj.core.projection.engine import project, project_orbit, verify_escape
from hyproj.core.projection.models import (
    Minimizer,
    PolicyKind,
    ProjectionOptions,
    ProjectionPolicy,
    ProjectionResult,
)
from hyproj.core.projection.search import SearchResult, golden_section, sign_change_bisection

__all__ = [
    "Minimizer",
    "PolicyKind",
    "ProjectionOptions",
    "ProjectionPolicy",
    "ProjectionResult",
    "SearchResult",
    "golden_section",
    "project",
    "project_orbit",
    "sign_change_bisection",
    "verify_escape",
]
