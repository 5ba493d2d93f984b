"""Self-maps of H, their orbits and limit estimates."""

from hyproj.core.dynamics.analysis import (
    ImMonotonicity,
    MapClass,
    StepKind,
    StepSlopeLimits,
    angular_derivative_estimate,
    classify,
    distance_growth_check,
    first_strict_increase,
    im_monotonicity_check,
    parabolic_step_kind,
    schwarz_pick_check,
    schwarz_pick_defects,
    step_slope_limits,
)
from hyproj.core.dynamics.maps import AFFINE_GUARD, Affine, Composition, MapSpec, ScalingSemigroup
from hyproj.core.dynamics.orbit import Orbit, iterate

__all__ = [
    "AFFINE_GUARD",
    "Affine",
    "Composition",
    "ImMonotonicity",
    "MapClass",
    "MapSpec",
    "Orbit",
    "ScalingSemigroup",
    "StepKind",
    "StepSlopeLimits",
    "angular_derivative_estimate",
    "classify",
    "distance_growth_check",
    "first_strict_increase",
    "im_monotonicity_check",
    "iterate",
    "parabolic_step_kind",
    "schwarz_pick_check",
    "schwarz_pick_defects",
    "step_slope_limits",
]
