"""Boundary-landing curves in H."""

from hyproj.core.curves.builders import geodesic_arc, horizontal_ray, radial_ray, vertical_ray
from hyproj.core.curves.examples import (
    EX33_RADIUS,
    ExampleCurveId,
    example_curve,
)
from hyproj.core.curves.models import (
    ArcSegment,
    CircleArc,
    Curve,
    HorizontalRay,
    LineSegment,
    PiecewiseCurve,
    RadialRay,
    VerticalRay,
)
from hyproj.core.curves.slope import continuity_defect, escapes_monotonically, slope_cluster

__all__ = [
    "EX33_RADIUS",
    "ArcSegment",
    "CircleArc",
    "Curve",
    "ExampleCurveId",
    "HorizontalRay",
    "LineSegment",
    "PiecewiseCurve",
    "RadialRay",
    "VerticalRay",
    "continuity_defect",
    "escapes_monotonically",
    "example_curve",
    "geodesic_arc",
    "horizontal_ray",
    "radial_ray",
    "slope_cluster",
    "vertical_ray",
]
