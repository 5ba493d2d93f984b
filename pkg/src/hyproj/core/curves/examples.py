"""The explicit counterexample traces.

Each trace is a union of a spine landing at infinity and hanging pieces.
The walk follows the spine and visits every hanging arc out-and-back, so the
parametrization is continuous and covers the whole trace.
"""

import logging
import math
from enum import Enum

from hyproj.core.curves.builders import vertical_ray
from hyproj.core.curves.models import (
    ArcSegment,
    CircleArc,
    Curve,
    HorizontalRay,
    LineSegment,
    Piece,
    PiecewiseCurve,
)
from hyproj.core.errors import CurveError
from hyproj.core.geometry.metric import hyperbolic_circle_euclid
from hyproj.core.geometry.points import Angle

logger = logging.getLogger(__name__)

# Hyperbolic radius of the two circles of the "eventually" example.
EX33_RADIUS = 0.25 * math.log(2.0)


class ExampleCurveId(str, Enum):
    """Identifiers of the built-in example traces."""

    EX31 = "ex31"
    EX32_ZERO = "ex32_zero"
    EX32_POS = "ex32_pos"
    EX33 = "ex33"
    EX34 = "ex34"
    EX34_LOWER = "ex34_lower"


def _spine_with_arcs(name: str, spine_start: complex, radii: list[float]) -> Curve:
    """Horizontal spine at Im = Im(spine_start) with geodesic arcs |z| = R hanging to the axis."""
    level = spine_start.imag
    pieces: list[Piece] = []
    position = spine_start
    for radius in radii:
        if not radius > abs(level):
            raise CurveError(f"Arc of radius {radius} does not reach the spine")
        attach = complex(math.sqrt(radius * radius - level * level), level)
        if attach.real < position.real:
            raise CurveError(f"Arc of radius {radius} attaches behind the spine start")
        if attach != position:
            pieces.append((LineSegment(position, attach), False))
        arc = ArcSegment(radius=radius, phi_from=math.asin(level / radius), phi_to=0.0)
        pieces.append((arc, False))
        pieces.append((arc, True))
        position = attach
    pieces.append((HorizontalRay(position), False))

    path = PiecewiseCurve(tuple(pieces))
    exit_parameter = path.knots[-1]
    logger.debug("Built %s with %d pieces, exit ray at t=%.6g", name, len(pieces), exit_parameter)
    return Curve(
        name=name,
        path=path,
        declared_slope=Angle(0.0),
        t_esc=exit_parameter,
        truncation=exit_parameter,
    )


def semigroup_plateau_curve(n_max: int) -> Curve:
    """Spine {t + i : t >= 1} with arcs joining e^n and sqrt(e^{2n} - 1) + i."""
    radii = [math.exp(k) for k in range(1, n_max + 1)]
    return _spine_with_arcs(ExampleCurveId.EX31.value, complex(1.0, 1.0), radii)


def parabolic_zero_step_curve(n_max: int) -> Curve:
    """Spine {t + i : t >= 1} with arcs of |z| = 3n joining 3n and sqrt(9n^2 - 1) + i."""
    radii = [3.0 * n for n in range(1, n_max + 1)]
    return _spine_with_arcs(ExampleCurveId.EX32_ZERO.value, complex(1.0, 1.0), radii)


def parabolic_positive_step_curve(n_max: int) -> Curve:
    """Spine {t - i : t >= 3} with arcs joining sqrt(1 + (2n+1)^2) and (2n+1) - i."""
    radii = [math.hypot(1.0, 2 * n + 1) for n in range(1, n_max + 1)]
    return _spine_with_arcs(ExampleCurveId.EX32_POS.value, complex(3.0, -1.0), radii)


def two_circles_curve() -> Curve:
    """Circles of hyperbolic radius log 2^{1/4} about 2 and 4, then the axis beyond 4 sqrt 2.

    The circles touch at 2 sqrt 2. The walk loops once around the first
    circle, takes the lower half of the second one, walks its upper half
    out-and-back and leaves along the axis from 4 sqrt 2.
    """
    c2, r2 = hyperbolic_circle_euclid(2.0, EX33_RADIUS)
    c4, r4 = hyperbolic_circle_euclid(4.0, EX33_RADIUS)
    first = CircleArc(center=complex(c2), radius=r2, angle_from=0.0, angle_to=2.0 * math.pi)
    lower = CircleArc(center=complex(c4), radius=r4, angle_from=math.pi, angle_to=2.0 * math.pi)
    upper = CircleArc(center=complex(c4), radius=r4, angle_from=0.0, angle_to=math.pi)
    exit_ray = HorizontalRay(complex(c4 + r4, 0.0))

    path = PiecewiseCurve(
        (
            (first, False),
            (lower, False),
            (upper, False),
            (upper, True),
            (exit_ray, False),
        )
    )
    return Curve(
        name=ExampleCurveId.EX33.value,
        path=path,
        declared_slope=Angle(0.0),
        t_esc=path.knots[-1],
    )


def example_curve(curve_id: str, n_max: int = 10) -> Curve:
    """Build a named example trace truncated after ``n_max`` hanging arcs.

    ``n_max`` is ignored by traces without an infinite family of arcs.
    """
    try:
        key = ExampleCurveId(curve_id)
    except ValueError as exc:
        raise CurveError(f"Unknown example curve: {curve_id}") from exc
    if n_max < 1:
        raise CurveError(f"n_max must be at least 1, got {n_max}")

    if key is ExampleCurveId.EX31:
        return semigroup_plateau_curve(n_max)
    if key is ExampleCurveId.EX32_ZERO:
        return parabolic_zero_step_curve(n_max)
    if key is ExampleCurveId.EX32_POS:
        return parabolic_positive_step_curve(n_max)
    if key is ExampleCurveId.EX33:
        return two_circles_curve()

    sign = 1 if key is ExampleCurveId.EX34 else -1
    curve = vertical_ray(1.0, sign)
    return Curve(
        name=key.value,
        path=curve.path,
        declared_slope=curve.declared_slope,
    )
