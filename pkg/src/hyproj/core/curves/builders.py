"""Constructors for the elementary curves: rays and geodesic arcs."""

import math

from hyproj.core.curves.models import (
    ArcSegment,
    Curve,
    HorizontalRay,
    PiecewiseCurve,
    RadialRay,
    VerticalRay,
)
from hyproj.core.errors import CurveError
from hyproj.core.geometry.metric import project_to_ray
from hyproj.core.geometry.points import (
    Angle,
    AngleLike,
    HalfPlanePoint,
    PointLike,
    as_angle,
    as_point,
)


def radial_ray(theta: AngleLike, r0: float, offset: complex = 0j) -> Curve:
    """The half-line t -> offset + (r0 + t) e^{i theta}.

    With no offset the nearest point is known in closed form, and the curve
    carries it as its analytic projection.
    """
    angle = as_angle(theta)
    if not r0 > 0:
        raise CurveError(f"Radial ray needs r0 > 0, got {r0}")
    offset = complex(offset)
    ray = RadialRay(theta=angle.theta, r0=r0, offset=offset)
    if not ray.start.real > 0:
        raise CurveError("Radial ray does not start in the right half-plane")

    oracle = None
    if offset == 0:

        def oracle(z: HalfPlanePoint) -> HalfPlanePoint:
            return project_to_ray(z, angle, r0)

    name = f"radial_ray(theta={angle.theta:g}, r0={r0:g}"
    name += f", offset={offset:g})" if offset else ")"
    return Curve(
        name=name,
        path=PiecewiseCurve(((ray, False),)),
        declared_slope=angle,
        analytic_projection=oracle,
    )


def horizontal_ray(w: PointLike) -> Curve:
    """The geodesic ray t -> w + t.

    Its projection is |z - i Im w| + i Im w, clamped to the start of the ray.
    """
    start = as_point(w)
    if start.cartesian is None:
        raise CurveError("Horizontal ray start is too large")
    w0 = start.cartesian

    def oracle(z: HalfPlanePoint) -> HalfPlanePoint:
        level = w0.imag
        if z.cartesian is None:
            # |z - i Im w| agrees with |z| to double precision out here
            return HalfPlanePoint.from_polar(z.log_r, math.atan(level * math.exp(-z.log_r)))
        x = max(abs(z.cartesian - 1j * level), w0.real)
        return HalfPlanePoint.from_complex(complex(x, level))

    return Curve(
        name=f"horizontal_ray(w={w0:g})",
        path=PiecewiseCurve(((HorizontalRay(w0), False),)),
        declared_slope=Angle(0.0),
        analytic_projection=oracle,
    )


def vertical_ray(x0: float, sign: int = 1) -> Curve:
    """The tangential curve t -> x0 + sign * i t."""
    if not x0 > 0:
        raise CurveError(f"Vertical ray needs x0 > 0, got {x0}")
    ray = VerticalRay(start=complex(x0, 0.0), sign=sign)
    return Curve(
        name=f"vertical_ray(x0={x0:g}, sign={sign:+d})",
        path=PiecewiseCurve(((ray, False),)),
        declared_slope=Angle.tangential_marker(sign),
    )


def geodesic_arc(radius: float, phi_from: AngleLike, phi_to: AngleLike) -> ArcSegment:
    """Arc of |z| = radius traced from arg phi_from to arg phi_to."""
    return ArcSegment(
        radius=radius,
        phi_from=as_angle(phi_from).theta,
        phi_to=as_angle(phi_to).theta,
    )
