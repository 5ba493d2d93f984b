"""Hyperbolic geometry of the right half-plane and the unit disc."""

from hyproj.core.geometry.disc import (
    as_disc_point,
    cayley_to_disc,
    cayley_to_halfplane,
    dist_d,
    dist_d_direct,
    normalize_to_one,
)
from hyproj.core.geometry.metric import (
    RHO_SWITCH,
    cosh_dist,
    dist_angles,
    dist_h,
    dist_h_logpolar,
    distance_profile,
    hyperbolic_circle_euclid,
    in_pseudo_disc,
    in_pseudo_disc_quadratic,
    one_minus_rho_sq,
    project_to_ray,
    rho_h,
    sector_halfwidth,
)
from hyproj.core.geometry.points import (
    HALF_PI,
    Angle,
    AngleLike,
    DiscPoint,
    HalfPlanePoint,
    HypDistance,
    PointLike,
    as_angle,
    as_point,
)

__all__ = [
    "HALF_PI",
    "RHO_SWITCH",
    "Angle",
    "AngleLike",
    "DiscPoint",
    "HalfPlanePoint",
    "HypDistance",
    "PointLike",
    "as_angle",
    "as_disc_point",
    "as_point",
    "cayley_to_disc",
    "cayley_to_halfplane",
    "cosh_dist",
    "dist_angles",
    "dist_d",
    "dist_d_direct",
    "dist_h",
    "dist_h_logpolar",
    "distance_profile",
    "hyperbolic_circle_euclid",
    "in_pseudo_disc",
    "in_pseudo_disc_quadratic",
    "normalize_to_one",
    "one_minus_rho_sq",
    "project_to_ray",
    "rho_h",
    "sector_halfwidth",
]
