"""Unit disc D and the Cayley transform onto H."""

import cmath
import math
from typing import Union

from hyproj.core.errors import DomainError
from hyproj.core.geometry.metric import dist_h
from hyproj.core.geometry.points import (
    DiscPoint,
    HalfPlanePoint,
    HypDistance,
    PointLike,
    as_point,
)

DiscLike = Union[DiscPoint, complex, float, int]


def as_disc_point(p: DiscLike) -> DiscPoint:
    if isinstance(p, DiscPoint):
        return p
    return DiscPoint.from_complex(p)


def cayley_to_halfplane(p: DiscLike) -> HalfPlanePoint:
    """T(p) = (1 + p) / (1 - p), mapping D onto H and 1 to infinity."""
    z = as_disc_point(p).value
    return HalfPlanePoint.from_complex((1.0 + z) / (1.0 - z))


def cayley_to_disc(q: PointLike) -> DiscPoint:
    """T^{-1}(q) = (q - 1) / (q + 1)."""
    point = as_point(q)
    if point.cartesian is None:
        raise DomainError("Point too large to map back into the disc")
    w = point.cartesian
    return DiscPoint.from_complex((w - 1.0) / (w + 1.0))


def dist_d(a: DiscLike, b: DiscLike) -> HypDistance:
    """Hyperbolic distance in D as the pullback of d_H through the Cayley transform."""
    return dist_h(cayley_to_halfplane(a), cayley_to_halfplane(b))


def dist_d_direct(a: DiscLike, b: DiscLike) -> HypDistance:
    """d_D(a, b) = atanh |(a - b) / (1 - conj(a) b)|, without leaving the disc."""
    za, zb = as_disc_point(a).value, as_disc_point(b).value
    rho = abs(za - zb) / abs(1.0 - za.conjugate() * zb)
    return HypDistance(math.atanh(min(rho, 1.0 - 2.0**-53)))


def normalize_to_one(p: DiscLike, tau: complex) -> DiscPoint:
    """Rotate the disc so that the boundary point tau lands on 1."""
    tau = complex(tau)
    if not math.isclose(abs(tau), 1.0, rel_tol=0.0, abs_tol=1e-12):
        raise DomainError(f"Boundary point must have modulus 1, got {tau}")
    rotation = cmath.exp(-1j * cmath.phase(tau))
    return DiscPoint.from_complex(as_disc_point(p).value * rotation)
