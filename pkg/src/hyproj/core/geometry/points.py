"""Point and angle types for the right half-plane H and the unit disc D."""

import math
from dataclasses import dataclass, field
from typing import NewType, Optional, Union

from hyproj.core.errors import DomainError, InvalidPointError

HALF_PI = 0.5 * math.pi

# Largest modulus for which a Cartesian value is kept alongside the log-polar form.
CARTESIAN_LIMIT = 1e300
_LOG_CARTESIAN_LIMIT = math.log(CARTESIAN_LIMIT)

HypDistance = NewType("HypDistance", float)


@dataclass(frozen=True)
class HalfPlanePoint:
    """A point of H = {Re z > 0}.

    The log-polar pair (log_r, theta) is canonical; the Cartesian value is kept
    whenever |z| <= 1e300 so that no precision is lost for ordinary points.
    """

    log_r: float
    theta: float
    cartesian: Optional[complex] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not (math.isfinite(self.log_r) and math.isfinite(self.theta)):
            raise InvalidPointError(f"Non-finite log-polar point: ({self.log_r}, {self.theta})")
        if not -HALF_PI < self.theta < HALF_PI:
            raise InvalidPointError(f"Argument {self.theta} is outside (-pi/2, pi/2)")
        if self.cartesian is not None and not self.cartesian.real > 0:
            raise InvalidPointError(f"Point {self.cartesian} is not in the right half-plane")

    @classmethod
    def from_complex(cls, z: Union[complex, float, int]) -> "HalfPlanePoint":
        """Build a point from its Cartesian value."""
        z = complex(z)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise InvalidPointError(f"Non-finite point: {z}")
        if not z.real > 0:
            raise InvalidPointError(f"Point {z} is not in the right half-plane")
        return cls(log_r=math.log(abs(z)), theta=math.atan2(z.imag, z.real), cartesian=z)

    @classmethod
    def from_polar(cls, log_r: float, theta: float) -> "HalfPlanePoint":
        """Build a point from log|z| and arg z; overflow-safe for any finite log_r."""
        cartesian = None
        if log_r <= _LOG_CARTESIAN_LIMIT:
            cartesian = math.exp(log_r) * complex(math.cos(theta), math.sin(theta))
            if not cartesian.real > 0:
                # cos(theta) underflowed; keep the log-polar form only
                cartesian = None
        return cls(log_r=log_r, theta=theta, cartesian=cartesian)

    @property
    def is_representable(self) -> bool:
        """Whether the Cartesian value is available."""
        return self.cartesian is not None

    @property
    def value(self) -> complex:
        """Cartesian value; components overflow to inf for huge points."""
        if self.cartesian is not None:
            return self.cartesian
        r = math.exp(self.log_r) if self.log_r <= 709.0 else math.inf
        return complex(r * math.cos(self.theta), r * math.sin(self.theta))

    @property
    def re(self) -> float:
        return self.value.real

    @property
    def im(self) -> float:
        return self.value.imag

    @property
    def modulus(self) -> float:
        if self.cartesian is not None:
            return abs(self.cartesian)
        return math.exp(self.log_r) if self.log_r <= 709.0 else math.inf


PointLike = Union[HalfPlanePoint, complex, float, int]


def as_point(p: PointLike) -> HalfPlanePoint:
    """Coerce a complex number or point to a validated HalfPlanePoint."""
    if isinstance(p, HalfPlanePoint):
        return p
    return HalfPlanePoint.from_complex(p)


@dataclass(frozen=True)
class DiscPoint:
    """A point of the open unit disc."""

    re: float
    im: float

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise InvalidPointError(f"Non-finite disc point: ({self.re}, {self.im})")
        if self.re * self.re + self.im * self.im >= 1.0:
            raise DomainError(f"Point ({self.re}, {self.im}) is not inside the unit disc")

    @classmethod
    def from_complex(cls, z: Union[complex, float, int]) -> "DiscPoint":
        z = complex(z)
        return cls(re=z.real, im=z.imag)

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)


@dataclass(frozen=True)
class Angle:
    """An angle in radians.

    Non-tangential angles lie in (-pi/2, pi/2). A tangential marker admits
    exactly +-pi/2 and exists only to describe curves landing tangentially.
    """

    theta: float
    tangential: bool = False

    def __post_init__(self):
        if not math.isfinite(self.theta):
            raise DomainError(f"Non-finite angle: {self.theta}")
        if self.tangential:
            if abs(self.theta) != HALF_PI:
                raise DomainError("A tangential marker must be exactly +pi/2 or -pi/2")
        elif not -HALF_PI < self.theta < HALF_PI:
            raise DomainError(f"Angle {self.theta} is not in (-pi/2, pi/2)")

    @classmethod
    def tangential_marker(cls, sign: int) -> "Angle":
        """The marker for a curve landing with slope sign*pi/2."""
        return cls(theta=math.copysign(HALF_PI, sign), tangential=True)

    def __float__(self) -> float:
        return self.theta


AngleLike = Union[Angle, float, int]


def as_angle(a: AngleLike) -> Angle:
    """Coerce a float to a non-tangential Angle."""
    if isinstance(a, Angle):
        return a
    return Angle(theta=float(a))
