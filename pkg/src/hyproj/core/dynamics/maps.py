"""Holomorphic self-maps of H with Denjoy-Wolff point at infinity."""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Sequence

from hyproj.core.errors import InvalidMapError
from hyproj.core.geometry.points import HalfPlanePoint

# Above this modulus affine maps are applied in log-polar form.
AFFINE_GUARD = 1e280


class MapSpec(ABC):
    """A self-map of H given by a formula."""

    @abstractmethod
    def __call__(self, z: complex) -> complex:
        """Evaluate on a Cartesian value."""

    @abstractmethod
    def apply(self, point: HalfPlanePoint) -> HalfPlanePoint:
        """Evaluate on a point without overflowing for huge moduli."""

    @abstractmethod
    def describe(self) -> str:
        """Short human-readable formula."""


@dataclass(frozen=True)
class Affine(MapSpec):
    """z -> a z + b with a >= 1 and Re b >= 0, excluding the identity."""

    a: float
    b: complex = 0j

    def __post_init__(self):
        b = complex(self.b)
        object.__setattr__(self, "b", b)
        if not (math.isfinite(self.a) and math.isfinite(b.real) and math.isfinite(b.imag)):
            raise InvalidMapError(f"Affine coefficients must be finite: a={self.a}, b={b}")
        if self.a < 1.0:
            raise InvalidMapError(f"Affine map needs a >= 1, got a={self.a}")
        if b.real < 0.0:
            raise InvalidMapError(f"Affine map needs Re b >= 0, got b={b}")
        if self.a == 1.0 and b == 0:
            raise InvalidMapError("The identity has no Denjoy-Wolff point")

    @property
    def is_automorphism(self) -> bool:
        return self.b.real == 0.0

    def __call__(self, z: complex) -> complex:
        return self.a * z + self.b

    def apply(self, point: HalfPlanePoint) -> HalfPlanePoint:
        if point.cartesian is not None and self.a * point.modulus <= AFFINE_GUARD:
            return HalfPlanePoint.from_complex(self(point.cartesian))
        # a r e^{i theta} + b = e^L (e^{i theta} + b e^{-L}) with L = log(a r)
        big = point.log_r + math.log(self.a)
        u = complex(math.cos(point.theta), math.sin(point.theta)) + self.b * math.exp(-big)
        return HalfPlanePoint.from_polar(big + math.log(abs(u)), math.atan2(u.imag, u.real))

    def describe(self) -> str:
        return f"{self.a:g}z + ({self.b.real:g}{self.b.imag:+g}i)"


@dataclass(frozen=True)
class Composition(MapSpec):
    """Maps applied left to right: Composition((f, g))(z) = g(f(z))."""

    maps: tuple[MapSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "maps", tuple(self.maps))
        if not self.maps:
            raise InvalidMapError("A composition needs at least one map")

    def __call__(self, z: complex) -> complex:
        for m in self.maps:
            z = m(z)
        return z

    def apply(self, point: HalfPlanePoint) -> HalfPlanePoint:
        for m in self.maps:
            point = m.apply(point)
        return point

    def describe(self) -> str:
        return " then ".join(m.describe() for m in self.maps)


class ScalingSemigroup:
    """The continuous semigroup phi_t(z) = e^t z."""

    def at(self, t: float) -> Affine:
        """The member phi_t for t > 0."""
        if not (math.isfinite(t) and t > 0):
            raise InvalidMapError(f"Semigroup time must be positive, got {t}")
        return Affine(math.exp(t), 0j)

    def trajectory(self, z: HalfPlanePoint, ts: Sequence[float]) -> list[HalfPlanePoint]:
        """phi_t(z) for every t in ``ts`` (t >= 0), computed in log-polar form."""
        out = []
        for t in ts:
            if t < 0:
                raise InvalidMapError(f"Semigroup time must be non-negative, got {t}")
            out.append(HalfPlanePoint.from_polar(z.log_r + t, z.theta))
        return out
