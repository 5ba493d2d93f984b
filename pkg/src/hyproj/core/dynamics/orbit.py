"""Orbits z, f(z), f^2(z), ... with their hyperbolic steps and arguments."""

import logging
from dataclasses import dataclass, field

from hyproj.core.dynamics.maps import MapSpec
from hyproj.core.errors import DomainError, InvalidPointError, OrbitTruncatedError
from hyproj.core.geometry.metric import dist_h
from hyproj.core.geometry.points import HalfPlanePoint, PointLike, as_point

logger = logging.getLogger(__name__)


@dataclass
class Orbit:
    """Iterates of a map from a base point.

    ``steps[n]`` is d_H(f^n z, f^{n+1} z) and ``slopes[n]`` is arg f^n z.
    """

    base: HalfPlanePoint
    points: list[HalfPlanePoint] = field(default_factory=list)
    steps: list[float] = field(default_factory=list)
    slopes: list[float] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, n: int) -> HalfPlanePoint:
        return self.points[n]


def iterate(m: MapSpec, z: PointLike, n_max: int) -> Orbit:
    """Compute z, m(z), ..., m^{n_max}(z) in log-polar form."""
    if n_max < 1:
        raise DomainError(f"n_max must be at least 1, got {n_max}")
    base = as_point(z)
    orbit = Orbit(base=base, points=[base], slopes=[base.theta])
    current = base
    for n in range(n_max):
        try:
            nxt = m.apply(current)
        except (InvalidPointError, DomainError, OverflowError) as exc:
            raise OrbitTruncatedError(
                f"Orbit of {m.describe()} left H after index {n}: {exc}", last_index=n
            ) from exc
        orbit.steps.append(float(dist_h(current, nxt)))
        orbit.points.append(nxt)
        orbit.slopes.append(nxt.theta)
        current = nxt
    logger.debug("Iterated %s %d times from %s", m.describe(), n_max, base)
    return orbit
