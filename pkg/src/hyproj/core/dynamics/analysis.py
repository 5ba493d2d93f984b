"""Classification and limit estimates for maps and their orbits."""

import logging
import math
from enum import Enum
from typing import Iterable, NamedTuple, Optional

import numpy as np

from hyproj.core.dynamics.maps import MapSpec
from hyproj.core.dynamics.orbit import Orbit, iterate
from hyproj.core.errors import DomainError, EstimationError
from hyproj.core.geometry.metric import dist_h
from hyproj.core.geometry.points import PointLike, as_point

logger = logging.getLogger(__name__)

SAMPLE_EXPONENTS = range(10, 41)
ESTIMATE_SPREAD = 1e-6
HYPERBOLIC_MARGIN = 1e-9
ZERO_STEP_THRESHOLD = 1e-6
# Steps shrinking by more than this between the last two quartiles tend to zero.
DECAY_RATIO = 0.9
CONTRACTION_TOL = 1e-10
MIN_ORBIT_LENGTH = 20


class MapClass(str, Enum):
    HYPERBOLIC = "hyperbolic"
    PARABOLIC = "parabolic"


class StepKind(str, Enum):
    ZERO = "zero"
    POSITIVE = "positive"


class StepSlopeLimits(NamedTuple):
    d_hat: float
    phi_hat: float
    tail_spread: float


class ImMonotonicity(NamedTuple):
    b_hat: float
    first_increase: Optional[int]
    zero_step: bool


def angular_derivative_estimate(m: MapSpec) -> float:
    """Estimate the angular derivative at infinity from |m(x)/x| along the real axis.

    Samples x = 2^10 ... 2^40 and extrapolates the last two samples assuming
    an O(1/x) error.
    """
    quotients = []
    for k in SAMPLE_EXPONENTS:
        x = float(2**k)
        quotients.append(abs(m(complex(x))) / x)
    tail = quotients[-10:]
    spread = max(tail) - min(tail)
    if spread > ESTIMATE_SPREAD:
        raise EstimationError(
            f"|f(x)/x| of {m.describe()} did not settle (spread {spread:.3g})"
        )
    return 2.0 * quotients[-1] - quotients[-2]


def classify(m: MapSpec) -> MapClass:
    """Hyperbolic iff the angular derivative at infinity exceeds 1."""
    if angular_derivative_estimate(m) > 1.0 + HYPERBOLIC_MARGIN:
        return MapClass.HYPERBOLIC
    return MapClass.PARABOLIC


def _last_quartile(values: list[float]) -> np.ndarray:
    size = max(1, len(values) // 4)
    return np.asarray(values[-size:], dtype=np.float64)


def step_slope_limits(orbit: Orbit) -> StepSlopeLimits:
    """Tail averages of the step and slope sequences with their spread."""
    if len(orbit) < MIN_ORBIT_LENGTH:
        raise DomainError(f"Need an orbit of at least {MIN_ORBIT_LENGTH} points, got {len(orbit)}")
    steps = _last_quartile(orbit.steps)
    slopes = _last_quartile(orbit.slopes)
    spread = max(float(np.ptp(steps)), float(np.ptp(slopes)))
    return StepSlopeLimits(float(steps.mean()), float(slopes.mean()), spread)


def parabolic_step_kind(orbit: Orbit) -> StepKind:
    """Zero or positive hyperbolic step, read off the tail of the step sequence."""
    limits = step_slope_limits(orbit)
    if limits.d_hat < ZERO_STEP_THRESHOLD:
        return StepKind.ZERO
    quarter = max(1, len(orbit.steps) // 4)
    third = np.asarray(orbit.steps[-2 * quarter : -quarter], dtype=np.float64)
    if limits.d_hat / float(third.mean()) < DECAY_RATIO:
        return StepKind.ZERO
    return StepKind.POSITIVE


def schwarz_pick_defects(m: MapSpec, pairs: Iterable[tuple[PointLike, PointLike]]) -> list[float]:
    """d_H(z, w) - d_H(m z, m w) for each pair; non-negative for self-maps of H."""
    defects = []
    for z, w in pairs:
        pz, pw = as_point(z), as_point(w)
        defects.append(float(dist_h(pz, pw) - dist_h(m.apply(pz), m.apply(pw))))
    return defects


def schwarz_pick_check(m: MapSpec, pairs: Iterable[tuple[PointLike, PointLike]]) -> bool:
    """Whether m does not increase d_H on any of the pairs (tolerance 1e-10)."""
    return all(defect >= -CONTRACTION_TOL for defect in schwarz_pick_defects(m, pairs))


def first_strict_increase(values: list[float]) -> Optional[int]:
    """Smallest N with values[N] < values[N+1] < ...; None if the last pair does not increase."""
    if len(values) < 2 or not values[-1] > values[-2]:
        return None
    n = len(values) - 1
    while n > 0 and values[n - 1] < values[n]:
        n -= 1
    return n


def im_monotonicity_check(m: MapSpec, z: PointLike, n_max: int = 40) -> ImMonotonicity:
    """Tail estimate of (Im f^{n+1} z - Im f^n z) / Re f^n z.

    Also reports where |Im f^n z| starts increasing and whether the step tends to zero.
    """
    orbit = iterate(m, z, n_max)
    values = [p.value for p in orbit.points]
    if not all(math.isfinite(v.real) and math.isfinite(v.imag) for v in values):
        raise DomainError("Orbit too large for the imaginary-part check")
    ratios = [(values[n + 1].imag - values[n].imag) / values[n].real for n in range(n_max)]
    b_hat = float(_last_quartile(ratios).mean())
    first = first_strict_increase([abs(v.imag) for v in values])
    zero_step = parabolic_step_kind(orbit) is StepKind.ZERO
    logger.debug("Im check for %s: b_hat=%.6g, first increase %s", m.describe(), b_hat, first)
    return ImMonotonicity(b_hat, first, zero_step)


def distance_growth_check(m: MapSpec, z: PointLike, w: complex, n_max: int = 200) -> Optional[int]:
    """First N from which |f^n(z) - w| increases strictly up to n_max."""
    orbit = iterate(m, z, n_max)
    w = complex(w)
    distances = []
    for p in orbit.points:
        if p.cartesian is None:
            raise DomainError("Orbit too large for the Euclidean distance check")
        distances.append(abs(p.cartesian - w))
    return first_strict_increase(distances)
