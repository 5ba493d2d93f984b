"""Exact-formula hyperbolic metric of the right half-plane H.

For z, w in H:

    rho_H(z, w)   = |z - w| / |z + conj(w)|
    1 - rho_H^2   = 4 Re z Re w / |z + conj(w)|^2
    cosh d_H      = |z + conj(w)| / (2 sqrt(Re z) sqrt(Re w))
    d_H(z, w)     = atanh(rho_H(z, w))

Near the boundary (rho > RHO_SWITCH) atanh(rho) loses digits to cancellation
in 1 - rho, so d_H is assembled as log(1 + rho) - log sqrt(1 - rho^2) with
sqrt(1 - rho^2) taken from the Re·Re identity instead.
"""

import math

import numpy as np

from hyproj.core.errors import DomainError
from hyproj.core.geometry.points import (
    HALF_PI,
    Angle,
    AngleLike,
    HalfPlanePoint,
    HypDistance,
    PointLike,
    as_angle,
    as_point,
)

RHO_SWITCH = 0.99

_LOG_4 = math.log(4.0)


def _complex_pair(a: PointLike, b: PointLike) -> tuple[complex, complex]:
    pa, pb = as_point(a), as_point(b)
    if pa.cartesian is None or pb.cartesian is None:
        raise DomainError("Point too large for Cartesian formulas; use dist_h_logpolar")
    return pa.cartesian, pb.cartesian


def _assemble(rho: float, sqrt_one_minus_rho_sq: float) -> float:
    if rho <= RHO_SWITCH:
        return math.atanh(rho)
    return math.log1p(rho) - math.log(sqrt_one_minus_rho_sq)


def _dist_complex(a: complex, b: complex) -> float:
    den = abs(a + b.conjugate())
    rho = abs(a - b) / den
    if rho <= RHO_SWITCH:
        return math.atanh(rho)
    q = 2.0 * math.sqrt(a.real) * math.sqrt(b.real) / den
    return math.log1p(rho) - math.log(q)


def rho_h(a: PointLike, b: PointLike) -> float:
    """Pseudo-hyperbolic distance rho_H(a, b) in [0, 1)."""
    za, zb = _complex_pair(a, b)
    return abs(za - zb) / abs(za + zb.conjugate())


def one_minus_rho_sq(a: PointLike, b: PointLike) -> float:
    """1 - rho_H(a, b)^2 from the Re·Re identity (no cancellation)."""
    za, zb = _complex_pair(a, b)
    q = 2.0 * math.sqrt(za.real) * math.sqrt(zb.real) / abs(za + zb.conjugate())
    return q * q


def cosh_dist(a: PointLike, b: PointLike) -> float:
    """cosh d_H(a, b) = |a + conj(b)| / (2 sqrt(Re a) sqrt(Re b))."""
    za, zb = _complex_pair(a, b)
    return abs(za + zb.conjugate()) / (2.0 * math.sqrt(za.real) * math.sqrt(zb.real))


def dist_h(a: PointLike, b: PointLike) -> HypDistance:
    """Hyperbolic distance d_H(a, b).

    Falls back to the log-polar formula when either point is too large to
    carry a Cartesian value.
    """
    pa, pb = as_point(a), as_point(b)
    if pa.cartesian is None or pb.cartesian is None:
        return dist_h_logpolar(pa.log_r, pa.theta, pb.log_r, pb.theta)
    return HypDistance(_dist_complex(pa.cartesian, pb.cartesian))


def dist_h_logpolar(logr1: float, theta1: float, logr2: float, theta2: float) -> HypDistance:
    """d_H(r1 e^{i theta1}, r2 e^{i theta2}) from log-moduli.

    Only the ratio of the moduli enters, so the result stays finite for any
    finite log-moduli, far beyond the range of floating-point magnitudes.
    """
    for value in (logr1, theta1, logr2, theta2):
        if not math.isfinite(value):
            raise DomainError(f"Non-finite log-polar coordinate: {value}")
    for theta in (theta1, theta2):
        if not -HALF_PI < theta < HALF_PI:
            raise DomainError(f"Argument {theta} is outside (-pi/2, pi/2)")

    # Scale so the larger point sits on the unit circle: s e^{i alpha} vs e^{i beta}, s <= 1.
    delta = logr2 - logr1
    if delta >= 0.0:
        alpha, beta = theta1, theta2
    else:
        alpha, beta = theta2, theta1
    log_s = -abs(delta)
    s = math.exp(log_s)

    a = s * complex(math.cos(alpha), math.sin(alpha))
    b = complex(math.cos(beta), math.sin(beta))
    den = abs(a + b.conjugate())
    rho = abs(a - b) / den
    if rho <= RHO_SWITCH:
        return HypDistance(math.atanh(rho))
    log_one_minus_rho_sq = (
        _LOG_4 + log_s + math.log(math.cos(alpha)) + math.log(math.cos(beta)) - 2.0 * math.log(den)
    )
    return HypDistance(math.log1p(min(rho, 1.0)) - 0.5 * log_one_minus_rho_sq)


def distance_profile(z: complex, points: np.ndarray) -> np.ndarray:
    """Vectorised d_H(z, p) for an array of Cartesian points p."""
    points = np.asarray(points, dtype=np.complex128)
    den = np.abs(z + np.conj(points))
    rho = np.abs(z - points) / den
    q = 2.0 * np.sqrt(z.real) * np.sqrt(points.real) / den
    near = rho > RHO_SWITCH
    safe_rho = np.where(near, 0.0, rho)
    safe_q = np.where(near, q, 1.0)
    return np.where(near, np.log1p(rho) - np.log(safe_q), np.arctanh(safe_rho))


def dist_angles(theta1: AngleLike, theta2: AngleLike) -> HypDistance:
    """d_H(e^{i theta1}, e^{i theta2}) via half-angle identities.

    rho = |sin((t1 - t2)/2)| / cos((t1 + t2)/2) and
    1 - rho^2 = cos t1 cos t2 / cos^2((t1 + t2)/2).
    """
    a1, a2 = as_angle(theta1), as_angle(theta2)
    if a1.tangential or a2.tangential:
        raise DomainError("dist_angles is undefined for tangential angles")
    t1, t2 = a1.theta, a2.theta
    half_sum_cos = math.cos(0.5 * (t1 + t2))
    rho = abs(math.sin(0.5 * (t1 - t2))) / half_sum_cos
    q = math.sqrt(math.cos(t1) * math.cos(t2)) / half_sum_cos
    return HypDistance(_assemble(rho, q))


def project_to_ray(z: PointLike, theta: AngleLike, r_min: float) -> HalfPlanePoint:
    """Nearest point to z on the ray {r e^{i theta} : r >= r_min}.

    r -> d_H(z, r e^{i theta}) decreases for r < |z| and increases for r > |z|,
    so the minimizer is max(|z|, r_min) e^{i theta}.
    """
    if not r_min > 0:
        raise DomainError(f"r_min must be positive, got {r_min}")
    angle = as_angle(theta)
    p = as_point(z)
    log_r = max(p.log_r, math.log(r_min))
    return HalfPlanePoint.from_polar(log_r, angle.theta)


def _bisect_angle(theta: float, target: float, lo: float, hi: float, increasing: bool) -> float:
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        above = dist_angles(theta, mid) > target
        if above == increasing:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def sector_halfwidth(theta: AngleLike, radius: float) -> tuple[Angle, Angle]:
    """Angles phi1 < theta < phi2 with d_H(e^{i theta}, e^{i phi_j}) = radius.

    The set {z : d_H(z, ray) < radius} is a disc plus the sector phi in (phi1, phi2).
    If an edge is not attained inside (-pi/2, pi/2) in floating point, the
    corresponding tangential marker is returned instead.
    """
    if not radius > 0:
        raise DomainError(f"Sector radius must be positive, got {radius}")
    t = as_angle(theta).theta
    upper = math.nextafter(HALF_PI, 0.0)
    lower = -upper

    if dist_angles(t, upper) < radius:
        phi2 = Angle.tangential_marker(+1)
    else:
        phi2 = Angle(_bisect_angle(t, radius, t, upper, increasing=True))

    if dist_angles(t, lower) < radius:
        phi1 = Angle.tangential_marker(-1)
    else:
        phi1 = Angle(_bisect_angle(t, radius, lower, t, increasing=False))

    return phi1, phi2


def in_pseudo_disc(z: PointLike, center: PointLike, r: float) -> bool:
    """Whether z lies in the open pseudo-hyperbolic disc {w : rho_H(w, center) < r}."""
    if not 0.0 < r < 1.0:
        raise DomainError(f"Pseudo-hyperbolic radius must be in (0, 1), got {r}")
    return rho_h(z, center) < r


def in_pseudo_disc_quadratic(z: PointLike, center: PointLike, r: float) -> bool:
    """Same set written as |conj(z) + c|^2 < 4 Re c Re z / (1 - r^2)."""
    if not 0.0 < r < 1.0:
        raise DomainError(f"Pseudo-hyperbolic radius must be in (0, 1), got {r}")
    zz, c = _complex_pair(z, center)
    return abs(zz.conjugate() + c) ** 2 < 4.0 * (c.real / (1.0 - r * r)) * zz.real


def hyperbolic_circle_euclid(c: float, radius: float) -> tuple[float, float]:
    """Euclidean (center, radius) of the hyperbolic circle of radius R about c > 0.

    The real points at distance R from c are c e^{-2R} and c e^{2R}, giving
    center c cosh 2R and radius c sinh 2R.
    """
    if not c > 0:
        raise DomainError(f"Circle centre must be a positive real, got {c}")
    if not radius > 0:
        raise DomainError(f"Circle radius must be positive, got {radius}")
    return c * math.cosh(2.0 * radius), c * math.sinh(2.0 * radius)
