"""Global nearest-point projection onto a curve in the hyperbolic metric.

The distance profile t -> d_H(z, Gamma(t)) is sampled on a grid that is
geometric in 1 + t and also contains every segment junction and a uniform
sub-grid of each bounded segment. Every sampled local minimum close to the
best one is refined by golden-section search and, inside smooth segments,
polished by bisection on the sign of a central-difference slope. A run of
tied samples is a continuum only when it is flat to rounding; neighbouring
minima within rounding of each other are refined as one basin.
"""

import logging
import math
from typing import Optional, Sequence, Union

import numpy as np

from hyproj.core.curves.models import Curve
from hyproj.core.dynamics.orbit import Orbit
from hyproj.core.errors import (
    CurveEvaluationError,
    DomainError,
    InconclusiveProjectionError,
    ProjectionPolicyError,
    TangentialCurveError,
)
from hyproj.core.geometry.metric import dist_h, distance_profile
from hyproj.core.geometry.points import HalfPlanePoint, PointLike, as_point
from hyproj.core.projection.models import (
    Minimizer,
    PolicyKind,
    ProjectionOptions,
    ProjectionPolicy,
    ProjectionResult,
)
from hyproj.core.projection.search import golden_section, sign_change_bisection

logger = logging.getLogger(__name__)

EPS = np.finfo(np.float64).eps

# Local minima worse than the coarse best by more than this are not refined.
REFINE_WINDOW = 1.0
# The far end of the domain must be this much farther than the minimum.
END_GAP = 2.0
SUBGRID_POINTS = 32
MAX_DOUBLINGS = 1100
MAX_EXTENSIONS = 60
# Distances within this many ulps of each other are numerically equal.
FLAT_ULPS = 64.0


class _Profile:
    """Distance from a fixed z to points of a curve, scalar and vectorised."""

    def __init__(self, curve: Curve, z: complex):
        self.curve = curve
        self.z = z

    def many(self, ts: np.ndarray) -> np.ndarray:
        return distance_profile(self.z, self.curve.eval_many(ts))

    def __call__(self, t: float) -> float:
        return float(self.many(np.array([t]))[0])

    def chordal(self, t: float) -> float:
        """|z - Gamma(t)|^2 / Re Gamma(t), increasing in the distance and better conditioned."""
        p = complex(self.curve.eval_many(np.array([t]))[0])
        return abs(self.z - p) ** 2 / p.real

    def slope(self, t: float) -> float:
        """Central-difference slope of the chordal profile; its sign is that of the distance."""
        h = 1e-5 * max(1.0, abs(t))
        lo, hi = max(t - h, 0.0), t + h
        return (self.chordal(hi) - self.chordal(lo)) / (hi - lo)


def _initial_domain_end(curve: Curve, z: complex) -> float:
    target = 16.0 * max(abs(z), 1.0)
    end = max(1.0, curve.t_esc)
    for _ in range(MAX_DOUBLINGS):
        if abs(curve.eval_complex(end)) >= target:
            return end
        end *= 2.0
    raise CurveEvaluationError(f"Curve {curve.name} does not escape past |z| = {target:g}")


def _grid(curve: Curve, end: float, samples: int) -> np.ndarray:
    parts = [np.expm1(np.linspace(0.0, math.log1p(end), samples))]
    parts.append(np.array([k for k in curve.knots if k <= end] + [0.0, end]))
    for offset, length in curve.path.finite_pieces():
        if offset < end:
            parts.append(np.linspace(offset, min(offset + length, end), SUBGRID_POINTS))
    ts = np.unique(np.concatenate(parts))
    return ts[(ts >= 0.0) & (ts <= end)]


def _runs(mask: np.ndarray) -> list[tuple[int, int]]:
    """Half-open index ranges [start, stop) of consecutive True entries."""
    padded = np.concatenate(([False], mask, [False])).astype(np.int8)
    edges = np.flatnonzero(np.diff(padded))
    return [(int(edges[k]), int(edges[k + 1])) for k in range(0, len(edges), 2)]


def _has_knot_inside(curve: Curve, a: float, b: float) -> bool:
    return any(a < knot < b for knot in curve.knots)


def _flat(d: float) -> float:
    """Rounding-level spread of distances near d."""
    return FLAT_ULPS * EPS * (1.0 + abs(d))


def _refine(
    profile: _Profile,
    ts: np.ndarray,
    ds: np.ndarray,
    i: int,
    lo: int,
    hi: int,
    opts: ProjectionOptions,
) -> tuple[float, float]:
    """Refine the sampled minimum at index i, bracketed by samples lo and hi, to (t, d)."""
    a, b = float(ts[lo]), float(ts[hi])
    t_i, d_i = float(ts[i]), float(ds[i])
    tol = max(opts.t_tol, 4.0 * EPS * abs(t_i))
    found = golden_section(profile, a, b, tol)
    t_best, d_best = found.x, found.fx

    # Start of the curve or a junction: keep the exact sample unless beaten.
    anchored = i == 0 or t_i in profile.curve.knots
    if anchored and d_best >= d_i - _flat(d_i):
        return t_i, d_i

    if not _has_knot_inside(profile.curve, a, b) and a < b:
        if profile.slope(a) < 0.0 < profile.slope(b):
            t_polished = sign_change_bisection(profile.slope, a, b)
            d_polished = profile(t_polished)
            if d_polished <= d_best + _flat(d_best):
                t_best, d_best = t_polished, d_polished
        else:
            logger.debug("Slope polish skipped at t=%.6g: no sign change", t_best)

    if d_i < d_best - _flat(d_i):
        return t_i, d_i
    return t_best, d_best


def _same_point(p: complex, q: complex) -> bool:
    return abs(p - q) <= 1e-12 * max(1.0, abs(p))


def _basins(ds: np.ndarray, skip: np.ndarray, limit: float) -> list[tuple[int, int, int]]:
    """(best, lo, hi) sample indices of each sampled local minimum not above ``limit``.

    Neighbouring local minima joined by samples within rounding of them form
    one basin, bracketed by the samples just outside it.
    """
    last = len(ds) - 1
    groups: list[list[int]] = []
    for i in range(len(ds)):
        if skip[i] or ds[i] > limit:
            continue
        if (i > 0 and ds[i] > ds[i - 1]) or (i < last and ds[i] > ds[i + 1]):
            continue
        if groups:
            prev = groups[-1][-1]
            level = max(ds[prev], ds[i])
            if not skip[prev:i].any() and bool(np.all(ds[prev : i + 1] <= level + _flat(level))):
                groups[-1].append(i)
                continue
        groups.append([i])

    basins = []
    for group in groups:
        best = min(group, key=lambda k: (ds[k], k))
        basins.append((best, max(group[0] - 1, 0), min(group[-1] + 1, last)))
    return basins


def _is_continuum(
    profile: _Profile,
    ts: np.ndarray,
    ds: np.ndarray,
    start: int,
    stop: int,
    opts: ProjectionOptions,
) -> bool:
    """Whether a run of tied samples is flat at the refined level."""
    run = ds[start:stop]
    best = start + int(np.argmin(run))
    _, d_refined = _refine(
        profile, ts, ds, best, max(best - 1, 0), min(best + 1, len(ts) - 1), opts
    )
    return float(run.max()) - min(d_refined, float(run.min())) <= _flat(float(run.max()))


def _search(
    curve: Curve, z: complex, end: float, opts: ProjectionOptions
) -> tuple[_Profile, list[tuple[float, float]], set[float]]:
    profile = _Profile(curve, z)
    ts = _grid(curve, end, opts.coarse_samples)
    ds = profile.many(ts)
    coarse_best = float(ds.min())

    candidates: list[tuple[float, float]] = []
    plateau: set[float] = set()
    tied = ds <= coarse_best + opts.d_cluster
    in_plateau = np.zeros(len(ts), dtype=bool)
    for start, stop in _runs(tied):
        if stop - start < opts.continuum_run:
            continue
        if not _is_continuum(profile, ts, ds, start, stop, opts):
            logger.debug(
                "Tied run at t in [%.6g, %.6g] is a single minimum", ts[start], ts[stop - 1]
            )
            continue
        in_plateau[start:stop] = True
        run = [(float(ts[k]), float(ds[k])) for k in range(start, stop)]
        candidates.extend(run)
        plateau.update(t for t, _ in run)

    basins = _basins(ds, in_plateau, coarse_best + REFINE_WINDOW)
    for best, lo, hi in basins:
        candidates.append(_refine(profile, ts, ds, best, lo, hi, opts))

    logger.debug(
        "Projection of %s onto %s: %d samples, %d refinements, domain end %.6g",
        z,
        curve.name,
        len(ts),
        len(basins),
        end,
    )
    return profile, candidates, plateau


def _collect(
    curve: Curve,
    candidates: list[tuple[float, float]],
    opts: ProjectionOptions,
) -> tuple[list[Minimizer], float]:
    global_distance = min(d for _, d in candidates)
    kept = sorted((t, d) for t, d in candidates if d <= global_distance + opts.d_cluster)

    merged: list[tuple[float, float]] = []
    for t, d in kept:
        if merged and abs(t - merged[-1][0]) <= 1e-9 * max(1.0, abs(t)):
            if d < merged[-1][1]:
                merged[-1] = (t, d)
            continue
        merged.append((t, d))

    ts = np.array([t for t, _ in merged])
    points = curve.eval_many(ts)
    minimizers = [
        Minimizer(t_star=t, point=HalfPlanePoint.from_complex(complex(p)), distance=d)
        for (t, d), p in zip(merged, points)
    ]
    return minimizers, global_distance


def _count_distinct(minimizers: list[Minimizer]) -> int:
    distinct: list[complex] = []
    for m in minimizers:
        value = m.point.value
        if not any(_same_point(value, seen) for seen in distinct):
            distinct.append(value)
    return len(distinct)


def _choose(
    curve: Curve,
    z: HalfPlanePoint,
    minimizers: list[Minimizer],
    global_distance: float,
    opts: ProjectionOptions,
    policy: ProjectionPolicy,
    previous: Optional[HalfPlanePoint],
) -> tuple[Minimizer, list[Minimizer], list[Minimizer]]:
    kind = policy.kind
    if kind is PolicyKind.FIRST:
        return minimizers[0], [minimizers[0]], minimizers
    if kind is PolicyKind.ALL:
        return minimizers[-1], list(minimizers), minimizers
    if kind is PolicyKind.CONTINUITY and previous is not None:
        chosen = min(minimizers, key=lambda m: (dist_h(m.point, previous), -m.t_star))
        return chosen, [chosen], minimizers
    if kind is PolicyKind.EXPLICIT:
        chosen = _explicit_minimizer(curve, z, policy.point, global_distance, opts)
        existing = [m for m in minimizers if not _same_point(m.point.value, chosen.point.value)]
        merged = sorted(existing + [chosen], key=lambda m: m.t_star)
        return chosen, [chosen], merged
    return minimizers[-1], [minimizers[-1]], minimizers


def _explicit_minimizer(
    curve: Curve,
    z: HalfPlanePoint,
    point: complex,
    global_distance: float,
    opts: ProjectionOptions,
) -> Minimizer:
    target = as_point(point)
    on_curve = project(curve, target, opts, ProjectionPolicy.last(), guard=False)
    if on_curve.global_distance > opts.d_cluster:
        raise ProjectionPolicyError(
            f"Explicit point {point} is not on curve {curve.name} "
            f"(distance {on_curve.global_distance:.3g})"
        )
    distance = dist_h(z, on_curve.point)
    if abs(distance - global_distance) > opts.d_cluster:
        raise ProjectionPolicyError(
            f"Explicit point {point} is not a projection: distance {distance:.12g} "
            f"vs minimum {global_distance:.12g}"
        )
    return Minimizer(t_star=on_curve.t_star, point=on_curve.point, distance=distance)


def project(
    curve: Curve,
    z: PointLike,
    opts: Optional[ProjectionOptions] = None,
    policy: Optional[ProjectionPolicy] = None,
    previous: Optional[HalfPlanePoint] = None,
    guard: bool = True,
) -> ProjectionResult:
    """Project z onto ``curve``.

    Returns every global minimizer of t -> d_H(z, Gamma(t)) found, the
    minimum distance and the point chosen by ``policy`` (Last by default).
    ``previous`` feeds the Continuity policy. With ``guard`` set, a minimizer
    in the last ``domain_margin`` share of a truncated trace raises
    InconclusiveProjectionError.
    """
    opts = opts or ProjectionOptions()
    policy = policy or ProjectionPolicy.last()
    point = as_point(z)
    if point.cartesian is None:
        raise DomainError("Point too large to project; rescale the orbit first")
    zc = point.cartesian

    end = _initial_domain_end(curve, zc)
    for _ in range(MAX_EXTENSIONS):
        profile, candidates, plateau = _search(curve, zc, end, opts)
        minimizers, global_distance = _collect(curve, candidates, opts)
        continuum = any(m.t_star in plateau for m in minimizers)
        if profile(end) > global_distance + END_GAP:
            break
        end *= 4.0
        logger.debug("Extending projection domain of %s to %.6g", curve.name, end)
    else:
        raise InconclusiveProjectionError(
            f"Distance to {curve.name} never exceeded the minimum by {END_GAP}"
        )

    if guard and curve.truncation is not None:
        t_max = minimizers[-1].t_star
        if t_max >= (1.0 - opts.domain_margin) * curve.truncation:
            raise InconclusiveProjectionError(
                f"Minimizer t={t_max:.6g} is within the last {opts.domain_margin:.0%} of "
                f"the truncated curve {curve.name} (ends at {curve.truncation:.6g}); "
                "increase n_max"
            )

    chosen, selected, minimizers = _choose(
        curve, point, minimizers, global_distance, opts, policy, previous
    )
    return ProjectionResult(
        minimizers=minimizers,
        global_distance=global_distance,
        tie_count=_count_distinct(minimizers),
        chosen=chosen,
        continuum_flag=continuum,
        policy=policy.kind,
        domain_end=end,
        selected=selected,
    )


def project_orbit(
    curve: Curve,
    orbit: Union[Orbit, Sequence[PointLike]],
    opts: Optional[ProjectionOptions] = None,
    policy: Optional[ProjectionPolicy] = None,
    start_index: int = 0,
) -> list[ProjectionResult]:
    """Project each orbit point in order; index-specific overrides come from ``policy``."""
    opts = opts or ProjectionOptions()
    policy = policy or ProjectionPolicy.last()
    points = orbit.points if isinstance(orbit, Orbit) else list(orbit)
    if not points:
        raise DomainError("Cannot project an empty orbit")

    results: list[ProjectionResult] = []
    previous: Optional[HalfPlanePoint] = None
    for offset, z in enumerate(points):
        index = start_index + offset
        try:
            result = project(curve, z, opts, policy.at(index), previous=previous)
        except (
            CurveEvaluationError,
            DomainError,
            InconclusiveProjectionError,
            ProjectionPolicyError,
        ) as exc:
            raise type(exc)(f"Projection failed at orbit index {index}: {exc}") from exc
        results.append(result)
        previous = result.point
    return results


def verify_escape(
    curve: Curve,
    zs: Sequence[PointLike],
    opts: Optional[ProjectionOptions] = None,
    bound: Optional[float] = None,
) -> bool:
    """Whether projections of an escaping sequence escape to infinity.

    True iff min |pi(z_n)| over the second half of the sequence exceeds
    ``bound`` (default 100 max(1, |pi(z_0)|)).
    """
    if curve.declared_slope is None or curve.declared_slope.tangential:
        raise TangentialCurveError(
            f"Curve {curve.name} has no non-tangential slope; projections need not escape"
        )
    if len(zs) < 2:
        raise DomainError("Need at least two points to judge escape")
    results = project_orbit(curve, zs, opts)
    moduli = [r.point.modulus for r in results]
    if bound is None:
        bound = 100.0 * max(1.0, moduli[0])
    tail = moduli[len(moduli) // 2 :]
    return min(tail) > bound
