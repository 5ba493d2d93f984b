"""Scenario registry and runners.

Every scenario is a default JSON document plus a runner turning the
validated ScenarioConfig into a report. A user document passed with
``--config`` replaces the default top-level keys it names.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Callable, Optional

import numpy as np

from hyproj.config import get_settings
from hyproj.core.curves import Curve
from hyproj.core.dynamics import (
    Affine,
    MapClass,
    MapSpec,
    ScalingSemigroup,
    classify,
    distance_growth_check,
    im_monotonicity_check,
    iterate,
)
from hyproj.core.errors import (
    CounterexampleNotReproducedError,
    ScenarioConfigError,
    TangentialCurveError,
)
from hyproj.core.geometry import (
    HalfPlanePoint,
    as_point,
    cosh_dist,
    dist_angles,
    dist_h,
    one_minus_rho_sq,
    rho_h,
)
from hyproj.core.projection import (
    ProjectionResult,
    project,
    project_orbit,
    verify_escape,
)
from hyproj.harness.reports import (
    ClosenessReport,
    ExampleReport,
    MonotonicityReport,
    Report,
    ReportRow,
    ScalarReport,
    is_close,
    summarize_monotonicity,
)
from hyproj.harness.schemas import ScenarioConfig

logger = logging.getLogger(__name__)

LOG2 = math.log(2.0)
SQRT2 = math.sqrt(2.0)

# Agreement of a computed projection with its expected point, in d_H.
POINT_TOL = 1e-6
# Agreement of analytic and numeric projections, in d_H.
ORACLE_TOL = 1e-9
IDENTITY_TOL = 1e-12
# Orbit index by which the main theorem increments must have settled.
TAIL_GATE_N = 40

PLATEAU_ORDERS = (2, 3, 4)
PLATEAU_WIDTHS = (0.1, 0.01, 0.001)


@dataclass(frozen=True)
class Scenario:
    """A named, reproducible experiment."""

    id: str
    description: str
    runner: Callable[[ScenarioConfig], Report]
    defaults: dict[str, Any]
    counterexample: bool = False
    # The monotonicity theorem speaks about discrete orbits only.
    discrete: bool = True

    def config(self, document: Optional[dict[str, Any]] = None) -> ScenarioConfig:
        merged = dict(self.defaults)
        merged.update(document or {})
        return ScenarioConfig.model_validate(merged)


# Shared helpers


def _map(cfg: ScenarioConfig) -> MapSpec:
    if cfg.map is None:
        raise ScenarioConfigError("Scenario needs a 'map'")
    return cfg.map.build()


def _curve(cfg: ScenarioConfig, key: str = "curve") -> Curve:
    document = getattr(cfg, key)
    if document is None:
        raise ScenarioConfigError(f"Scenario needs a '{key}'")
    return document.build()


def _orbit_points(cfg: ScenarioConfig, m: MapSpec) -> list[HalfPlanePoint]:
    orbit = iterate(m, cfg.z_point(), max(cfg.n_end, 1))
    return orbit.points[cfg.n_start : cfg.n_end + 1]


def _is_tangential(curve: Curve) -> bool:
    return curve.declared_slope is None or curve.declared_slope.tangential


def _monotonicity_report(
    scenario: str,
    cfg: ScenarioConfig,
    values: list[float],
    rows: list[ReportRow],
) -> MonotonicityReport:
    tol = cfg.tolerances
    summary = summarize_monotonicity(values, cfg.n_start, tol.min_increment, tol.tail_window)
    return MonotonicityReport(
        scenario=scenario,
        n_start=cfg.n_start,
        values=values,
        first_increase_index=summary.first_increase_index,
        violations=summary.violations,
        increment_tail=summary.increment_tail,
        eventually_increasing=summary.eventually_increasing,
        eventually_nondecreasing=summary.eventually_nondecreasing,
        rows=rows,
    )


def _projection_rows(
    cfg: ScenarioConfig,
    points: list[HalfPlanePoint],
    results: list[ProjectionResult],
    values: list[float],
) -> list[ReportRow]:
    return [
        ReportRow(
            n=cfg.n_start + k,
            z=z.value,
            value=value,
            t_star=result.t_star,
            pi=result.point.value,
        )
        for k, (z, result, value) in enumerate(zip(points, results, values))
    ]


# Theorem scenarios


def run_monotonicity(cfg: ScenarioConfig, scenario: str = "monotonicity") -> MonotonicityReport:
    """d_H(w, pi(f^n z)) over the configured range.

    Pass/fail only when the map is hyperbolic and the curve non-tangential;
    otherwise the report is informational.
    """
    report, _ = _sequence_report(scenario, cfg)
    if hypotheses_hold(cfg):
        report.verdict.check(
            report.eventually_increasing,
            "not eventually strictly increasing "
            f"(last violation at n={report.first_increase_index})",
        )
    else:
        report.verdict.informational = True
        report.verdict.add_note("hypotheses of the monotonicity theorem do not hold")
    logger.info(
        "%s: N=%d, %d violations, tail increment %s",
        scenario,
        report.first_increase_index,
        len(report.violations),
        report.increment_tail,
    )
    return report


def run_main_theorem(cfg: ScenarioConfig) -> MonotonicityReport:
    report = run_monotonicity(cfg, "main_theorem")
    report.verdict.check(
        report.first_increase_index <= 3,
        f"first increase index {report.first_increase_index} > 3",
    )
    if cfg.n_end < TAIL_GATE_N:
        report.verdict.add_note(f"tail increment not judged before n = {TAIL_GATE_N}")
        return report
    report.verdict.check(
        report.increment_tail is not None and is_close(report.increment_tail, 0.5 * LOG2, 1e-6),
        f"tail increment {report.increment_tail} differs from log(2)/2",
    )
    return report


def run_orthogonal_speed(cfg: ScenarioConfig) -> MonotonicityReport:
    """Projections onto the horizontal geodesic through w, checked against the closed form."""
    report = run_monotonicity(cfg, "orthogonal_speed")
    curve = _curve(cfg)
    if curve.analytic_projection is None:
        raise ScenarioConfigError("orthogonal_speed needs a curve with a closed-form projection")
    worst = 0.0
    for row in report.rows:
        analytic = curve.analytic_projection(as_point(row.z))
        worst = max(worst, float(dist_h(analytic, as_point(row.pi))))
    report.verdict.check(worst <= ORACLE_TOL, f"closed-form projection differs by {worst:.3g}")
    return report


def run_total_speed(cfg: ScenarioConfig, scenario: str = "total_speed") -> MonotonicityReport:
    """d_H(w, f^n z) over the configured range, without any curve."""
    m = _map(cfg)
    points = _orbit_points(cfg, m)
    w = as_point(cfg.w_point())
    values = [float(dist_h(w, p)) for p in points]
    rows = [
        ReportRow(n=cfg.n_start + k, z=p.value, value=v)
        for k, (p, v) in enumerate(zip(points, values))
    ]
    report = _monotonicity_report(scenario, cfg, values, rows)
    if classify(m) is MapClass.HYPERBOLIC:
        report.verdict.check(report.eventually_increasing, "total speed not eventually increasing")
    else:
        report.verdict.informational = True
        report.verdict.add_note(
            f"parabolic map; eventually increasing: {report.eventually_increasing}"
        )
    return report


def run_total_speed_hyperbolic(cfg: ScenarioConfig) -> MonotonicityReport:
    return run_total_speed(cfg, "total_speed_hyperbolic")


def run_total_speed_parabolic_zero(cfg: ScenarioConfig) -> MonotonicityReport:
    """z + 1 from 1: increments must equal log((n+2)/(n+1)) / 2."""
    report = run_total_speed(cfg, "total_speed_parabolic_zero")
    worst = 0.0
    for n, (previous, current) in enumerate(zip(report.values, report.values[1:]), cfg.n_start):
        expected = 0.5 * math.log((n + 2) / (n + 1))
        worst = max(worst, abs((current - previous) - expected))
    report.verdict.check(worst <= IDENTITY_TOL, f"increments off by {worst:.3g}")
    return report


def run_total_speed_parabolic_positive(cfg: ScenarioConfig) -> MonotonicityReport:
    """z + i from 1: values must equal atanh(n / sqrt(n^2 + 4))."""
    report = run_total_speed(cfg, "total_speed_parabolic_positive")
    worst = 0.0
    for n, value in zip(report.ns, report.values):
        worst = max(worst, abs(value - math.atanh(n / math.sqrt(n * n + 4.0))))
    report.verdict.check(worst <= IDENTITY_TOL, f"values off by {worst:.3g}")
    increasing = all(b > a for a, b in zip(report.values, report.values[1:]))
    report.verdict.check(increasing, "values are not strictly increasing")
    return report


def _two_curve_projections(
    cfg: ScenarioConfig,
) -> tuple[Curve, Curve, list[HalfPlanePoint], list[float], list[ReportRow]]:
    m = _map(cfg)
    first, second = _curve(cfg), _curve(cfg, "curve2")
    points = _orbit_points(cfg, m)
    opts = cfg.tolerances.projection_options()
    policy = cfg.policy.build()
    r1 = project_orbit(first, points, opts, policy, start_index=cfg.n_start)
    r2 = project_orbit(second, points, opts, policy, start_index=cfg.n_start)
    gaps = [float(dist_h(a.point, b.point)) for a, b in zip(r1, r2)]
    rows = _projection_rows(cfg, points, r1, gaps)
    return first, second, points, gaps, rows


def run_closeness(
    cfg: ScenarioConfig, scenario: str = "closeness", monotone_gate: bool = True
) -> ClosenessReport:
    """Projections onto two curves of equal slope approach each other.

    With ``monotone_gate``, gaps beyond the coarse gate must also decrease.
    """
    first, second = _curve(cfg), _curve(cfg, "curve2")
    if _is_tangential(first) or _is_tangential(second):
        raise ScenarioConfigError("closeness needs two curves with non-tangential slopes")
    if abs(first.declared_slope.theta - second.declared_slope.theta) > 1e-12:
        raise ScenarioConfigError("curves have different slopes; use the slopes scenario")

    _, _, points, gaps, rows = _two_curve_projections(cfg)
    tol = cfg.tolerances
    moduli = [p.modulus for p in points]
    report = ClosenessReport(
        scenario=scenario,
        ns=[cfg.n_start + k for k in range(len(gaps))],
        gaps=gaps,
        moduli=moduli,
        target=0.0,
        tail_value=gaps[-1],
        rows=rows,
    )
    gated = [g for g, r in zip(gaps, moduli) if r >= tol.closeness_gate]
    if report.verdict.check(bool(gated), f"no |z_n| reaches {tol.closeness_gate:g}"):
        report.verdict.check(
            max(gated) < tol.closeness_tol,
            f"gap {max(gated):.3g} beyond |z_n| >= {tol.closeness_gate:g}",
        )
    coarse = [g for g, r in zip(gaps, moduli) if r >= tol.coarse_closeness_gate]
    if coarse:
        report.verdict.check(
            max(coarse) < tol.coarse_closeness_tol,
            f"gap {max(coarse):.3g} beyond |z_n| >= {tol.coarse_closeness_gate:g}",
        )
        monotone = all(b <= a for a, b in zip(coarse, coarse[1:]))
        if monotone_gate:
            report.verdict.check(monotone, "gaps are not monotone beyond the coarse gate")
        elif not monotone:
            report.verdict.add_note("gaps are not monotone beyond the coarse gate")
    logger.info("%s: tail gap %.3g", scenario, report.tail_value)
    return report


def run_closeness_ex31(cfg: ScenarioConfig) -> ClosenessReport:
    return run_closeness(cfg, "closeness_ex31", monotone_gate=False)


def run_slopes(cfg: ScenarioConfig, scenario: str = "slopes") -> ClosenessReport:
    """Projections onto curves of slopes theta1 and theta2.

    They end up d_H(e^{i theta1}, e^{i theta2}) apart.
    """
    first, second = _curve(cfg), _curve(cfg, "curve2")
    if _is_tangential(first) or _is_tangential(second):
        raise ScenarioConfigError("slopes needs two curves with non-tangential slopes")
    target = float(dist_angles(first.declared_slope, second.declared_slope))

    _, _, points, gaps, rows = _two_curve_projections(cfg)
    tol = cfg.tolerances
    moduli = [p.modulus for p in points]
    report = ClosenessReport(
        scenario=scenario,
        ns=[cfg.n_start + k for k in range(len(gaps))],
        gaps=gaps,
        moduli=moduli,
        target=target,
        tail_value=gaps[-1],
        rows=rows,
    )
    gated = [g for g, r in zip(gaps, moduli) if r >= tol.slopes_gate]
    if report.verdict.check(bool(gated), f"no |z_n| reaches {tol.slopes_gate:g}"):
        worst = max(abs(g - target) for g in gated)
        report.verdict.check(worst < tol.slopes_tol, f"gap misses {target:.8f} by {worst:.3g}")
    logger.info("%s: tail gap %.10f, target %.10f", scenario, report.tail_value, target)
    return report


def run_slopes_symmetric(cfg: ScenarioConfig) -> ClosenessReport:
    return run_slopes(cfg, "slopes_symmetric")


def run_logcos(cfg: ScenarioConfig, scenario: str = "logcos") -> ScalarReport:
    """d_H(r0 e^{i theta}, r_n e^{i theta}) - d_H(r0, r_n) tends to -log cos theta."""
    curve = _curve(cfg)
    if _is_tangential(curve):
        raise ScenarioConfigError("logcos needs a non-tangential direction")
    theta = curve.declared_slope.theta
    m = _map(cfg)
    points = _orbit_points(cfg, m)
    base = as_point(cfg.z_point())
    log_r0 = base.log_r

    values = []
    rows = []
    for k, p in enumerate(points):
        far = HalfPlanePoint.from_polar(p.log_r, theta)
        angled = dist_h(HalfPlanePoint.from_polar(log_r0, theta), far)
        radial = dist_h(
            HalfPlanePoint.from_polar(log_r0, 0.0), HalfPlanePoint.from_polar(p.log_r, 0.0)
        )
        value = float(angled - radial)
        values.append(value)
        rows.append(ReportRow(n=cfg.n_start + k, z=far.value, value=value))

    target = -math.log(math.cos(theta))
    report = ScalarReport(
        scenario=scenario,
        ns=[cfg.n_start + k for k in range(len(values))],
        values=values,
        target=target,
        tail_value=values[-1],
        label="d_H(r0 e^{i theta}, r_n e^{i theta}) - d_H(r0, r_n)",
        rows=rows,
    )
    if theta == 0.0:
        worst = max(abs(v) for v in values)
        report.verdict.check(worst <= IDENTITY_TOL, f"difference {worst:.3g} for theta = 0")
    else:
        miss = abs(values[-1] - target)
        report.verdict.check(
            miss <= cfg.tolerances.logcos_tol, f"tail misses -log cos theta by {miss:.3g}"
        )
    return report


def run_logcos_zero(cfg: ScenarioConfig) -> ScalarReport:
    return run_logcos(cfg, "logcos_zero")


# Counterexamples


def _sequence_report(
    scenario: str,
    cfg: ScenarioConfig,
) -> tuple[MonotonicityReport, list[ProjectionResult]]:
    m = _map(cfg)
    curve = _curve(cfg)
    points = _orbit_points(cfg, m)
    results = project_orbit(
        curve,
        points,
        cfg.tolerances.projection_options(),
        cfg.policy.build(),
        start_index=cfg.n_start,
    )
    w = as_point(cfg.w_point())
    values = [float(dist_h(w, r.point)) for r in results]
    rows = _projection_rows(cfg, points, results, values)
    return _monotonicity_report(scenario, cfg, values, rows), results


def _close_to(result: ProjectionResult, target: complex) -> bool:
    return float(dist_h(result.point, as_point(target))) <= POINT_TOL


def _count_non_increasing(values: list[float]) -> int:
    return sum(1 for a, b in zip(values, values[1:]) if b <= a + IDENTITY_TOL)


def _finish_example(report: ExampleReport) -> ExampleReport:
    if report.sequence is not None:
        report.eventually_nondecreasing = report.sequence.eventually_nondecreasing
    if not report.verdict.passed:
        raise CounterexampleNotReproducedError(
            f"{report.scenario} not reproduced: " + "; ".join(report.verdict.failures),
            report=report,
        )
    logger.info("%s reproduced (%d checks)", report.scenario, len(report.checks))
    return report


def run_example_ex31(cfg: ScenarioConfig) -> ExampleReport:
    """Plateau of the continuous semigroup: pi(e^t) = e^n for t near n."""
    curve = _curve(cfg)
    opts = cfg.tolerances.projection_options()
    policy = cfg.policy.build()
    base = as_point(cfg.z_point())
    w = as_point(cfg.w_point())
    semigroup = ScalingSemigroup()
    report = ExampleReport(scenario="ex31")

    trials: list[tuple[float, ProjectionResult, HalfPlanePoint]] = []
    for n in PLATEAU_ORDERS:
        target = HalfPlanePoint.from_polar(base.log_r + n, base.theta)
        working = None
        for eps in PLATEAU_WIDTHS:
            ts = [n - eps, n, n + eps]
            zs = semigroup.trajectory(base, ts)
            results = [project(curve, z, opts, policy) for z in zs]
            if all(_close_to(r, target.value) for r in results):
                working = eps
                trials.extend(zip(ts, results, zs))
                break
        report.record(
            f"plateau at n={n}",
            working is not None,
            f"largest working eps = {working}" if working else "no eps in the grid works",
        )

    trials.sort(key=lambda item: item[0])
    values = [float(dist_h(w, r.point)) for _, r, _ in trials]
    rows = [
        ReportRow(n=k, z=z.value, value=v, t_star=r.t_star, pi=r.point.value)
        for k, ((_, r, z), v) in enumerate(zip(trials, values))
    ]
    if values:
        tol = cfg.tolerances
        summary = summarize_monotonicity(values, 0, tol.min_increment, tol.tail_window)
        report.sequence = MonotonicityReport(
            scenario="ex31",
            n_start=0,
            values=values,
            first_increase_index=summary.first_increase_index,
            violations=summary.violations,
            increment_tail=summary.increment_tail,
            eventually_increasing=summary.eventually_increasing,
            eventually_nondecreasing=summary.eventually_nondecreasing,
            rows=rows,
        )
    return _finish_example(report)


def run_example_ex32_zero(cfg: ScenarioConfig) -> ExampleReport:
    """z + 1: the orbit points 3n - 1 and 3n share the projection 3n."""
    sequence, results = _sequence_report("ex32_zero", cfg)
    report = ExampleReport(scenario="ex32_zero", sequence=sequence)
    by_index = {cfg.n_start + k: r for k, r in enumerate(results)}

    for k in range(1, 6):
        pair = (3 * k - 2, 3 * k - 1)
        if not all(n in by_index for n in pair):
            raise ScenarioConfigError(f"n_range must cover indices {pair}")
        ok = all(_close_to(by_index[n], 3 * k) for n in pair)
        report.record(f"pi(f^{pair[0]}(1)) = pi(f^{pair[1]}(1)) = {3 * k}", ok)

    flat = _count_non_increasing(sequence.values)
    report.record("at least 5 non-increasing pairs", flat >= 5, f"{flat} found")
    report.record("not eventually strictly increasing", not sequence.eventually_increasing)

    spine_rho = rho_h(2.0, complex(math.sqrt(5.0), 1.0))
    foot_rho = rho_h(2.0, 3.0)
    report.record(
        "rho(2, sqrt5 + i) = 1/(sqrt5 + 2) > 1/5 = rho(2, 3)",
        abs(spine_rho - 1.0 / (math.sqrt(5.0) + 2.0)) <= IDENTITY_TOL
        and abs(foot_rho - 0.2) <= IDENTITY_TOL
        and spine_rho > foot_rho,
        f"{spine_rho:.15f} vs {foot_rho:.15f}",
    )
    return _finish_example(report)


def run_example_ex32_pos(cfg: ScenarioConfig) -> ExampleReport:
    """z + i: consecutive orbit points share a projection infinitely often.

    pi(g^{2n+1}(1)) is the arc foot sqrt(1 + (2n+1)^2), and g^{2n+2}(1) lies
    nearer the next foot sqrt(1 + (2n+3)^2), which it shares with g^{2n+3}(1).
    """
    sequence, results = _sequence_report("ex32_pos", cfg)
    report = ExampleReport(scenario="ex32_pos", sequence=sequence)
    by_index = {cfg.n_start + k: r for k, r in enumerate(results)}

    def foot(k: int) -> float:
        return math.hypot(1.0, 2 * k + 1)

    for k in range(1, 6):
        needed = (2 * k + 1, 2 * k + 2, 2 * k + 3)
        if not all(n in by_index for n in needed):
            raise ScenarioConfigError(f"n_range must cover indices {needed}")
        report.record(
            f"pi(g^{2 * k + 1}(1)) = sqrt(1 + {2 * k + 1}^2)",
            _close_to(by_index[2 * k + 1], foot(k)),
        )
        shared = _close_to(by_index[2 * k + 2], foot(k + 1)) and _close_to(
            by_index[2 * k + 3], foot(k + 1)
        )
        report.record(
            f"pi(g^{2 * k + 2}(1)) = pi(g^{2 * k + 3}(1)) = sqrt(1 + {2 * k + 3}^2)", shared
        )
    report.verdict.add_note(
        "shared projections sit at index pairs (2n+2, 2n+3), on the foot sqrt(1 + (2n+3)^2)"
    )

    flat = _count_non_increasing(sequence.values)
    report.record("at least 5 non-increasing pairs", flat >= 5, f"{flat} found")
    report.record("not eventually strictly increasing", not sequence.eventually_increasing)
    return _finish_example(report)


def run_example_ex33(cfg: ScenarioConfig) -> ExampleReport:
    """f = 2z: equal distances at n = 1, 2, then strict increase."""
    sequence, results = _sequence_report("ex33", cfg)
    report = ExampleReport(scenario="ex33", sequence=sequence)
    expected = 0.75 * LOG2
    by_index = {
        cfg.n_start + k: (r, v) for k, (r, v) in enumerate(zip(results, sequence.values))
    }
    for n in (1, 2):
        if n not in by_index:
            raise ScenarioConfigError("n_range must start at 1 or below")
        result, value = by_index[n]
        report.record(
            f"d_H(w, pi_{n}) = 3/4 log 2", is_close(value, expected, ORACLE_TOL), f"{value:.15f}"
        )
        report.record(f"pi_{n} is one of infinitely many projections", result.continuum_flag)

    late = [v for n, (_, v) in sorted(by_index.items()) if n >= 2]
    report.record(
        "strictly increasing from n = 3",
        all(b > a for a, b in zip(late, late[1:])),
    )
    report.record("eventually strictly increasing", sequence.eventually_increasing)

    circle = project(_curve(cfg), 2.0, cfg.tolerances.projection_options())
    report.record(
        "d_H(2, curve) = log 2 / 4 with a continuum of projections",
        is_close(circle.global_distance, 0.25 * LOG2, ORACLE_TOL) and circle.continuum_flag,
        f"{circle.global_distance:.15f}",
    )
    return _finish_example(report)


def _run_tangential_example(cfg: ScenarioConfig, scenario: str) -> ExampleReport:
    sequence, results = _sequence_report(scenario, cfg)
    report = ExampleReport(scenario=scenario, sequence=sequence)
    x0 = _curve(cfg).eval_complex(0.0)
    report.record("t* = 0 at every n", all(r.t_star == 0.0 for r in results))
    report.record("projection constant at the curve start", all(_close_to(r, x0) for r in results))
    flat = all(abs(v - sequence.values[0]) <= IDENTITY_TOL for v in sequence.values)
    report.record("zero increase", flat)
    try:
        verify_escape(_curve(cfg), [p.value for p in _orbit_points(cfg, _map(cfg))])
    except TangentialCurveError:
        report.record("escape check refuses the tangential curve", True)
    else:
        report.record("escape check refuses the tangential curve", False, "no error raised")
    return _finish_example(report)


def run_example_ex34(cfg: ScenarioConfig) -> ExampleReport:
    """Tangential curve 1 + it: every 2^n projects to 1."""
    return _run_tangential_example(cfg, "ex34")


def run_example_ex34_lower(cfg: ScenarioConfig) -> ExampleReport:
    """Tangential curve 1 - it."""
    return _run_tangential_example(cfg, "ex34_lower")


# Growth and engine checks


def run_distance_growth(cfg: ScenarioConfig) -> ScalarReport:
    """|f^n(z) - w| increases eventually for hyperbolic maps and random w."""
    maps = [_map(cfg), Affine(2.0, 1.0)]
    rng = np.random.default_rng(get_settings().seed)
    ws = [complex(x, y) for x, y in rng.normal(0.0, 10.0, size=(20, 2))]
    values: list[float] = []
    rows: list[ReportRow] = []
    report = ScalarReport(scenario="distance_growth", ns=[], values=values, label="first N")
    for m in maps:
        for w in ws:
            first = distance_growth_check(m, cfg.z_point(), w, cfg.n_end)
            ok = report.verdict.check(
                first is not None, f"|f^n(z) - w| not increasing for {m.describe()}, w={w}"
            )
            index = len(values)
            report.ns.append(index)
            values.append(float(first) if ok else math.nan)
            rows.append(ReportRow(n=index, z=w, value=values[-1]))
    report.rows = rows
    report.tail_value = max(v for v in values if not math.isnan(v)) if values else None
    return report


def run_im_growth(cfg: ScenarioConfig) -> ScalarReport:
    """|Im g^n(1)| for a positive-step parabolic automorphism, plus the zero-step contrast."""
    m = _map(cfg)
    check = im_monotonicity_check(m, cfg.z_point(), max(cfg.n_end, 20))
    orbit = iterate(m, cfg.z_point(), max(cfg.n_end, 20))
    values = [abs(p.im) for p in orbit.points]
    report = ScalarReport(
        scenario="im_growth",
        ns=list(range(len(values))),
        values=values,
        target=1.0,
        tail_value=check.b_hat,
        label="|Im g^n(z)|",
        rows=[
            ReportRow(n=k, z=p.value, value=v)
            for k, (p, v) in enumerate(zip(orbit.points, values))
        ],
    )
    report.verdict.check(check.b_hat == 1.0, f"b_hat = {check.b_hat!r}, expected exactly 1")
    report.verdict.check(check.first_increase == 0, f"|Im| increases from n={check.first_increase}")
    report.verdict.check(not check.zero_step, "positive-step map flagged as zero step")

    contrast = im_monotonicity_check(Affine(1.0, 1.0), cfg.z_point(), 40)
    report.verdict.check(contrast.zero_step, "z + 1 not flagged as zero step")
    report.verdict.add_note(
        f"z + 1: b_hat = {contrast.b_hat:g}, first increase {contrast.first_increase}"
    )
    return report


def _random_points(rng: np.random.Generator, count: int, lo: float, hi: float) -> list[complex]:
    moduli = 10.0 ** rng.uniform(lo, hi, size=count)
    args = rng.uniform(-1.0, 1.0, size=count) * (0.5 * math.pi * 0.9999)
    return [complex(z) for z in moduli * np.exp(1j * args)]


def run_metric_identities(cfg: ScenarioConfig) -> ScalarReport:
    """dist/rho/cosh/1-rho^2 identities and the triangle inequality on random points."""
    rng = np.random.default_rng(get_settings().seed)
    a_points = _random_points(rng, 10_000, -3.0, 6.0)
    b_points = _random_points(rng, 10_000, -3.0, 6.0)

    tanh_err = cosh_err = omr_err = 0.0
    for a, b in zip(a_points, b_points):
        d = float(dist_h(a, b))
        rho = rho_h(a, b)
        tanh_err = max(tanh_err, abs(math.tanh(d) - rho) / max(rho, 1e-300))
        cosh_err = max(cosh_err, abs(math.cosh(d) - cosh_dist(a, b)) / math.cosh(d))
        omr = one_minus_rho_sq(a, b)
        miss = abs(omr - (1.0 - rho * rho))
        omr_err = max(omr_err, miss / omr if rho <= 0.99 else miss)

    c_points = _random_points(rng, 1000, -3.0, 6.0)
    slack = math.inf
    for a, b, c in zip(a_points, b_points, c_points):
        slack = min(slack, float(dist_h(a, b) + dist_h(b, c) - dist_h(a, c)))

    values = [tanh_err, cosh_err, omr_err, -min(slack, 0.0)]
    report = ScalarReport(
        scenario="metric_identities",
        ns=list(range(len(values))),
        values=values,
        target=0.0,
        tail_value=max(values),
        label="max error",
        rows=[ReportRow(n=k, z=complex(1.0, 0.0), value=v) for k, v in enumerate(values)],
    )
    report.verdict.check(tanh_err <= IDENTITY_TOL, f"tanh(d) vs rho: {tanh_err:.3g}")
    report.verdict.check(cosh_err <= IDENTITY_TOL, f"cosh(d) vs cosh formula: {cosh_err:.3g}")
    report.verdict.check(omr_err <= IDENTITY_TOL, f"1 - rho^2 identity: {omr_err:.3g}")
    report.verdict.check(slack >= -IDENTITY_TOL, f"triangle inequality slack {slack:.3g}")
    return report


def run_projection_oracle(cfg: ScenarioConfig) -> ScalarReport:
    """Numeric vs closed-form projections on random queries, and determinism."""
    opts = cfg.tolerances.projection_options()
    curves = [_curve(cfg), _curve(cfg, "curve2")]
    rng = np.random.default_rng(get_settings().seed)
    queries = _random_points(rng, 100, 0.0, 6.0)

    values: list[float] = []
    rows: list[ReportRow] = []
    report = ScalarReport(scenario="projection_oracle", ns=[], values=values, target=0.0)
    for curve in curves:
        if curve.analytic_projection is None:
            raise ScenarioConfigError(f"{curve.name} has no closed-form projection")
        for z in queries:
            result = project(curve, z, opts)
            analytic = curve.analytic_projection(as_point(z))
            error = float(dist_h(result.point, analytic))
            values.append(error)
            index = len(rows)
            report.ns.append(index)
            rows.append(
                ReportRow(n=index, z=z, value=error, t_star=result.t_star, pi=result.point.value)
            )
        repeat = project(curve, queries[0], opts)
        first = project(curve, queries[0], opts)
        report.verdict.check(
            repeat.t_star == first.t_star and repeat.global_distance == first.global_distance,
            f"projection onto {curve.name} is not deterministic",
        )
    report.rows = rows
    report.tail_value = max(values)
    report.label = "d_H(numeric, closed form)"
    report.verdict.check(
        report.tail_value <= ORACLE_TOL, f"worst disagreement {report.tail_value:.3g}"
    )
    return report


# Registry


def _affine(a: float, b: tuple[float, float] = (0.0, 0.0)) -> dict[str, Any]:
    return {"kind": "affine", "a": a, "b": list(b)}


def _example(curve_id: str, n_max: int = 10) -> dict[str, Any]:
    return {"kind": "example", "id": curve_id, "n_max": n_max}


def _ray(
    theta: float, r0: float = 1.0, offset: tuple[float, float] = (0.0, 0.0)
) -> dict[str, Any]:
    return {"kind": "radial_ray", "theta": theta, "r0": r0, "offset": list(offset)}


_EXPLICIT_2SQRT2 = {"kind": "explicit", "point": [2.0 * SQRT2, 0.0]}

SCENARIOS: dict[str, Scenario] = {
    s.id: s
    for s in [
        Scenario(
            "main_theorem",
            "f = 2z, radial ray theta = 0: d_H(w, pi_n) eventually strictly increasing",
            run_main_theorem,
            {
                "map": _affine(2.0),
                "curve": _ray(0.0),
                "z": [1.0, 2.0],
                "w": [3.0, 1.0],
            },
        ),
        Scenario(
            "orthogonal_speed",
            "f = 2z, horizontal geodesic through w: orthogonal speed",
            run_orthogonal_speed,
            {
                "map": _affine(2.0),
                "curve": {"kind": "horizontal_ray", "w": [2.0, 1.0]},
                "z": [1.0, 2.0],
                "w": [2.0, 1.0],
                "n_range": [0, 30],
            },
        ),
        Scenario(
            "total_speed_hyperbolic",
            "f = 2z: d_H(w, f^n z) eventually strictly increasing",
            run_total_speed_hyperbolic,
            {"map": _affine(2.0), "z": [1.0, 0.0], "w": [7.0, 2.0]},
        ),
        Scenario(
            "total_speed_parabolic_zero",
            "f = z + 1: total speed with vanishing increments",
            run_total_speed_parabolic_zero,
            {"map": _affine(1.0, (1.0, 0.0)), "z": [1.0, 0.0], "w": [1.0, 0.0]},
        ),
        Scenario(
            "total_speed_parabolic_positive",
            "f = z + i: total speed of a positive-step automorphism",
            run_total_speed_parabolic_positive,
            {"map": _affine(1.0, (0.0, 1.0)), "z": [1.0, 0.0], "w": [1.0, 0.0]},
        ),
        Scenario(
            "closeness",
            "equal-slope rays (theta = 0.4, offset 5i): projections of 2^n (1+i) converge",
            run_closeness,
            {
                "map": _affine(2.0),
                "curve": _ray(0.4),
                "curve2": _ray(0.4, offset=(0.0, 5.0)),
                "z": [1.0, 1.0],
                "n_range": [0, 30],
            },
        ),
        Scenario(
            "closeness_ex31",
            "radial ray theta = 0 against the plateau trace along e^n",
            run_closeness_ex31,
            {
                "map": {"kind": "scaling", "t": 1.0},
                "curve": _ray(0.0),
                "curve2": _example("ex31", 20),
                "z": [1.0, 0.0],
                "n_range": [0, 16],
            },
        ),
        Scenario(
            "slopes",
            "rays of slopes 0 and pi/3: projections of 2^n end up atanh(1/sqrt 3) apart",
            run_slopes,
            {
                "map": _affine(2.0),
                "curve": _ray(0.0),
                "curve2": _ray(math.pi / 3.0),
                "z": [1.0, 0.0],
            },
        ),
        Scenario(
            "slopes_symmetric",
            "rays of slopes -0.3 and 0.3 along 2^n (1+i)",
            run_slopes_symmetric,
            {
                "map": _affine(2.0),
                "curve": _ray(-0.3),
                "curve2": _ray(0.3),
                "z": [1.0, 1.0],
            },
        ),
        Scenario(
            "logcos",
            "theta = pi/3, r_n = 2^n: angled minus radial distance tends to log 2",
            run_logcos,
            {
                "map": _affine(2.0),
                "curve": _ray(math.pi / 3.0),
                "z": [1.0, 0.0],
                "n_range": [0, 30],
            },
        ),
        Scenario(
            "logcos_zero",
            "theta = 0: angled and radial distances coincide",
            run_logcos_zero,
            {"map": _affine(2.0), "curve": _ray(0.0), "z": [1.0, 0.0], "n_range": [0, 30]},
        ),
        Scenario(
            "ex31",
            "hyperbolic semigroup: plateau pi(e^t) = e^n for t near n",
            run_example_ex31,
            {"curve": _example("ex31", 8), "z": [1.0, 0.0], "w": [1.0, 0.0]},
            counterexample=True,
            discrete=False,
        ),
        Scenario(
            "ex32_zero",
            "f = z + 1 (zero step): pi(f^{3n-2}(1)) = pi(f^{3n-1}(1)) = 3n",
            run_example_ex32_zero,
            {
                "map": _affine(1.0, (1.0, 0.0)),
                "curve": _example("ex32_zero", 10),
                "z": [1.0, 0.0],
                "w": [1.0, 0.0],
                "n_range": [1, 15],
            },
            counterexample=True,
        ),
        Scenario(
            "ex32_pos",
            "g = z + i (positive step): consecutive orbit points share projections",
            run_example_ex32_pos,
            {
                "map": _affine(1.0, (0.0, 1.0)),
                "curve": _example("ex32_pos", 10),
                "z": [1.0, 0.0],
                "w": [1.0, 0.0],
                "n_range": [1, 13],
            },
            counterexample=True,
        ),
        Scenario(
            "ex33",
            "f = 2z, two tangent circles: equality at n = 1, 2, strict increase from n = 3",
            run_example_ex33,
            {
                "map": _affine(2.0),
                "curve": _example("ex33"),
                "z": [1.0, 0.0],
                "w": [1.0, 0.0],
                "n_range": [1, 20],
                "policy": {"kind": "last", "overrides": {1: _EXPLICIT_2SQRT2, 2: _EXPLICIT_2SQRT2}},
            },
            counterexample=True,
        ),
        Scenario(
            "ex34",
            "f = 2z, tangential curve 1 + it: every projection is 1",
            run_example_ex34,
            {
                "map": _affine(2.0),
                "curve": _example("ex34"),
                "z": [1.0, 0.0],
                "w": [1.0, 0.0],
                "n_range": [1, 20],
            },
            counterexample=True,
        ),
        Scenario(
            "ex34_lower",
            "f = 2z, tangential curve 1 - it: every projection is 1",
            run_example_ex34_lower,
            {
                "map": _affine(2.0),
                "curve": _example("ex34_lower"),
                "z": [1.0, 0.0],
                "w": [1.0, 0.0],
                "n_range": [1, 20],
            },
            counterexample=True,
        ),
        Scenario(
            "distance_growth",
            "f = 2z and 2z + 1: |f^n(z) - w| eventually strictly increasing for random w",
            run_distance_growth,
            {"map": _affine(2.0), "z": [1.0, 1.0], "n_range": [0, 200]},
        ),
        Scenario(
            "im_growth",
            "g = z + i: |Im g^n(1)| strictly increasing with b = 1",
            run_im_growth,
            {"map": _affine(1.0, (0.0, 1.0)), "z": [1.0, 0.0]},
        ),
        Scenario(
            "metric_identities",
            "metric identities and triangle inequality on random points",
            run_metric_identities,
            {},
        ),
        Scenario(
            "projection_oracle",
            "numeric projections against closed forms on random queries",
            run_projection_oracle,
            {
                "curve": _ray(0.7),
                "curve2": {"kind": "horizontal_ray", "w": [1.0, 1.0]},
            },
        ),
    ]
}


def get_scenario(scenario_id: str) -> Scenario:
    try:
        return SCENARIOS[scenario_id]
    except KeyError as exc:
        known = ", ".join(sorted(SCENARIOS))
        raise ScenarioConfigError(f"Unknown scenario '{scenario_id}' (known: {known})") from exc


def run_scenario(
    scenario_id: str,
    document: Optional[dict[str, Any]] = None,
    n_max: Optional[int] = None,
) -> tuple[ScenarioConfig, Report]:
    """Validate the configuration of a scenario and run it."""
    scenario = get_scenario(scenario_id)
    cfg = scenario.config(document)
    if n_max is not None:
        cfg = ScenarioConfig.model_validate(
            {**cfg.model_dump(exclude_none=True), "n_range": [cfg.n_start, n_max]}
        )
    logger.info("Running %s: %s", scenario.id, scenario.description)
    report = scenario.runner(cfg)
    if report.verdict.passed:
        logger.info("%s: pass", scenario.id)
    else:
        logger.warning("%s: FAIL (%s)", scenario.id, "; ".join(report.verdict.failures))
    return cfg, report


def run_example(
    example_id: str,
    document: Optional[dict[str, Any]] = None,
    n_max: Optional[int] = None,
) -> ExampleReport:
    """Reproduce one counterexample.

    Raises:
        ScenarioConfigError: If the id does not name a counterexample.
        CounterexampleNotReproducedError: If any of its checks fails.
    """
    scenario = get_scenario(example_id)
    if not scenario.counterexample:
        raise ScenarioConfigError(f"'{example_id}' is not a counterexample scenario")
    _, report = run_scenario(example_id, document, n_max)
    return report


def hypotheses_hold(cfg: ScenarioConfig, discrete: bool = True) -> bool:
    """Hyperbolic map, non-tangential curve and a discrete orbit."""
    if not discrete or cfg.map is None or cfg.curve is None:
        return False
    if _is_tangential(cfg.curve.build()):
        return False
    return classify(cfg.map.build()) is MapClass.HYPERBOLIC


def theorem_hypotheses_hold(scenario: Scenario, cfg: ScenarioConfig) -> bool:
    return hypotheses_hold(cfg, scenario.discrete)
