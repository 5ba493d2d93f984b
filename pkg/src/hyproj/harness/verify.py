"""Run every scenario, write its artifacts and cross-check the counterexamples."""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from hyproj.config import get_settings
from hyproj.core.errors import CounterexampleNotReproducedError, HyprojError
from hyproj.harness.export import emit_csv, emit_plot
from hyproj.harness.reports import ExampleReport, Report, Verdict
from hyproj.harness.scenarios import SCENARIOS, run_scenario, theorem_hypotheses_hold

logger = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    """Reports of a full run, scenarios that errored and the consistency verdict."""

    reports: dict[str, Report] = field(default_factory=dict)
    errors: dict[str, str] = field(default_factory=dict)
    consistency: Verdict = field(default_factory=Verdict)

    @property
    def passed(self) -> bool:
        return (
            not self.errors
            and self.consistency.passed
            and all(r.verdict.passed for r in self.reports.values())
        )

    def failed(self) -> list[str]:
        failed = [sid for sid, r in self.reports.items() if not r.verdict.passed]
        return failed + list(self.errors)


def consistency_check(reports: dict[str, Report]) -> Verdict:
    """Counterexamples that break monotonicity must violate a theorem hypothesis.

    Each hypothesis (hyperbolic map, non-tangential curve, discrete orbit)
    is read off the scenario configuration, not from the report.
    """
    verdict = Verdict()
    for sid, scenario in SCENARIOS.items():
        report = reports.get(sid)
        if not scenario.counterexample or not isinstance(report, ExampleReport):
            continue
        if report.sequence is None:
            verdict.add_note(f"{sid}: no projection sequence to judge")
            continue
        hypotheses = theorem_hypotheses_hold(scenario, scenario.config())
        increasing = report.sequence.eventually_increasing
        if hypotheses and not increasing:
            verdict.add_failure(
                f"{sid} satisfies every hypothesis yet is not eventually increasing"
            )
        elif hypotheses:
            verdict.add_note(f"{sid}: hypotheses hold and the sequence increases eventually")
        else:
            verdict.add_note(f"{sid}: a hypothesis fails (eventually increasing: {increasing})")
    return verdict


def run_all(
    scenario_ids: Optional[list[str]] = None,
    output_dir: Optional[Path] = None,
    plots: bool = False,
) -> SuiteResult:
    """Run the given scenarios (all by default) with their default configurations."""
    settings = get_settings()
    output_dir = Path(output_dir) if output_dir is not None else settings.ensure_output_dir()
    result = SuiteResult()

    for sid in scenario_ids or list(SCENARIOS):
        try:
            cfg, report = run_scenario(sid)
        except CounterexampleNotReproducedError as exc:
            logger.error("%s: %s", sid, exc)
            if exc.report is None:
                result.errors[sid] = str(exc)
                continue
            cfg, report = SCENARIOS[sid].config(), exc.report
        except HyprojError as exc:
            logger.error("%s errored: %s", sid, exc)
            result.errors[sid] = str(exc)
            continue
        result.reports[sid] = report
        emit_csv(report, cfg.csv or output_dir / f"{sid}.csv")
        if plots or cfg.plot is not None:
            emit_plot(report, cfg.plot or output_dir / f"{sid}.svg")

    result.consistency = consistency_check(result.reports)
    for message in result.consistency.failures:
        logger.error("Consistency: %s", message)
    logger.info(
        "Suite finished: %d passed, %d failed",
        len(result.reports) + len(result.errors) - len(result.failed()),
        len(result.failed()),
    )
    return result
