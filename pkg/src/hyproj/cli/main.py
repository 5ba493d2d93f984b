"""CLI entry point for hyproj."""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional

from pydantic import ValidationError

from hyproj.config import get_settings
from hyproj.core.errors import (
    CounterexampleNotReproducedError,
    CurveError,
    HyprojError,
    InvalidMapError,
    ProjectionPolicyError,
    ScenarioConfigError,
)
from hyproj.harness import SCENARIOS, emit_csv, emit_plot, run_all, run_scenario
from hyproj.harness.reports import ExampleReport, Report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2

# Raised while turning a document into maps, curves and policies.
CONFIG_ERRORS = (
    ValidationError,
    ScenarioConfigError,
    InvalidMapError,
    CurveError,
    ProjectionPolicyError,
)


def load_document(path: Path) -> dict[str, Any]:
    """Read a JSON scenario document."""
    try:
        document = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ScenarioConfigError(f"Cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ScenarioConfigError(f"Config {path} is not valid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise ScenarioConfigError(f"Config {path} must be a JSON object")
    return document


def print_report(scenario_id: str, report: Report) -> None:
    status = "PASS" if report.verdict.passed else "FAIL"
    if report.verdict.informational:
        status += " (informational)"
    print(f"{scenario_id}: {status}")
    if isinstance(report, ExampleReport):
        for check in report.checks:
            mark = "ok " if check.passed else "BAD"
            detail = f" ({check.detail})" if check.detail else ""
            print(f"  [{mark}] {check.name}{detail}")
    if report.values:
        print(f"  last value: {report.values[-1]:.12g}")
    for failure in report.verdict.failures:
        print(f"  failure: {failure}")
    for note in report.verdict.notes:
        print(f"  note: {note}")


def write_artifacts(
    scenario_id: str, report: Report, csv: Optional[Path], plot: Optional[Path]
) -> None:
    settings = get_settings()
    csv_path = csv or settings.ensure_output_dir() / f"{scenario_id}.csv"
    emit_csv(report, csv_path)
    print(f"  csv: {csv_path}")
    if plot is not None:
        emit_plot(report, plot)
        print(f"  plot: {plot}")


def run_command(args: argparse.Namespace) -> int:
    """Run one scenario and write its CSV (and plot if asked)."""
    if args.scenario not in SCENARIOS:
        print(f"Unknown scenario: {args.scenario}", file=sys.stderr)
        print(f"Known scenarios: {', '.join(SCENARIOS)}", file=sys.stderr)
        return EXIT_CONFIG

    try:
        document = load_document(args.config) if args.config else None
        cfg, report = run_scenario(args.scenario, document, n_max=args.n_max)
    except CONFIG_ERRORS as exc:
        print(f"Configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except CounterexampleNotReproducedError as exc:
        print(f"{args.scenario}: {exc}", file=sys.stderr)
        if exc.report is not None:
            print_report(args.scenario, exc.report)
            write_artifacts(args.scenario, exc.report, args.csv, args.plot)
        return EXIT_FAILED
    except HyprojError as exc:
        print(f"{args.scenario} failed: {exc}", file=sys.stderr)
        return EXIT_FAILED

    print_report(args.scenario, report)
    write_artifacts(args.scenario, report, args.csv or cfg.csv, args.plot or cfg.plot)
    return EXIT_OK if report.verdict.passed else EXIT_FAILED


def list_command(args: argparse.Namespace) -> int:
    """Print the registered scenarios."""
    width = max(len(sid) for sid in SCENARIOS)
    for sid, scenario in SCENARIOS.items():
        tag = " [counterexample]" if scenario.counterexample else ""
        print(f"{sid.ljust(width)}  {scenario.description}{tag}")
    return EXIT_OK


def verify_command(args: argparse.Namespace) -> int:
    """Run the full acceptance suite."""
    result = run_all(output_dir=args.output_dir, plots=args.plots)
    for sid, report in result.reports.items():
        print_report(sid, report)
    for sid, message in result.errors.items():
        print(f"{sid}: ERROR {message}")
    for message in result.consistency.failures:
        print(f"consistency: FAIL {message}")
    for message in result.consistency.notes:
        print(f"consistency: {message}")

    failed = result.failed()
    total = len(result.reports) + len(result.errors)
    print(f"\n{total - len(failed)}/{total} scenarios passed")
    return EXIT_OK if result.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyproj",
        description="hyproj - projections of holomorphic orbits onto curves in the half-plane",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  hyproj list                                  List the scenarios
  hyproj run main_theorem                      Run one scenario
  hyproj run ex33 --csv out/ex33.csv --plot out/ex33.svg
  hyproj run closeness --config my.json --n-max 25
  hyproj verify                                Run the acceptance suite
        """,
    )
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # Run command
    run_parser = subparsers.add_parser("run", help="Run one scenario")
    run_parser.add_argument("scenario", help="Scenario id (see 'hyproj list')")
    run_parser.add_argument("--config", type=Path, help="JSON document overriding the defaults")
    run_parser.add_argument("--csv", type=Path, help="CSV output path")
    run_parser.add_argument("--plot", type=Path, help="SVG plot output path")
    run_parser.add_argument("--n-max", type=int, dest="n_max", help="Last orbit index")

    # List command
    subparsers.add_parser("list", help="List the scenarios")

    # Verify command
    verify_parser = subparsers.add_parser("verify", help="Run every scenario")
    verify_parser.add_argument("--output-dir", type=Path, help="Directory for the CSV files")
    verify_parser.add_argument("--plots", action="store_true", help="Also write SVG plots")

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    """Main CLI entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = get_settings()
    except ValidationError as exc:
        print(f"Invalid HYPROJ_* settings: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    logging.basicConfig(
        level=settings.log_level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        if args.command == "run":
            return run_command(args)
        if args.command == "list":
            return list_command(args)
        if args.command == "verify":
            return verify_command(args)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    parser.print_help()
    return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
