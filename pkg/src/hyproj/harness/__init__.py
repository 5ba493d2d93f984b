"""Reproducible scenarios, their reports and CSV/SVG artifacts."""

from hyproj.harness.export import CSV_HEADER, csv_rows, emit_csv, emit_plot
from hyproj.harness.reports import (
    ClosenessReport,
    ExampleCheck,
    ExampleReport,
    MonotonicityReport,
    Report,
    ReportRow,
    ScalarReport,
    Verdict,
    first_nondecreasing,
    summarize_monotonicity,
)
from hyproj.harness.scenarios import (
    SCENARIOS,
    Scenario,
    get_scenario,
    run_example,
    run_scenario,
)
from hyproj.harness.schemas import ScenarioConfig
from hyproj.harness.verify import SuiteResult, consistency_check, run_all

__all__ = [
    "CSV_HEADER",
    "ClosenessReport",
    "ExampleCheck",
    "ExampleReport",
    "MonotonicityReport",
    "Report",
    "ReportRow",
    "SCENARIOS",
    "ScalarReport",
    "Scenario",
    "ScenarioConfig",
    "SuiteResult",
    "Verdict",
    "consistency_check",
    "csv_rows",
    "emit_csv",
    "emit_plot",
    "first_nondecreasing",
    "get_scenario",
    "run_all",
    "run_example",
    "run_scenario",
    "summarize_monotonicity",
]
