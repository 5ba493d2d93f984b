"""Scenario reports and their pass/fail verdicts."""

import math
from dataclasses import dataclass, field
from typing import Optional


@dataclass
class Verdict:
    """Outcome of the checks run by a scenario."""

    passed: bool = True
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    informational: bool = False

    def add_failure(self, message: str) -> None:
        """Record a failed check."""
        self.failures.append(message)
        self.passed = False

    def add_note(self, message: str) -> None:
        """Record a diagnostic that does not affect the outcome."""
        self.notes.append(message)

    def check(self, condition: bool, message: str) -> bool:
        """Record ``message`` as a failure unless ``condition`` holds."""
        if not condition:
            self.add_failure(message)
        return condition


@dataclass
class ReportRow:
    """One CSV row: the query z_n, its projection and the tracked value."""

    n: int
    z: complex
    value: float
    t_star: Optional[float] = None
    pi: Optional[complex] = None


@dataclass
class MonotonicitySummary:
    first_increase_index: int
    violations: list[tuple[int, float]]
    increment_tail: Optional[float]
    eventually_increasing: bool
    eventually_nondecreasing: bool


def summarize_monotonicity(
    values: list[float],
    n_start: int,
    min_increment: float,
    tail_window: int,
) -> MonotonicitySummary:
    """Violations, first index N and tail increment of a sequence indexed from n_start.

    A violation at n means values[n] - values[n-1] <= min_increment. N is the
    last violating index (or n_start without violations); the sequence is
    eventually increasing when N leaves at least ``tail_window`` indices
    before the end of the range.
    """
    n_end = n_start + len(values) - 1
    violations = []
    for k in range(1, len(values)):
        delta = values[k] - values[k - 1]
        if delta <= min_increment:
            violations.append((n_start + k, delta))
    first = violations[-1][0] if violations else n_start

    increments = [values[k] - values[k - 1] for k in range(1, len(values))]
    tail = increments[-tail_window:] if increments else []
    increment_tail = sum(tail) / len(tail) if tail else None
    nondecreasing_from = first_nondecreasing(values)
    return MonotonicitySummary(
        first_increase_index=first,
        violations=violations,
        increment_tail=increment_tail,
        eventually_increasing=len(values) > 1 and first <= n_end - tail_window,
        eventually_nondecreasing=nondecreasing_from <= len(values) - 1 - tail_window,
    )


def first_nondecreasing(values: list[float], tol: float = 1e-12) -> int:
    """Smallest k with values[k] <= values[k+1] <= ... up to ``tol``."""
    k = len(values) - 1
    while k > 0 and values[k] >= values[k - 1] - tol:
        k -= 1
    return k


@dataclass
class MonotonicityReport:
    """The sequence d_H(w, pi_n) (or d_H(w, f^n z)) and its monotonicity verdict."""

    scenario: str
    n_start: int
    values: list[float]
    first_increase_index: int
    violations: list[tuple[int, float]]
    increment_tail: Optional[float]
    eventually_increasing: bool
    eventually_nondecreasing: bool
    rows: list[ReportRow] = field(default_factory=list)
    verdict: Verdict = field(default_factory=Verdict)

    @property
    def ns(self) -> list[int]:
        return [self.n_start + k for k in range(len(self.values))]

    @property
    def label(self) -> str:
        return "d_H(w, pi_n)"


@dataclass
class ClosenessReport:
    """Per-n distance between the projections onto two curves."""

    scenario: str
    ns: list[int]
    gaps: list[float]
    moduli: list[float]
    target: float
    tail_value: float
    rows: list[ReportRow] = field(default_factory=list)
    verdict: Verdict = field(default_factory=Verdict)

    @property
    def values(self) -> list[float]:
        return self.gaps

    @property
    def label(self) -> str:
        return "d_H(pi_1, pi_2)"


@dataclass
class ScalarReport:
    """A scalar sequence checked against a target value."""

    scenario: str
    ns: list[int]
    values: list[float]
    target: Optional[float] = None
    tail_value: Optional[float] = None
    label: str = "value"
    rows: list[ReportRow] = field(default_factory=list)
    verdict: Verdict = field(default_factory=Verdict)


@dataclass
class ExampleCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ExampleReport:
    """Sub-checks of a counterexample reproduction plus its projection sequence."""

    scenario: str
    checks: list[ExampleCheck] = field(default_factory=list)
    sequence: Optional[MonotonicityReport] = None
    eventually_nondecreasing: Optional[bool] = None
    verdict: Verdict = field(default_factory=Verdict)

    def record(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(ExampleCheck(name, passed, detail))
        if not passed:
            self.verdict.add_failure(f"{name}: {detail}" if detail else name)

    @property
    def ns(self) -> list[int]:
        return self.sequence.ns if self.sequence else []

    @property
    def values(self) -> list[float]:
        return self.sequence.values if self.sequence else []

    @property
    def rows(self) -> list[ReportRow]:
        return self.sequence.rows if self.sequence else []

    @property
    def label(self) -> str:
        return "d_H(w, pi_n)"


Report = MonotonicityReport | ClosenessReport | ScalarReport | ExampleReport


def is_close(a: float, b: float, tol: float) -> bool:
    return math.isfinite(a) and math.isfinite(b) and abs(a - b) <= tol
