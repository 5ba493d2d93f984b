"""CSV and SVG artifacts for scenario reports."""

import csv
import logging
from pathlib import Path
from typing import Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from hyproj.harness.reports import Report, ReportRow  # noqa: E402

logger = logging.getLogger(__name__)

CSV_HEADER = ["n", "re_z", "im_z", "t_star", "re_pi", "im_pi", "dist_w_pi", "delta"]


def _format_float(value: Optional[float]) -> str:
    """17 significant digits; empty cell for missing values."""
    if value is None:
        return ""
    return format(float(value), ".17g")


def csv_rows(rows: list[ReportRow]) -> list[list[str]]:
    """Rows of the CSV body, delta being the difference with the previous row's value."""
    out = []
    previous: Optional[float] = None
    for row in rows:
        delta = None if previous is None else row.value - previous
        out.append(
            [
                str(row.n),
                _format_float(row.z.real),
                _format_float(row.z.imag),
                _format_float(row.t_star),
                _format_float(row.pi.real if row.pi is not None else None),
                _format_float(row.pi.imag if row.pi is not None else None),
                _format_float(row.value),
                _format_float(delta),
            ]
        )
        previous = row.value
    return out


def emit_csv(report: Report, path: Path) -> Path:
    """Write the report rows as UTF-8 CSV with LF line endings."""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            writer.writerows(csv_rows(report.rows))
    except OSError as exc:
        raise OSError(f"Cannot write CSV to {path}: {exc}") from exc
    logger.info("Wrote %d rows to %s", len(report.rows), path)
    return path


def emit_plot(report: Report, path: Path) -> Path:
    """Write a single SVG line chart of the report values against n."""
    path = Path(path)
    with plt.rc_context({"svg.hashsalt": "hyproj", "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(6.4, 4.0))
        try:
            ax.plot(report.ns, report.values, marker="o", markersize=3, linewidth=1)
            ax.set_xlabel("n")
            ax.set_ylabel(report.label)
            ax.set_title(report.scenario)
            ax.grid(True, linewidth=0.3)
            fig.tight_layout()
            path.parent.mkdir(parents=True, exist_ok=True)
            fig.savefig(path, format="svg", metadata={"Date": None})
        except OSError as exc:
            raise OSError(f"Cannot write plot to {path}: {exc}") from exc
        finally:
            plt.close(fig)
    logger.info("Wrote plot to %s", path)
    return path
