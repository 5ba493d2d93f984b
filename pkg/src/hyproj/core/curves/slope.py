"""Numerical slope (cluster set of arg Gamma(t)) and escape checks."""

import numpy as np

from hyproj.core.curves.models import Curve
from hyproj.core.errors import CurveError


def slope_cluster(
    curve: Curve, t_lo: float, t_hi: float, samples: int = 512
) -> tuple[float, float]:
    """(min, max) of arg Gamma(t) over a grid geometric in 1 + t on [t_lo, t_hi]."""
    if not 0.0 <= t_lo < t_hi:
        raise CurveError(f"Need 0 <= t_lo < t_hi, got [{t_lo}, {t_hi}]")
    if samples < 2:
        raise CurveError(f"Need at least two samples, got {samples}")
    ts = np.expm1(np.linspace(np.log1p(t_lo), np.log1p(t_hi), samples))
    ts = np.clip(ts, t_lo, t_hi)
    args = np.angle(curve.eval_many(ts))
    return float(args.min()), float(args.max())


def escapes_monotonically(curve: Curve, t_hi: float = 1e12, samples: int = 256) -> bool:
    """Whether |Gamma(t)| increases strictly on a geometric grid beyond t_esc."""
    t_lo = curve.t_esc
    ts = t_lo + np.expm1(np.linspace(0.0, np.log1p(t_hi), samples))
    moduli = np.abs(curve.eval_many(ts))
    return bool(np.all(np.diff(moduli) > 0.0))


def continuity_defect(curve: Curve, t_hi: float, h: float = 1e-3, samples: int = 2000) -> float:
    """max |Gamma(t + h) - Gamma(t)| - L h over a uniform grid on [0, t_hi]."""
    ts = np.linspace(0.0, t_hi, samples)
    jumps = np.abs(curve.eval_many(ts + h) - curve.eval_many(ts))
    return float(jumps.max() - curve.lipschitz * h)
