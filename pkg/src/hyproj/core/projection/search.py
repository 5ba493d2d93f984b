"""Derivative-free one-dimensional minimization."""

import math
from dataclasses import dataclass
from typing import Callable

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
INV_PHI_SQUARE = (3.0 - math.sqrt(5.0)) / 2.0


@dataclass(frozen=True)
class SearchResult:
    """Best point found by a bracketed search."""

    x: float
    fx: float
    evaluations: int


def golden_section(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float,
) -> SearchResult:
    """Golden-section search for a minimum of ``f`` on [a, b].

    Assumes ``f`` is unimodal on the bracket. Stops when the bracket is no
    wider than ``tol`` and returns the best interior point evaluated.
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        x = 0.5 * (a + b)
        return SearchResult(x=x, fx=f(x), evaluations=1)

    steps = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)
    evaluations = 2

    for _ in range(steps - 1):
        if yc < yd:
            b, d, yd = d, c, yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)
        evaluations += 1

    if yc < yd:
        return SearchResult(x=c, fx=yc, evaluations=evaluations)
    return SearchResult(x=d, fx=yd, evaluations=evaluations)


def sign_change_bisection(
    g: Callable[[float], float],
    a: float,
    b: float,
    max_iter: int = 200,
) -> float:
    """Bisect [a, b] on the sign of ``g`` down to adjacent floats.

    Requires g(a) <= 0 <= g(b); returns the point where g changes sign.
    """
    for _ in range(max_iter):
        mid = 0.5 * (a + b)
        if mid in (a, b):
            break
        if g(mid) <= 0.0:
            a = mid
        else:
            b = mid
    return 0.5 * (a + b)
