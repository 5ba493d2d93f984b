"""Segments, piecewise walks and boundary-landing curves in H."""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Protocol, Union

import numpy as np

from hyproj.core.errors import CurveError, CurveEvaluationError
from hyproj.core.geometry.points import Angle, HalfPlanePoint

logger = logging.getLogger(__name__)

# Consecutive walk endpoints must agree to this (relative to max(1, |z|)).
JOIN_TOL = 1e-12


class Segment(Protocol):
    """A piece of trace parametrized by Euclidean arclength s in [0, length]."""

    @property
    def length(self) -> float: ...

    def points(self, s: np.ndarray) -> np.ndarray: ...


def _as_array(s: Union[float, np.ndarray]) -> np.ndarray:
    return np.asarray(s, dtype=np.float64)


@dataclass(frozen=True)
class LineSegment:
    """Euclidean segment from ``start`` to ``end``."""

    start: complex
    end: complex

    @property
    def length(self) -> float:
        return abs(self.end - self.start)

    def points(self, s: np.ndarray) -> np.ndarray:
        s = _as_array(s)
        direction = (self.end - self.start) / self.length
        return self.start + direction * s


@dataclass(frozen=True)
class ArcSegment:
    """Arc of the geodesic |z| = radius between two arguments."""

    radius: float
    phi_from: float
    phi_to: float

    def __post_init__(self):
        if not self.radius > 0:
            raise CurveError(f"Arc radius must be positive, got {self.radius}")
        for phi in (self.phi_from, self.phi_to):
            if not -0.5 * math.pi < phi < 0.5 * math.pi:
                raise CurveError(f"Arc argument {phi} leaves the right half-plane")

    @property
    def start(self) -> complex:
        return self.radius * complex(math.cos(self.phi_from), math.sin(self.phi_from))

    @property
    def end(self) -> complex:
        return self.radius * complex(math.cos(self.phi_to), math.sin(self.phi_to))

    @property
    def length(self) -> float:
        return self.radius * abs(self.phi_to - self.phi_from)

    def points(self, s: np.ndarray) -> np.ndarray:
        s = _as_array(s)
        phi = self.phi_from + (self.phi_to - self.phi_from) * (s / self.length)
        return self.radius * np.exp(1j * phi)


@dataclass(frozen=True)
class CircleArc:
    """Arc of a Euclidean circle (a hyperbolic circle of H) swept by angle."""

    center: complex
    radius: float
    angle_from: float
    angle_to: float

    def __post_init__(self):
        if not self.radius > 0:
            raise CurveError(f"Circle radius must be positive, got {self.radius}")
        if not self.center.real - self.radius > 0:
            raise CurveError("Circle is not contained in the right half-plane")

    @property
    def start(self) -> complex:
        return self.center + self.radius * complex(
            math.cos(self.angle_from), math.sin(self.angle_from)
        )

    @property
    def end(self) -> complex:
        return self.center + self.radius * complex(math.cos(self.angle_to), math.sin(self.angle_to))

    @property
    def length(self) -> float:
        return self.radius * abs(self.angle_to - self.angle_from)

    def points(self, s: np.ndarray) -> np.ndarray:
        s = _as_array(s)
        angle = self.angle_from + (self.angle_to - self.angle_from) * (s / self.length)
        return self.center + self.radius * np.exp(1j * angle)


@dataclass(frozen=True)
class HorizontalRay:
    """{start + s : s >= 0}."""

    start: complex

    @property
    def length(self) -> float:
        return math.inf

    def points(self, s: np.ndarray) -> np.ndarray:
        return self.start + _as_array(s)


@dataclass(frozen=True)
class VerticalRay:
    """{start + sign * i s : s >= 0}."""

    start: complex
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise CurveError(f"Vertical ray sign must be +1 or -1, got {self.sign}")

    @property
    def length(self) -> float:
        return math.inf

    def points(self, s: np.ndarray) -> np.ndarray:
        return self.start + (1j * self.sign) * _as_array(s)


@dataclass(frozen=True)
class RadialRay:
    """{offset + (r0 + s) e^{i theta} : s >= 0}."""

    theta: float
    r0: float
    offset: complex = 0j

    @property
    def start(self) -> complex:
        return self.offset + self.r0 * complex(math.cos(self.theta), math.sin(self.theta))

    @property
    def length(self) -> float:
        return math.inf

    def points(self, s: np.ndarray) -> np.ndarray:
        direction = complex(math.cos(self.theta), math.sin(self.theta))
        return self.offset + (self.r0 + _as_array(s)) * direction


Piece = tuple[Segment, bool]


def _piece_start(piece: Piece) -> complex:
    segment, reverse = piece
    s = segment.length if reverse else 0.0
    return complex(segment.points(np.array([s]))[0])


def _piece_end(piece: Piece) -> complex:
    segment, reverse = piece
    s = 0.0 if reverse else segment.length
    return complex(segment.points(np.array([s]))[0])


@dataclass(frozen=True)
class PiecewiseCurve:
    """A continuous walk over an ordered list of segments.

    Each piece is ``(segment, reverse)``; a hanging arc visited out-and-back
    appears twice, once forwards and once reversed. Only the last piece may be
    unbounded.
    """

    pieces: tuple[Piece, ...]
    offsets: tuple[float, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if not self.pieces:
            raise CurveError("A piecewise curve needs at least one segment")
        offsets = [0.0]
        for index, piece in enumerate(self.pieces):
            segment, _ = piece
            if math.isinf(segment.length) and index != len(self.pieces) - 1:
                raise CurveError("Only the final piece of a walk may be unbounded")
            if index > 0:
                previous_end = _piece_end(self.pieces[index - 1])
                start = _piece_start(piece)
                scale = max(1.0, abs(start))
                if abs(previous_end - start) > JOIN_TOL * scale:
                    raise CurveError(
                        f"Walk is discontinuous at piece {index}: {previous_end} != {start}"
                    )
            offsets.append(offsets[-1] + segment.length)
        object.__setattr__(self, "offsets", tuple(offsets[:-1]))

    @property
    def knots(self) -> tuple[float, ...]:
        """Parameters where one piece hands over to the next."""
        return self.offsets

    @property
    def total_length(self) -> float:
        last_segment, _ = self.pieces[-1]
        return self.offsets[-1] + last_segment.length

    def finite_pieces(self) -> list[tuple[float, float]]:
        """``(offset, length)`` of every bounded piece."""
        return [
            (offset, segment.length)
            for offset, (segment, _) in zip(self.offsets, self.pieces)
            if math.isfinite(segment.length)
        ]

    def points(self, ts: np.ndarray) -> np.ndarray:
        ts = _as_array(ts)
        out = np.empty(ts.shape, dtype=np.complex128)
        index = np.searchsorted(np.asarray(self.offsets), ts, side="right") - 1
        index = np.clip(index, 0, len(self.pieces) - 1)
        for k in np.unique(index):
            mask = index == k
            segment, reverse = self.pieces[k]
            local = ts[mask] - self.offsets[k]
            if math.isfinite(segment.length):
                local = np.clip(local, 0.0, segment.length)
                if reverse:
                    local = segment.length - local
            out[mask] = segment.points(local)
        return out


ProjectionOracle = Callable[[HalfPlanePoint], HalfPlanePoint]


@dataclass(frozen=True)
class Curve:
    """A curve Gamma: [0, inf) -> H landing at infinity.

    ``t_esc`` is the parameter beyond which |eval(t)| increases monotonically.
    ``truncation`` marks where a finitely truncated trace hands over to its
    exit ray; minimizers close to it cannot be trusted.
    """

    name: str
    path: PiecewiseCurve
    declared_slope: Optional[Angle] = None
    analytic_projection: Optional[ProjectionOracle] = field(default=None, compare=False)
    t_esc: float = 0.0
    truncation: Optional[float] = None
    lipschitz: float = 1.0
    landing: str = "infinity"

    @property
    def knots(self) -> tuple[float, ...]:
        return self.path.knots

    @property
    def is_tangential(self) -> bool:
        return self.declared_slope is not None and self.declared_slope.tangential

    def eval_many(self, ts: np.ndarray) -> np.ndarray:
        """Cartesian values of the curve on an array of parameters."""
        ts = _as_array(ts)
        if ts.size and (not np.all(np.isfinite(ts)) or ts.min() < 0.0):
            raise CurveEvaluationError(f"Curve {self.name} evaluated outside [0, inf)")
        zs = self.path.points(ts)
        if not (np.all(np.isfinite(zs)) and np.all(zs.real > 0.0)):
            raise CurveEvaluationError(f"Curve {self.name} left the right half-plane numerically")
        return zs

    def eval_complex(self, t: float) -> complex:
        return complex(self.eval_many(np.array([t]))[0])

    def eval(self, t: float) -> HalfPlanePoint:
        """The point Gamma(t)."""
        return HalfPlanePoint.from_complex(self.eval_complex(t))
