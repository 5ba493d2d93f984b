"""JSON scenario configuration schemas.

Complex numbers are written as ``[re, im]`` pairs. Unknown keys are rejected
at every level.
"""

import math
from pathlib import Path
from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from hyproj.config import get_settings
from hyproj.core.curves import Curve, ExampleCurveId, example_curve, horizontal_ray, radial_ray
from hyproj.core.curves import vertical_ray as build_vertical_ray
from hyproj.core.dynamics import Affine, Composition, MapSpec, ScalingSemigroup
from hyproj.core.projection import PolicyKind, ProjectionOptions, ProjectionPolicy

ComplexPair = Annotated[list[float], Field(min_length=2, max_length=2)]


def to_complex(pair: ComplexPair) -> complex:
    return complex(pair[0], pair[1])


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


# Maps


class AffineMapConfig(StrictModel):
    """z -> a z + b."""

    kind: Literal["affine"]
    a: float = Field(..., ge=1.0)
    b: ComplexPair = Field(default_factory=lambda: [0.0, 0.0])

    def build(self) -> MapSpec:
        return Affine(self.a, to_complex(self.b))


class ScalingMapConfig(StrictModel):
    """Member phi_t(z) = e^t z of the scaling semigroup."""

    kind: Literal["scaling"]
    t: float = Field(..., gt=0.0)

    def build(self) -> MapSpec:
        return ScalingSemigroup().at(self.t)


class CompositionMapConfig(StrictModel):
    """Maps applied left to right."""

    kind: Literal["composition"]
    maps: list["MapConfig"] = Field(..., min_length=1)

    def build(self) -> MapSpec:
        return Composition(tuple(m.build() for m in self.maps))


MapConfig = Annotated[
    Union[AffineMapConfig, ScalingMapConfig, CompositionMapConfig],
    Field(discriminator="kind"),
]
CompositionMapConfig.model_rebuild()


# Curves


class RadialRayConfig(StrictModel):
    kind: Literal["radial_ray"]
    theta: float = Field(..., gt=-math.pi / 2, lt=math.pi / 2)
    r0: float = Field(default=1.0, gt=0.0)
    offset: ComplexPair = Field(default_factory=lambda: [0.0, 0.0])

    def build(self) -> Curve:
        return radial_ray(self.theta, self.r0, to_complex(self.offset))


class HorizontalRayConfig(StrictModel):
    kind: Literal["horizontal_ray"]
    w: ComplexPair

    def build(self) -> Curve:
        return horizontal_ray(to_complex(self.w))


class VerticalRayConfig(StrictModel):
    kind: Literal["vertical_ray"]
    x0: float = Field(default=1.0, gt=0.0)
    sign: Literal[1, -1] = 1

    def build(self) -> Curve:
        return build_vertical_ray(self.x0, self.sign)


class ExampleCurveConfig(StrictModel):
    kind: Literal["example"]
    id: ExampleCurveId
    n_max: int = Field(default=10, ge=1)

    def build(self) -> Curve:
        return example_curve(self.id.value, self.n_max)


CurveConfig = Annotated[
    Union[RadialRayConfig, HorizontalRayConfig, VerticalRayConfig, ExampleCurveConfig],
    Field(discriminator="kind"),
]


# Policy and tolerances


class PolicyConfig(StrictModel):
    """Tie-break policy with optional per-index overrides."""

    kind: PolicyKind = PolicyKind.LAST
    point: Optional[ComplexPair] = None
    overrides: dict[int, "PolicyConfig"] = Field(default_factory=dict)

    @model_validator(mode="after")
    def check_point(self) -> "PolicyConfig":
        if (self.kind is PolicyKind.EXPLICIT) != (self.point is not None):
            raise ValueError("A point is required for, and only for, the explicit policy")
        return self

    def build(self) -> ProjectionPolicy:
        overrides = {index: policy.build() for index, policy in self.overrides.items()}
        point = to_complex(self.point) if self.point is not None else None
        return ProjectionPolicy(self.kind, point=point, overrides=overrides)


PolicyConfig.model_rebuild()


class ToleranceConfig(StrictModel):
    """Pass/fail thresholds and projection options."""

    closeness_tol: float = Field(default=1e-3, gt=0.0)
    closeness_gate: float = Field(default=1e6, gt=0.0)
    coarse_closeness_tol: float = Field(default=1e-2, gt=0.0)
    coarse_closeness_gate: float = Field(default=1e4, gt=0.0)
    slopes_tol: float = Field(default=1e-4, gt=0.0)
    slopes_gate: float = Field(default=1e8, gt=0.0)
    logcos_tol: float = Field(default=1e-6, gt=0.0)
    min_increment: float = Field(default=1e-6, ge=0.0)
    tail_window: int = Field(default=5, ge=1)

    coarse_samples: int = Field(default_factory=lambda: get_settings().coarse_samples, ge=16)
    t_tol: float = Field(default=1e-10, gt=0.0)
    d_cluster: float = Field(default=1e-7, gt=0.0)
    domain_margin: float = Field(default=0.05, gt=0.0, lt=1.0)
    continuum_run: int = Field(default=10, ge=2)

    def projection_options(self) -> ProjectionOptions:
        return ProjectionOptions(
            coarse_samples=self.coarse_samples,
            t_tol=self.t_tol,
            d_cluster=self.d_cluster,
            domain_margin=self.domain_margin,
            continuum_run=self.continuum_run,
        )


# Scenario


class ScenarioConfig(StrictModel):
    """A complete scenario document."""

    map: Optional[MapConfig] = None
    curve: Optional[CurveConfig] = None
    curve2: Optional[CurveConfig] = None
    z: ComplexPair = Field(default_factory=lambda: [1.0, 0.0])
    w: ComplexPair = Field(default_factory=lambda: [1.0, 0.0])
    n_range: Annotated[list[int], Field(min_length=2, max_length=2)] = Field(
        default_factory=lambda: [0, get_settings().default_n_max]
    )
    policy: PolicyConfig = Field(default_factory=PolicyConfig)
    tolerances: ToleranceConfig = Field(default_factory=ToleranceConfig)
    csv: Optional[Path] = None
    plot: Optional[Path] = None

    @field_validator("z", "w")
    @classmethod
    def in_right_half_plane(cls, value: list[float]) -> list[float]:
        if not (math.isfinite(value[0]) and math.isfinite(value[1]) and value[0] > 0):
            raise ValueError(f"Point {value} is not in the right half-plane")
        return value

    @model_validator(mode="after")
    def check_range(self) -> "ScenarioConfig":
        start, end = self.n_range
        if start < 0 or end < start:
            raise ValueError(f"n_range must satisfy 0 <= start <= end, got {self.n_range}")
        return self

    @property
    def n_start(self) -> int:
        return self.n_range[0]

    @property
    def n_end(self) -> int:
        return self.n_range[1]

    def z_point(self) -> complex:
        return to_complex(self.z)

    def w_point(self) -> complex:
        return to_complex(self.w)
