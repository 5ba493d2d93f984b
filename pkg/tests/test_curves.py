"""Tests for curve segments, builders and the example traces."""

import math

import numpy as np
import pytest

from hyproj.core.curves import (
    EX33_RADIUS,
    ArcSegment,
    HorizontalRay,
    LineSegment,
    PiecewiseCurve,
    continuity_defect,
    escapes_monotonically,
    example_curve,
    geodesic_arc,
    horizontal_ray,
    radial_ray,
    slope_cluster,
    vertical_ray,
)
from hyproj.core.errors import CurveError, CurveEvaluationError
from hyproj.core.geometry import HALF_PI, as_point, dist_h, hyperbolic_circle_euclid


def _forward_arc_feet(curve):
    return [
        seg.end
        for seg, reverse in curve.path.pieces
        if isinstance(seg, ArcSegment) and not reverse
    ]


class TestPiecewiseCurve:
    """Tests for the piecewise walk."""

    def test_knots_and_points(self):
        """Test parametrization by arclength across a junction."""
        path = PiecewiseCurve(
            ((LineSegment(1 + 1j, 3 + 1j), False), (HorizontalRay(3 + 1j), False))
        )
        assert path.knots == (0.0, 2.0)
        np.testing.assert_allclose(path.points(np.array([1.0, 5.0])), [2 + 1j, 6 + 1j])

    def test_reversed_piece(self):
        """Test that a reversed arc walks back to where it started."""
        arc = geodesic_arc(2.0, 0.5, 0.0)
        path = PiecewiseCurve(((arc, False), (arc, True), (HorizontalRay(arc.start), False)))
        assert complex(path.points(np.array([path.knots[2]]))[0]) == pytest.approx(arc.start)
        assert complex(path.points(np.array([path.knots[1]]))[0]) == pytest.approx(2.0)

    def test_rejects_discontinuous_walk(self):
        with pytest.raises(CurveError):
            PiecewiseCurve(((LineSegment(1, 2), False), (LineSegment(3, 4), False)))

    def test_rejects_inner_unbounded_piece(self):
        """Test that only the final piece may be a ray."""
        with pytest.raises(CurveError):
            PiecewiseCurve(((HorizontalRay(1 + 0j), False), (LineSegment(1, 2), False)))

    def test_rejects_empty_walk(self):
        with pytest.raises(CurveError):
            PiecewiseCurve(())


class TestBuilders:
    """Tests for the elementary curves."""

    def test_radial_ray(self):
        """Test that the radial ray starts at r0 e^{i theta} and moves outwards."""
        curve = radial_ray(0.3, 2.0)
        assert curve.eval_complex(0.0) == pytest.approx(2.0 * complex(math.cos(0.3), math.sin(0.3)))
        assert curve.eval(1.0).modulus == pytest.approx(3.0)
        assert curve.declared_slope.theta == 0.3
        assert curve.analytic_projection is not None

    def test_radial_ray_with_offset_has_no_oracle(self):
        curve = radial_ray(0.4, 1.0, offset=5j)
        assert curve.analytic_projection is None
        assert curve.eval_complex(0.0) == pytest.approx(5j + complex(math.cos(0.4), math.sin(0.4)))

    @pytest.mark.parametrize(("r0", "offset"), [(0.0, 0j), (-1.0, 0j), (1.0, -2 + 0j)])
    def test_radial_ray_rejects_bad_start(self, r0, offset):
        """Test that rays must start inside H with a positive radius."""
        with pytest.raises(CurveError):
            radial_ray(0.0, r0, offset)

    def test_horizontal_ray(self):
        """Test the horizontal geodesic and its closed-form projection."""
        curve = horizontal_ray(1 + 1j)
        assert curve.eval_complex(2.5) == pytest.approx(3.5 + 1j)
        oracle = curve.analytic_projection
        assert oracle(as_point(3 + 5j)).value == pytest.approx(5 + 1j)
        assert oracle(as_point(0.5 + 1j)).value == pytest.approx(1 + 1j)

    def test_vertical_ray_is_tangential(self):
        curve = vertical_ray(1.0, -1)
        assert curve.is_tangential
        assert curve.declared_slope.theta == -HALF_PI
        assert curve.eval_complex(2.0) == pytest.approx(1 - 2j)

    def test_eval_rejects_negative_parameter(self):
        """Test that evaluation failures are not construction errors."""
        with pytest.raises(CurveEvaluationError) as info:
            radial_ray(0.0, 1.0).eval_many(np.array([-1.0]))

        assert not isinstance(info.value, CurveError)

    def test_arc_bounds(self):
        """Test that arcs stay inside the right half-plane."""
        with pytest.raises(CurveError):
            ArcSegment(1.0, 0.0, 2.0)
        with pytest.raises(CurveError):
            ArcSegment(0.0, 0.0, 0.5)


class TestExampleCurves:
    """Tests for the counterexample traces."""

    def test_semigroup_plateau_feet(self):
        """Test that the arcs of the plateau trace land at e^n."""
        curve = example_curve("ex31", n_max=3)
        assert _forward_arc_feet(curve) == pytest.approx([math.e, math.e**2, math.e**3])
        assert curve.eval_complex(0.0) == pytest.approx(1 + 1j)
        assert curve.truncation == curve.knots[-1]

    def test_parabolic_zero_step_feet(self):
        curve = example_curve("ex32_zero", n_max=4)
        assert _forward_arc_feet(curve) == pytest.approx([3.0, 6.0, 9.0, 12.0])

    def test_parabolic_positive_step_feet(self):
        """Test the feet sqrt(1 + (2n+1)^2) and the spine below the axis."""
        curve = example_curve("ex32_pos", n_max=3)
        expected = [math.hypot(1.0, 2 * n + 1) for n in range(1, 4)]
        assert _forward_arc_feet(curve) == pytest.approx(expected)
        assert curve.eval_complex(0.0) == pytest.approx(3 - 1j)

    def test_two_circles_touch(self):
        """Test that the circles about 2 and 4 touch at 2 sqrt 2."""
        c2, r2 = hyperbolic_circle_euclid(2.0, EX33_RADIUS)
        c4, r4 = hyperbolic_circle_euclid(4.0, EX33_RADIUS)
        assert c2 + r2 == pytest.approx(2.0 * math.sqrt(2.0))
        assert c4 - r4 == pytest.approx(2.0 * math.sqrt(2.0))

        curve = example_curve("ex33")
        exit_start = curve.eval_complex(curve.knots[-1])
        assert exit_start == pytest.approx(4.0 * math.sqrt(2.0))
        assert dist_h(4, exit_start) == pytest.approx(EX33_RADIUS, rel=1e-12)

    @pytest.mark.parametrize(("curve_id", "sign"), [("ex34", 1), ("ex34_lower", -1)])
    def test_tangential_examples(self, curve_id, sign):
        curve = example_curve(curve_id)
        assert curve.name == curve_id
        assert curve.is_tangential
        assert curve.eval_complex(1.0) == pytest.approx(1 + sign * 1j)

    def test_unknown_example(self):
        with pytest.raises(CurveError):
            example_curve("ex99")

    def test_rejects_zero_arcs(self):
        with pytest.raises(CurveError):
            example_curve("ex31", n_max=0)


class TestSlopeEstimates:
    """Tests for the numerical slope and escape checks."""

    def test_slope_of_radial_ray(self):
        lo, hi = slope_cluster(radial_ray(0.4, 1.0), 0.0, 1e6)
        assert lo == pytest.approx(0.4, abs=1e-12)
        assert hi == pytest.approx(0.4, abs=1e-12)

    def test_slope_of_horizontal_ray_tends_to_zero(self):
        """Test that arg(t + i) shrinks like 1/t."""
        _, hi = slope_cluster(horizontal_ray(1 + 1j), 1e6, 1e9)
        assert 0.0 < hi < 1e-5

    def test_slope_cluster_rejects_empty_window(self):
        with pytest.raises(CurveError):
            slope_cluster(radial_ray(0.0, 1.0), 5.0, 5.0)

    def test_escape_after_t_esc(self):
        """Test that example traces escape monotonically past their exit parameter."""
        assert escapes_monotonically(radial_ray(0.0, 1.0))
        assert escapes_monotonically(example_curve("ex31", n_max=3))

    def test_walk_is_one_lipschitz(self):
        """Test that the arclength parametrization never jumps."""
        curve = example_curve("ex31", n_max=3)
        assert continuity_defect(curve, curve.knots[-1] + 5.0) <= 1e-9
