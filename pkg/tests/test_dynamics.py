"""Tests for self-maps, orbits and limit estimates."""

import math

import pytest

from hyproj.core.dynamics import (
    Affine,
    Composition,
    MapClass,
    ScalingSemigroup,
    StepKind,
    angular_derivative_estimate,
    classify,
    distance_growth_check,
    first_strict_increase,
    im_monotonicity_check,
    iterate,
    parabolic_step_kind,
    schwarz_pick_check,
    schwarz_pick_defects,
    step_slope_limits,
)
from hyproj.core.errors import DomainError, InvalidMapError
from hyproj.core.geometry import as_point, dist_h

LOG_GOLDEN = math.log((1.0 + math.sqrt(5.0)) / 2.0)


class TestAffine:
    """Tests for affine self-maps."""

    @pytest.mark.parametrize(
        ("a", "b"), [(0.5, 0j), (2.0, -1 + 0j), (1.0, 0j), (math.inf, 0j), (1.0, complex(math.nan))]
    )
    def test_rejects_invalid_maps(self, a, b):
        """Test that contractions, maps leaving H and the identity are refused."""
        with pytest.raises(InvalidMapError):
            Affine(a, b)

    def test_automorphism(self):
        assert Affine(2.0).is_automorphism
        assert Affine(1.0, 1j).is_automorphism
        assert not Affine(1.0, 1.0).is_automorphism

    def test_coerces_coefficient(self):
        assert Affine(2.0, 1).b == 1 + 0j

    def test_apply_in_log_polar(self):
        """Test that huge points are mapped without overflow."""
        big = as_point(1e300)
        image = Affine(1e10, 1.0).apply(big)
        assert not image.is_representable
        assert image.log_r == pytest.approx(math.log(1e300) + math.log(1e10), rel=1e-14)
        assert image.theta == pytest.approx(0.0, abs=1e-300)


class TestComposition:
    def test_applies_left_to_right(self):
        """Test that 2z then z + i sends 1 to 2 + i."""
        m = Composition((Affine(2.0), Affine(1.0, 1j)))
        assert m(1) == 2 + 1j
        assert m.apply(as_point(1)).value == pytest.approx(2 + 1j)
        assert "then" in m.describe()

    def test_rejects_empty(self):
        with pytest.raises(InvalidMapError):
            Composition(())


class TestScalingSemigroup:
    """Tests for phi_t(z) = e^t z."""

    def test_member(self):
        assert ScalingSemigroup().at(math.log(2.0)).a == pytest.approx(2.0)

    @pytest.mark.parametrize("t", [0.0, -1.0, math.inf])
    def test_rejects_bad_time(self, t):
        with pytest.raises(InvalidMapError):
            ScalingSemigroup().at(t)

    def test_trajectory(self):
        """Test that the trajectory keeps the argument and shifts log|z| by t."""
        z = as_point(1 + 1j)
        points = ScalingSemigroup().trajectory(z, [0.0, 1.0, 5000.0])
        assert points[0].value == pytest.approx(1 + 1j)
        assert points[1].modulus == pytest.approx(math.e * math.sqrt(2.0))
        assert points[2].log_r == pytest.approx(5000.0 + 0.5 * math.log(2.0))
        assert all(p.theta == pytest.approx(math.pi / 4) for p in points)

    def test_trajectory_rejects_negative_time(self):
        with pytest.raises(InvalidMapError):
            ScalingSemigroup().trajectory(as_point(1), [-1.0])


class TestIterate:
    """Tests for orbit computation."""

    def test_doubling(self, doubling):
        orbit = iterate(doubling, 1, 5)
        assert len(orbit) == 6
        assert orbit[5].value == 32
        assert orbit.steps == pytest.approx([0.5 * math.log(2.0)] * 5, rel=1e-12)
        assert orbit.slopes == [0.0] * 6

    def test_long_orbit_stays_finite(self, doubling):
        """Test that 2000 doublings are tracked in log-polar form."""
        orbit = iterate(doubling, 1, 2000)
        assert not orbit[-1].is_representable
        assert orbit[-1].log_r == pytest.approx(2000.0 * math.log(2.0), rel=1e-12)
        assert orbit.steps[-1] == pytest.approx(0.5 * math.log(2.0), rel=1e-6)

    def test_rejects_empty_range(self, doubling):
        with pytest.raises(DomainError):
            iterate(doubling, 1, 0)


class TestClassification:
    def test_hyperbolic(self, doubling):
        assert classify(doubling) is MapClass.HYPERBOLIC

    @pytest.mark.parametrize("b", [1.0, 1j, 1 + 1j])
    def test_parabolic(self, b):
        assert classify(Affine(1.0, b)) is MapClass.PARABOLIC

    def test_angular_derivative(self):
        """Test that |f(x)/x| extrapolates to a for f(z) = a z + b."""
        assert angular_derivative_estimate(Affine(3.0, 1.0)) == pytest.approx(3.0, rel=1e-9)


class TestLimits:
    """Tests for step and slope limits."""

    def test_step_slope_limits(self, doubling):
        """Test the constant step and slope of 2z from 1 + i."""
        limits = step_slope_limits(iterate(doubling, 1 + 1j, 40))
        assert limits.d_hat == pytest.approx(dist_h(1 + 1j, 2 + 2j), rel=1e-9)
        assert limits.d_hat == pytest.approx(LOG_GOLDEN, rel=1e-9)
        assert limits.phi_hat == pytest.approx(math.pi / 4, rel=1e-12)
        assert limits.tail_spread < 1e-9

    def test_short_orbit(self, doubling):
        with pytest.raises(DomainError):
            step_slope_limits(iterate(doubling, 1, 5))

    def test_zero_step(self):
        """Test that z + 1 along the real axis has steps tending to zero."""
        assert parabolic_step_kind(iterate(Affine(1.0, 1.0), 1, 200)) is StepKind.ZERO

    def test_positive_step(self):
        """Test that z + i keeps a constant step log of the golden ratio."""
        orbit = iterate(Affine(1.0, 1j), 1, 40)
        assert parabolic_step_kind(orbit) is StepKind.POSITIVE
        assert orbit.steps[-1] == pytest.approx(LOG_GOLDEN, rel=1e-12)


class TestSchwarzPick:
    PAIRS = [(1, 2 + 1j), (0.5, 3 - 2j), (10 + 10j, 0.01)]

    def test_contraction(self):
        assert schwarz_pick_check(Affine(2.0, 1.0), self.PAIRS)
        assert all(d >= -1e-10 for d in schwarz_pick_defects(Affine(1.0, 3.0), self.PAIRS))

    def test_automorphism_is_isometry(self, doubling):
        """Test that z -> 2z preserves every distance."""
        defects = schwarz_pick_defects(doubling, self.PAIRS)
        assert defects == pytest.approx([0.0] * 3, abs=1e-12)


class TestFirstStrictIncrease:
    @pytest.mark.parametrize(
        ("values", "expected"),
        [
            ([3.0, 2.0, 1.0, 2.0, 3.0], 2),
            ([1.0, 2.0, 2.0], None),
            ([1.0, 2.0, 3.0], 0),
            ([1.0], None),
            ([2.0, 1.0], None),
        ],
    )
    def test_cases(self, values, expected):
        assert first_strict_increase(values) == expected


class TestOrbitChecks:
    """Tests for the imaginary-part and Euclidean distance checks."""

    def test_vertical_translation(self):
        """Test that z + i from 1 climbs at rate 1 from the start."""
        check = im_monotonicity_check(Affine(1.0, 1j), 1, 40)
        assert check.b_hat == 1.0
        assert check.first_increase == 0
        assert not check.zero_step

    def test_horizontal_translation(self):
        """Test that z + 1 from 1 + i never moves vertically."""
        check = im_monotonicity_check(Affine(1.0, 1.0), 1 + 1j, 40)
        assert check.b_hat == 0.0
        assert check.first_increase is None
        assert check.zero_step

    def test_distance_growth(self, doubling):
        """Test that |2^n - 10| increases strictly from n = 3."""
        assert distance_growth_check(doubling, 1, 10 + 0j, n_max=10) == 3

    def test_distance_growth_too_large(self, doubling):
        with pytest.raises(DomainError):
            distance_growth_check(doubling, 1, 0j, n_max=2000)
