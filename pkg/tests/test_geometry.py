"""Tests for the half-plane and disc metrics."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyproj.core.errors import DomainError, InvalidPointError
from hyproj.core.geometry import (
    HALF_PI,
    Angle,
    DiscPoint,
    HalfPlanePoint,
    cayley_to_disc,
    cayley_to_halfplane,
    cosh_dist,
    dist_angles,
    dist_d,
    dist_d_direct,
    dist_h,
    dist_h_logpolar,
    hyperbolic_circle_euclid,
    in_pseudo_disc,
    in_pseudo_disc_quadratic,
    normalize_to_one,
    one_minus_rho_sq,
    project_to_ray,
    rho_h,
    sector_halfwidth,
)


@st.composite
def half_plane_points(draw):
    """Points with |z| in [1e-3, 1e6] and arg in (-1.5, 1.5)."""
    exponent = draw(st.floats(min_value=-3.0, max_value=6.0))
    arg = draw(st.floats(min_value=-1.5, max_value=1.5))
    return (10.0**exponent) * complex(math.cos(arg), math.sin(arg))


class TestHalfPlanePoint:
    """Tests for point construction."""

    def test_from_complex_keeps_cartesian(self):
        """Test that ordinary points keep their exact Cartesian value."""
        p = HalfPlanePoint.from_complex(3 + 4j)
        assert p.cartesian == 3 + 4j
        assert p.modulus == 5.0
        assert p.theta == pytest.approx(math.atan2(4, 3))

    @pytest.mark.parametrize("z", [0j, -1 + 0j, 2j, complex(math.nan, 1.0)])
    def test_rejects_points_outside_h(self, z):
        """Test that points with Re z <= 0 or NaN are rejected."""
        with pytest.raises(InvalidPointError):
            HalfPlanePoint.from_complex(z)

    def test_from_polar_beyond_float_range(self):
        """Test that a point of modulus e^5000 lives in log-polar form only."""
        p = HalfPlanePoint.from_polar(5000.0, 0.3)
        assert not p.is_representable
        assert p.modulus == math.inf

    def test_from_polar_rejects_boundary_argument(self):
        """Test that arg = pi/2 is not a point of H."""
        with pytest.raises(InvalidPointError):
            HalfPlanePoint.from_polar(0.0, HALF_PI)


class TestAngle:
    def test_non_tangential_range(self):
        """Test that plain angles must lie strictly inside (-pi/2, pi/2)."""
        with pytest.raises(DomainError):
            Angle(HALF_PI)

    def test_tangential_marker(self):
        """Test the tangential markers sit exactly on +-pi/2."""
        assert Angle.tangential_marker(-1).theta == -HALF_PI
        assert Angle.tangential_marker(1).tangential

    def test_dist_angles_rejects_markers(self):
        """Test that dist_angles refuses tangential markers."""
        with pytest.raises(DomainError):
            dist_angles(Angle.tangential_marker(1), 0.0)


class TestMetric:
    """Closed-form values of the metric."""

    def test_real_axis_distance(self):
        """Test d_H(1, x) = log(x) / 2 on the real axis."""
        assert dist_h(1, 4) == pytest.approx(math.log(2.0), rel=1e-14)
        assert dist_h(1, 8) == pytest.approx(1.5 * math.log(2.0), rel=1e-14)

    def test_distance_to_self(self):
        """Test that a point is at distance zero from itself."""
        assert dist_h(2 + 3j, 2 + 3j) == 0.0

    def test_rho_values(self):
        """Test rho_H on two known pairs."""
        assert rho_h(2, 3) == pytest.approx(0.2, abs=1e-15)
        assert rho_h(2, complex(math.sqrt(5.0), 1.0)) == pytest.approx(
            1.0 / (math.sqrt(5.0) + 2.0), abs=1e-12
        )

    def test_near_boundary_branch(self):
        """Test that rho close to 1 keeps full relative accuracy."""
        x = 1e12
        assert dist_h(1, x) == pytest.approx(0.5 * math.log(x), rel=1e-14)
        assert one_minus_rho_sq(1, x) == pytest.approx(4.0 * x / (1.0 + x) ** 2, rel=1e-14)

    def test_logpolar_far_apart(self):
        """Test the log-polar formula for moduli e^0 and e^10000."""
        assert dist_h_logpolar(0.0, 0.0, 10_000.0, 0.0) == pytest.approx(5_000.0, rel=1e-14)

    def test_dist_h_falls_back_to_logpolar(self):
        """Test that dist_h accepts points without a Cartesian value."""
        far = HalfPlanePoint.from_polar(2000.0, 0.0)
        assert dist_h(1, far) == pytest.approx(1000.0, rel=1e-14)

    def test_logpolar_matches_cartesian(self):
        """Test that both formulas agree on representable points."""
        a = HalfPlanePoint.from_complex(3 + 1j)
        b = HalfPlanePoint.from_complex(40 - 25j)
        expected = dist_h(a, b)
        assert dist_h_logpolar(a.log_r, a.theta, b.log_r, b.theta) == pytest.approx(
            expected, rel=1e-12
        )

    def test_rho_rejects_huge_points(self):
        """Test that Cartesian-only formulas refuse log-polar points."""
        with pytest.raises(DomainError):
            rho_h(1, HalfPlanePoint.from_polar(2000.0, 0.0))

    def test_dist_angles(self):
        """Test d_H(1, e^{i pi/3}) = atanh(1/sqrt 3)."""
        expected = math.atanh(1 / math.sqrt(3))
        assert dist_angles(0.0, math.pi / 3) == pytest.approx(expected, rel=1e-14)
        assert dist_angles(0.3, 0.3) == 0.0

    def test_dist_angles_matches_points(self):
        """Test dist_angles against the point formula."""
        a, b = -0.3, 0.3
        expected = dist_h(complex(math.cos(a), math.sin(a)), complex(math.cos(b), math.sin(b)))
        assert dist_angles(a, b) == pytest.approx(expected, rel=1e-13)

    def test_project_to_ray(self):
        """Test the closed-form projection onto a ray."""
        assert project_to_ray(3 + 4j, 0.0, 1.0).value == pytest.approx(5.0)
        assert project_to_ray(3 + 4j, 0.0, 10.0).value == pytest.approx(10.0)
        p = project_to_ray(2.0, math.pi / 4, 1.0)
        assert p.modulus == pytest.approx(2.0)
        assert p.theta == pytest.approx(math.pi / 4)


class TestMetricProperties:
    """Property tests of the metric axioms and identities."""

    @settings(max_examples=200, deadline=None)
    @given(half_plane_points(), half_plane_points())
    def test_symmetry(self, a, b):
        """Property: d_H is symmetric."""
        assert dist_h(a, b) == dist_h(b, a)

    @settings(max_examples=200, deadline=None)
    @given(half_plane_points(), half_plane_points(), half_plane_points())
    def test_triangle_inequality(self, a, b, c):
        """Property: d(a, c) <= d(a, b) + d(b, c)."""
        assert dist_h(a, c) <= dist_h(a, b) + dist_h(b, c) + 1e-9

    @settings(max_examples=200, deadline=None)
    @given(half_plane_points(), half_plane_points())
    def test_tanh_identity(self, a, b):
        """Property: tanh d_H = rho_H."""
        rho = rho_h(a, b)
        assert math.tanh(dist_h(a, b)) == pytest.approx(rho, rel=1e-12, abs=1e-300)

    @settings(max_examples=200, deadline=None)
    @given(half_plane_points(), half_plane_points())
    def test_cosh_identity(self, a, b):
        """Property: cosh d_H matches the closed form."""
        assert math.cosh(dist_h(a, b)) == pytest.approx(cosh_dist(a, b), rel=1e-12)

    @settings(max_examples=200, deadline=None)
    @given(
        half_plane_points(),
        half_plane_points(),
        st.floats(min_value=0.1, max_value=10.0),
        st.floats(min_value=-1.0, max_value=1.0),
    )
    def test_automorphism_invariance(self, a, b, scale, shift):
        """Property: z -> s z + i t preserves d_H."""
        moved = dist_h(scale * a + 1j * shift, scale * b + 1j * shift)
        assert moved == pytest.approx(dist_h(a, b), abs=1e-8, rel=1e-9)

    @settings(max_examples=200, deadline=None)
    @given(half_plane_points(), half_plane_points(), st.floats(min_value=0.01, max_value=0.99))
    def test_pseudo_disc_forms_agree(self, z, c, r):
        """Property: both descriptions of a pseudo-hyperbolic disc agree away from its edge."""
        rho = rho_h(z, c)
        if abs(rho - r) > 1e-9:
            assert in_pseudo_disc(z, c, r) == in_pseudo_disc_quadratic(z, c, r)


class TestSectorsAndCircles:
    def test_sector_halfwidth_symmetric(self):
        """Test that the sector about theta = 0 is symmetric with the right radius."""
        phi1, phi2 = sector_halfwidth(0.0, 0.5)
        assert phi1.theta == pytest.approx(-phi2.theta, abs=1e-14)
        assert dist_angles(0.0, phi2) == pytest.approx(0.5, abs=1e-12)

    def test_sector_halfwidth_tangential(self):
        """Test that unreachable edges become tangential markers."""
        phi1, phi2 = sector_halfwidth(0.0, 50.0)
        assert phi1.tangential and phi2.tangential
        assert phi2.theta == HALF_PI

    def test_sector_rejects_non_positive_radius(self):
        with pytest.raises(DomainError):
            sector_halfwidth(0.0, 0.0)

    def test_hyperbolic_circle(self):
        """Test that both real points of the circle sit at distance R from its centre."""
        radius = 0.25 * math.log(2.0)
        c, r = hyperbolic_circle_euclid(2.0, radius)
        assert dist_h(2, c - r) == pytest.approx(radius, rel=1e-13)
        assert dist_h(2, c + r) == pytest.approx(radius, rel=1e-13)
        assert c + r == pytest.approx(2.0 * math.sqrt(2.0), rel=1e-14)

    def test_pseudo_disc_radius_range(self):
        with pytest.raises(DomainError):
            in_pseudo_disc(1, 2, 1.0)

    def test_pseudo_disc_is_open(self):
        """Test that rho_H(3, 2) = 1/5 puts 3 on the boundary, outside the open disc."""
        assert rho_h(3, 2) == 0.2
        assert not in_pseudo_disc(3, 2, 1 / 5)
        assert in_pseudo_disc(3, 2, 0.21)


class TestDisc:
    """Tests for the unit disc model."""

    def test_cayley_centre(self):
        """Test that T(0) = 1 and T^{-1}(1) = 0."""
        assert cayley_to_halfplane(0).value == 1
        assert cayley_to_disc(1).value == 0

    def test_cayley_round_trip(self):
        """Test T^{-1}(T(p)) = p."""
        p = 0.3 - 0.4j
        assert cayley_to_disc(cayley_to_halfplane(p)).value == pytest.approx(p, abs=1e-14)

    @pytest.mark.parametrize(("a", "b"), [(0, 0.5), (0.3 + 0.2j, -0.5j), (0.9, -0.9)])
    def test_disc_distance_forms_agree(self, a, b):
        """Test that the pullback and the direct formula agree."""
        assert dist_d(a, b) == pytest.approx(dist_d_direct(a, b), rel=1e-12)

    def test_disc_point_outside(self):
        with pytest.raises(DomainError):
            DiscPoint.from_complex(1.0)

    def test_normalize_to_one(self):
        """Test that the rotation sends tau to 1."""
        p = normalize_to_one(0.5j, 1j)
        assert p.value == pytest.approx(0.5, abs=1e-15)

    def test_normalize_requires_unit_tau(self):
        with pytest.raises(DomainError):
            normalize_to_one(0.1, 2.0)
