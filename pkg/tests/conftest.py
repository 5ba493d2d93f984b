"""Shared pytest fixtures for tests."""

import os

import pytest

# Set environment variables BEFORE importing any hyproj modules
# that might trigger settings initialization
os.environ["HYPROJ_SEED"] = "0"
os.environ["HYPROJ_LOG_LEVEL"] = "WARNING"

from hyproj.config import get_settings  # noqa: E402
from hyproj.core.curves import example_curve, horizontal_ray, radial_ray  # noqa: E402
from hyproj.core.dynamics import Affine  # noqa: E402
from hyproj.core.projection import ProjectionOptions  # noqa: E402

get_settings.cache_clear()


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path, monkeypatch):
    """Fresh settings per test, writing artifacts under a temporary directory."""
    monkeypatch.setenv("HYPROJ_OUTPUT_DIR", str(tmp_path / "results"))
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def doubling():
    """The hyperbolic map z -> 2z."""
    return Affine(2.0)


@pytest.fixture
def real_ray():
    """The geodesic ray [1, +inf)."""
    return radial_ray(0.0, 1.0)


@pytest.fixture
def steep_ray():
    """The ray of slope pi/3 starting at e^{i pi/3}."""
    return radial_ray(1.0471975511965976, 1.0)


@pytest.fixture
def horizontal():
    """The horizontal geodesic ray starting at 1 + i."""
    return horizontal_ray(complex(1.0, 1.0))


@pytest.fixture
def two_circles():
    return example_curve("ex33")


@pytest.fixture
def opts():
    return ProjectionOptions()
