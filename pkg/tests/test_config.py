"""Tests for configuration module."""

import pytest
from pydantic import ValidationError

from hyproj.config import Settings, get_settings
from hyproj.harness import ScenarioConfig
from hyproj.harness.schemas import ToleranceConfig


def test_settings_defaults(monkeypatch):
    """Test that settings have sensible defaults."""
    monkeypatch.delenv("HYPROJ_SEED", raising=False)
    monkeypatch.delenv("HYPROJ_LOG_LEVEL", raising=False)
    monkeypatch.delenv("HYPROJ_OUTPUT_DIR", raising=False)
    monkeypatch.delenv("HYPROJ_DEFAULT_N_MAX", raising=False)
    monkeypatch.delenv("HYPROJ_COARSE_SAMPLES", raising=False)
    settings = Settings(_env_file=None)

    assert settings.seed == 0
    assert settings.log_level == "INFO"
    assert settings.default_n_max == 40
    assert settings.coarse_samples == 2000
    assert settings.output_dir.name == "results"


def test_get_settings_cached():
    """Test that get_settings returns cached instance."""
    settings1 = get_settings()
    settings2 = get_settings()

    assert settings1 is settings2


def test_environment_prefix(monkeypatch):
    """Test that HYPROJ_* variables override the defaults."""
    monkeypatch.setenv("HYPROJ_SEED", "42")
    monkeypatch.setenv("HYPROJ_LOG_LEVEL", "debug")
    get_settings.cache_clear()

    settings = get_settings()

    assert settings.seed == 42
    assert settings.log_level == "DEBUG"


def test_rejects_unknown_log_level():
    """Test that log levels are validated."""
    with pytest.raises(ValidationError):
        Settings(log_level="chatty", _env_file=None)


def test_rejects_sparse_projection_grid():
    with pytest.raises(ValidationError):
        Settings(coarse_samples=4, _env_file=None)


def test_output_dir_created(tmp_path):
    """Test that the output directory is created on first use."""
    settings = Settings(output_dir=tmp_path / "out" / "csv", _env_file=None)

    path = settings.ensure_output_dir()

    assert path.is_dir()
    assert path == tmp_path / "out" / "csv"


def test_default_n_max_feeds_scenarios(monkeypatch):
    """Test that HYPROJ_DEFAULT_N_MAX sets the default orbit range."""
    monkeypatch.setenv("HYPROJ_DEFAULT_N_MAX", "12")
    get_settings.cache_clear()

    assert ScenarioConfig().n_range == [0, 12]
    assert ScenarioConfig(n_range=[0, 5]).n_range == [0, 5]


def test_coarse_samples_feeds_projection(monkeypatch):
    """Test that HYPROJ_COARSE_SAMPLES sets the projection grid size."""
    monkeypatch.setenv("HYPROJ_COARSE_SAMPLES", "500")
    get_settings.cache_clear()

    assert ToleranceConfig().coarse_samples == 500
    assert ScenarioConfig().tolerances.projection_options().coarse_samples == 500
