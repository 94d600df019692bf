"""
Unit Tests for Application Settings
"""

import pytest
from pydantic import ValidationError

from moments.config import Settings, get_settings


@pytest.mark.unit
class TestSettings:
    def test_pinned_test_environment(self):
        settings = get_settings()

        assert settings.default_order == 32
        assert settings.positivity_tol == 1e-10
        assert settings.log_level == "WARNING"
        assert settings.debug is False

    def test_environment_override(self, monkeypatch):
        # Arrange
        monkeypatch.setenv("MOMENTS_SERIES_TERMS", "10")
        get_settings.cache_clear()

        # Act
        settings = get_settings()

        # Assert
        assert settings.series_terms == 10

    def test_settings_are_cached(self):
        assert get_settings() is get_settings()

    @pytest.mark.parametrize(
        "name, value",
        [
            ("MOMENTS_POSITIVITY_TOL", "2"),
            ("MOMENTS_DEFAULT_ORDER", "300"),
            ("MOMENTS_GROWTH_TAIL", "1"),
            ("MOMENTS_PORT", "0"),
        ],
    )
    def test_out_of_range_values_fail(self, monkeypatch, name, value):
        monkeypatch.setenv(name, value)

        with pytest.raises(ValidationError):
            Settings()
