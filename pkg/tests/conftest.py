"""
Test Configuration and Fixtures

This module provides shared fixtures and configuration for all tests:
- small exact families and functionals used across the unit tests
- a service instance and an HTTP test client for the integration tests
- a pinned environment so settings never leak in from the host
"""

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings as hypothesis_settings

from moments.config import get_settings
from moments.models.functional import MomentFunctional
from moments.services.family_service import family_monomial, family_newton
from moments.services.moment_service import MomentService

hypothesis_settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
hypothesis_settings.load_profile("default")


@pytest.fixture
def monomial_family():
    """Monomials x^n up to order 12."""
    return family_monomial(12)


@pytest.fixture
def newton_family():
    """Falling factorials (x)_n up to order 12."""
    return family_newton(12)


@pytest.fixture
def symmetric_functional():
    """
    Power moments of ½δ_{-1} + ½δ_{+1}: (1, 0, 1, 0, 1).
    """
    return MomentFunctional([Fraction(v) for v in (1, 0, 1, 0, 1)])


@pytest.fixture
def service():
    """A MomentService bound to the test settings."""
    return MomentService(get_settings())


@pytest.fixture
def client():
    """
    HTTP test client for the FastAPI application.

    The application is imported lazily so the pinned environment is in
    place before the module-level settings are read.
    """
    from fastapi.testclient import TestClient

    from moments.main import create_app

    with TestClient(create_app()) as test_client:
        yield test_client


# Pytest configuration
def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line(
        "markers", "unit: Unit tests of a single model or service"
    )
    config.addinivalue_line(
        "markers", "integration: Tests through the CLI or the HTTP API"
    )
    config.addinivalue_line(
        "markers", "slow: Tests that take longer to run"
    )


# Test environment setup
@pytest.fixture(autouse=True)
def setup_test_env(monkeypatch):
    """
    Automatically set up test environment variables.

    This fixture runs automatically for all tests, pins the numerical
    defaults and clears the cached settings before and after each test.
    """
    monkeypatch.setenv("MOMENTS_LOG_LEVEL", "WARNING")
    monkeypatch.setenv("MOMENTS_DEBUG", "false")
    monkeypatch.setenv("MOMENTS_DEFAULT_ORDER", "32")
    monkeypatch.setenv("MOMENTS_POSITIVITY_TOL", "1e-10")
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
