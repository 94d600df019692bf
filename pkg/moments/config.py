"""
Application Configuration

This module contains all configuration settings for the moments toolkit,
using Pydantic Settings for environment variable management and validation.
"""

from functools import lru_cache
from pathlib import Path

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Load .env file from project root
project_root = Path(__file__).parent.parent
env_file_path = project_root / ".env"

if env_file_path.exists():
    load_dotenv(env_file_path)


class Settings(BaseSettings):
    """
    Numerical defaults and server settings with environment variable support.

    Every operation accepts its tolerances and orders as keyword arguments;
    these values are only used when a caller leaves them out.

    Environment variables (prefix ``MOMENTS_``) can override default values:
    - MOMENTS_DEFAULT_ORDER: truncation order of newly built families
    - MOMENTS_POSITIVITY_TOL: relative eigenvalue tolerance of the PSD test
    - MOMENTS_SERIES_TERMS: default number of terms for series transforms
    - MOMENTS_LOG_LEVEL: logging level
    """

    model_config = SettingsConfigDict(
        env_prefix="MOMENTS_",
        env_file=str(env_file_path) if env_file_path.exists() else None,
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Polynomial families
    default_order: int = Field(
        default=32,
        description="Truncation order N of a family when none is given",
        ge=0,
        le=256,
    )

    max_order: int = Field(
        default=256,
        description="Hard cap on the truncation order of any family",
        ge=1,
        le=256,
    )

    # Positivity and rank detection
    positivity_tol: float = Field(
        default=1e-10,
        description="Relative eigenvalue tolerance of the floating PSD test",
        gt=0,
        lt=1,
    )

    pivot_rtol: float = Field(
        default=1e-12,
        description="Relative pivot threshold for Hankel rank detection",
        gt=0,
        lt=1,
    )

    growth_tail: int = Field(
        default=5,
        description="Window of the strictly-increasing tail used to flag unbounded growth",
        ge=2,
    )

    # Series transforms
    series_terms: int = Field(
        default=64,
        description="Default number of terms of a series evaluation",
        ge=1,
    )

    series_rtol: float = Field(
        default=1e-16,
        description="Stop a series once the running term drops below this times the partial sum",
        gt=0,
    )

    tail_mass: float = Field(
        default=1e-15,
        description="Neglected tail mass of truncated Poisson measures",
        gt=0,
        lt=1,
    )

    # Application Configuration
    debug: bool = Field(
        default=False,
        description="Expose exception details in HTTP error responses",
    )

    log_level: str = Field(
        default="INFO",
        description="Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)",
    )

    # Server Configuration
    host: str = Field(
        default="127.0.0.1",
        description="Server host address",
    )

    port: int = Field(
        default=8000,
        description="Server port number",
        ge=1,
        le=65535,
    )

    # Application Metadata
    app_name: str = Field(
        default="Sheffer Moments",
        description="Application name for documentation",
    )

    app_version: str = Field(
        default="0.1.0",
        description="Application version",
    )


@lru_cache()
def get_settings() -> Settings:
    """
    Get application settings with caching.

    Returns:
        Settings: Cached application settings instance
    """
    return Settings()
