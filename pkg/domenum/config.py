"""Configuration settings for domenum.

Uses pydantic-settings for environment variable management.
Every setting has a default, so nothing is required from the environment;
values can be overridden with DOMENUM_* variables or a .env file.
"""

import logging
import sys
from functools import lru_cache

from pydantic import Field, ValidationError, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)

# Descriptions used when reporting an invalid value
SETTING_DESCRIPTIONS = {
    "ORACLE_MAX_VERTICES": "Largest vertex count the brute-force oracles accept (1..24)",
    "WITNESS_MAX_VERTICES": "Largest graph searched for a forbidden-subgraph witness",
    "DEFAULT_LIMIT": "Default maximum number of emitted sets (empty for unlimited)",
    "CHECK_UNIQUE_EMISSIONS": "Reject duplicate sets on every stream (true/false)",
    "LOG_LEVEL": "Logging level name (DEBUG, INFO, WARNING, ERROR)",
}


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="DOMENUM_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )

    # Application Settings
    APP_NAME: str = "domenum"
    APP_VERSION: str = "1.0.0"
    LOG_LEVEL: str = "WARNING"

    # Oracle Settings
    ORACLE_MAX_VERTICES: int = Field(default=16, ge=1, le=24)

    # Recognition Settings
    WITNESS_MAX_VERTICES: int = Field(default=60, ge=0)

    # Stream Settings
    DEFAULT_LIMIT: int | None = Field(default=None, ge=0)
    CHECK_UNIQUE_EMISSIONS: bool = False

    @field_validator("LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate that LOG_LEVEL names a standard logging level."""
        level = v.upper()
        level_names = (
            logging.getLevelNamesMapping()
            if hasattr(logging, "getLevelNamesMapping")
            else dict(logging._nameToLevel)  # Python 3.10 equivalent
        )
        if level not in level_names:
            raise ValueError(f"unknown logging level {v!r}")
        return level


def _log_configuration_error(errors: list[dict]) -> None:
    """Log a helpful error message for configuration errors."""
    logger.error("=" * 60)
    logger.error("CONFIGURATION ERROR: invalid DOMENUM_* environment values")
    logger.error("=" * 60)

    for error in errors:
        field = error["loc"][0] if error["loc"] else "unknown"
        msg = error.get("msg", "")
        desc = SETTING_DESCRIPTIONS.get(str(field), "Configuration value")
        logger.error(f"  • DOMENUM_{field}: {msg}")
        logger.error(f"    {desc}")

    logger.error("Fix the variable or remove it to fall back to the default.")
    logger.error("=" * 60)


def validate_settings() -> Settings:
    """Validate and load settings with helpful error messages.

    Returns:
        Settings instance if validation succeeds.

    Raises:
        SystemExit: If validation fails, exits with code 1.
    """
    try:
        return Settings()
    except ValidationError as e:
        _log_configuration_error(e.errors())
        sys.exit(1)


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance with validation."""
    return validate_settings()
