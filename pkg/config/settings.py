"""Application settings with validation.

Resource caps, logging and the optional external solver are configured from
environment variables prefixed with ``SPARC_`` (or a local ``.env`` file).
Command-line flags override them for a single run.
"""

import sys
from pathlib import Path
from typing import Literal

from loguru import logger
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from utils.exceptions import InvalidSettingsError


class Settings(BaseSettings):
    """Toolchain settings with validation.

    All settings are loaded from environment variables so that the caps used
    by tests, benchmarks and the CLI can be tuned without code changes.
    """

    model_config = SettingsConfigDict(
        env_prefix="SPARC_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
        env_ignore_empty=True,
    )

    # Resource caps
    ATOM_CAP: int = Field(
        default=100_000,
        ge=1,
        description="Maximum number of atoms derived while evaluating the sort definition",
    )
    CANDIDATE_CAP: int = Field(
        default=2**22,
        ge=1,
        description="Maximum number of search nodes explored by the answer-set engine",
    )
    ORACLE_LITERAL_LIMIT: int = Field(
        default=20,
        ge=1,
        le=24,
        description="Largest number of head literals the brute-force oracle enumerates",
    )

    # External DLV solver for translated programs
    SOLVER_PATH: str | None = Field(
        default=None,
        description="Path of an external DLV executable",
    )

    # Benchmark generator
    BENCH_MAX_RETRIES: int = Field(
        default=10,
        ge=1,
        le=1000,
        description="Regeneration attempts when a random graph has no connected pair",
    )

    LOG_LEVEL: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = Field(
        default="WARNING",
        description="Logging level",
    )
    LOG_FILE: str | None = Field(
        default=None,
        description="Optional rotating log file",
    )
    ENVIRONMENT: Literal["development", "production", "test"] = Field(
        default="development",
        description="Application environment",
    )

    @field_validator("SOLVER_PATH")
    @classmethod
    def validate_solver_path(cls, v: str | None) -> str | None:
        """Validate the external solver path.

        Args:
            v: Solver executable path

        Returns:
            Validated path

        Raises:
            InvalidSettingsError: If the path names a directory
        """
        if v is None:
            return v

        if Path(v).is_dir():
            raise InvalidSettingsError(f"SOLVER_PATH must name an executable, got directory: {v}")

        return v

    @field_validator("LOG_FILE")
    @classmethod
    def validate_log_file(cls, v: str | None) -> str | None:
        """Validate that the log file's directory exists.

        Args:
            v: Log file path

        Returns:
            Validated path

        Raises:
            InvalidSettingsError: If the parent directory is missing
        """
        if v is None:
            return v

        parent = Path(v).expanduser().parent
        if not parent.exists():
            raise InvalidSettingsError(f"LOG_FILE directory does not exist: {parent}")

        return v


# Global settings instance
_settings: Settings | None = None


def get_settings() -> Settings:
    """Get global settings instance (singleton pattern).

    Returns:
        Settings instance

    Raises:
        SystemExit: If the environment holds an invalid configuration
    """
    global _settings

    if _settings is None:
        try:
            _settings = Settings()
            logger.debug(
                f"Settings loaded (environment: {_settings.ENVIRONMENT}, "
                f"atom cap: {_settings.ATOM_CAP}, candidate cap: {_settings.CANDIDATE_CAP})"
            )
        except Exception as e:
            logger.critical(f"Failed to load settings: {e}")
            if hasattr(e, "errors"):
                for err in e.errors():
                    field = " -> ".join(str(loc) for loc in err.get("loc", []))
                    msg = err.get("msg", "")
                    logger.critical(f"  Config error | Field: [{field}] | {msg}")
            sys.exit(2)

    return _settings


def reset_settings() -> None:
    """Drop the cached settings so the next access re-reads the environment."""
    global _settings
    _settings = None


class SettingsProxy:
    """Lazy proxy for settings to prevent initialization on import."""

    def __getattr__(self, name):
        return getattr(get_settings(), name)


# Global settings instance (lazy)
settings: Settings = SettingsProxy()  # type: ignore
