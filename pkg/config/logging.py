"""Logging configuration for the SPARC toolchain.

Loguru sinks are installed per environment. All sinks write to standard
error because standard output carries answer sets, groundings and
translated programs.

- Development: colorized stderr, optional rotating file
- Production: plain structured stderr lines
- Test: warnings only, minimal format
"""

import sys

from loguru import logger

from config.settings import settings


def setup_logging(level: str | None = None) -> None:
    """Configure logging based on environment.

    Args:
        level: Override for ``settings.LOG_LEVEL`` (e.g. ``DEBUG`` for ``--verbose``)
    """
    logger.remove()
    effective_level = level or settings.LOG_LEVEL

    if settings.ENVIRONMENT == "development":
        logger.add(
            sys.stderr,
            level=effective_level,
            format=(
                "<green>{time:HH:mm:ss}</green> | "
                "<level>{level: <8}</level> | "
                "<cyan>{module}</cyan>:<cyan>{function}</cyan> | "
                "{message}"
            ),
            colorize=True,
        )
        logger.debug("Logging configured for DEVELOPMENT environment")

    elif settings.ENVIRONMENT == "production":
        logger.add(
            sys.stderr,
            level=effective_level,
            format=(
                "{time:YYYY-MM-DD HH:mm:ss.SSS} | "
                "{level: <8} | "
                "{module}:{function}:{line} | "
                "{message}"
            ),
            serialize=False,
            backtrace=True,
            diagnose=False,
        )
        logger.debug("Logging configured for PRODUCTION environment")

    elif settings.ENVIRONMENT == "test":
        logger.add(
            sys.stderr,
            level="WARNING",
            format="{level: <8} | {message}",
            colorize=False,
        )

    else:
        logger.add(
            sys.stderr,
            level="INFO",
            format="{time:HH:mm:ss} | {level: <8} | {message}",
        )
        logger.warning(f"Unknown environment: {settings.ENVIRONMENT}, using fallback logging")

    if settings.LOG_FILE:
        logger.add(
            settings.LOG_FILE,
            rotation="10 MB",
            retention=5,
            level=effective_level,
            format=(
                "{time:YYYY-MM-DD HH:mm:ss.SSS} | "
                "{level: <8} | "
                "{module}:{function}:{line} | "
                "{message}"
            ),
            enqueue=True,
        )


def get_logger():
    """Get configured logger instance.

    Returns:
        Loguru logger instance
    """
    return logger
