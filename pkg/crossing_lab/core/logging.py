"""Logging setup for crossing-lab."""

from __future__ import annotations

import sys
from typing import TextIO

from loguru import logger

from .configuration import LoggingSettings

__all__ = ["LOG_FILE_NAME", "configure_logging"]

LOG_FILE_NAME = "crossing-lab.log"


def configure_logging(
    settings: LoggingSettings,
    *,
    level: str | None = None,
    sink: TextIO | None = None,
) -> None:
    """Route logs to stderr, keeping stdout for JSON results, plus an optional rotating file.

    ``level`` overrides ``settings.level`` (the CLI ``--log-level`` flag).
    """

    effective = (level or settings.level).upper()
    logger.remove()
    logger.add(sink or sys.stderr, level=effective, enqueue=True)
    if settings.log_dir is not None:
        settings.log_dir.mkdir(parents=True, exist_ok=True)
        logger.add(
            settings.log_dir / LOG_FILE_NAME,
            level=effective,
            rotation="10 MB",
            retention="10 days",
            enqueue=True,
            encoding="utf-8",
        )
    logger.debug("Logging configured at {} (file sink: {})", effective, settings.log_dir)
