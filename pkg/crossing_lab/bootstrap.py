"""Bootstrap helpers for the crossing-lab runtime."""

from __future__ import annotations

from pathlib import Path

from .checks import register_all_checks
from .core.configuration import LabConfiguration
from .core.logging import configure_logging

__all__ = ["bootstrap"]


def bootstrap(
    *,
    log_dir: Path | None = None,
    configuration: LabConfiguration | None = None,
    level: str | None = None,
) -> LabConfiguration:
    configuration = configuration or LabConfiguration()
    settings = configuration.logging
    if log_dir is not None:
        settings = settings.model_copy(update={"log_dir": log_dir})
    configure_logging(settings, level=level)
    register_all_checks()
    return configuration
