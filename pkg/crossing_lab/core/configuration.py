"""Configuration management utilities."""

from __future__ import annotations

from pathlib import Path
from typing import Any, Literal, TypeVar

from pydantic import BaseModel, Field, ValidationError

__all__ = [
    "ConfigurationError",
    "LabConfiguration",
    "LoggingSettings",
    "RuntimePerformance",
    "DEFAULT_LIMITS",
    "SearchLimits",
    "SuiteConfig",
    "SuiteParams",
    "load_suite_config",
    "load_configuration",
    "save_configuration",
]


DocumentT = TypeVar("DocumentT", bound=BaseModel)


class ConfigurationError(RuntimeError):
    """Raised when configuration files cannot be parsed."""


class SearchLimits(BaseModel):
    """Caps for the exhaustive searches."""

    bisection_cap: int = Field(default=25, ge=2, le=30)
    bisection_chunk_bits: int = Field(default=18, ge=4, le=24)
    heuristic_restarts: int = Field(default=8, ge=1, le=256)
    cycle_search_cap: int = Field(default=30, ge=3, le=64)
    crossing_k_max: int = Field(default=4, ge=0, le=4)
    crossing_edge_cap: int = Field(default=24, ge=1)
    planarity_test_budget: int = Field(default=5_000_000, ge=1)
    max_levels: int = Field(default=512, ge=1)

    model_config = {"frozen": True}


class RuntimePerformance(BaseModel):
    worker_concurrency: int = Field(default=0, ge=0, le=64)

    @property
    def workers(self) -> int:
        return max(1, self.worker_concurrency)


class LoggingSettings(BaseModel):
    level: str = Field(default="INFO")
    log_dir: Path | None = None


class LabConfiguration(BaseModel):
    """Top level configuration document."""

    limits: SearchLimits = Field(default_factory=SearchLimits)
    performance: RuntimePerformance = Field(default_factory=RuntimePerformance)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)
    metadata: dict[str, Any] = Field(default_factory=dict)


DEFAULT_LIMITS = SearchLimits()


def _load_document(path: Path, model: type[DocumentT], what: str) -> DocumentT:
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError as exc:
        raise ConfigurationError(f"{what} not found: {path}") from exc
    except (OSError, UnicodeDecodeError) as exc:
        raise ConfigurationError(f"Cannot read {what.lower()} {path}: {exc}") from exc
    try:
        return model.model_validate_json(text)
    except ValidationError as exc:
        raise ConfigurationError(f"Invalid {what.lower()} {path}: {exc}") from exc


def load_configuration(path: Path) -> LabConfiguration:
    return _load_document(path, LabConfiguration, "Configuration")


def save_configuration(config: LabConfiguration, path: Path) -> None:
    """Persist configuration to disk."""

    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(config.model_dump_json(indent=2), encoding="utf-8")


class SuiteParams(BaseModel):
    """Inputs shared by the suite checks."""

    A: float = Field(default=0.5, gt=0)
    alpha: float = Field(default=1.0, gt=0)
    k_max: int = Field(default=4, ge=0, le=4)
    t_values: list[float] = Field(default_factory=lambda: [2.5, 3.0, 4.0])
    jensen_t: list[float] = Field(default_factory=lambda: [0.5, 1.0, 1.5, 2.0])
    norm_t: list[float] = Field(default_factory=lambda: [0.5, 1.0, 1.5, 2.0, 3.0, 4.0])
    cycle_k: list[int] = Field(default_factory=lambda: [2, 3])
    policy: Literal["exact", "auto"] = "auto"


class SuiteConfig(BaseModel):
    """A verification run: which checks to evaluate over which graphs."""

    corpus: list[str] = Field(default_factory=list)
    checks: list[str] = Field(default_factory=lambda: ["pss"])
    params: SuiteParams = Field(default_factory=SuiteParams)
    output_format: Literal["json", "csv"] = "json"
    seed: int = 0
    record_timings: bool = False


def load_suite_config(path: Path) -> SuiteConfig:
    return _load_document(path, SuiteConfig, "Suite configuration")
