from __future__ import annotations

import json
from pathlib import Path

import pytest
from crossing_lab.core.configuration import (
    ConfigurationError,
    LabConfiguration,
    RuntimePerformance,
    SearchLimits,
    load_configuration,
    load_suite_config,
    save_configuration,
)
from pydantic import ValidationError


def build_config() -> LabConfiguration:
    return LabConfiguration(
        limits=SearchLimits(bisection_cap=20, planarity_test_budget=1000),
        performance=RuntimePerformance(worker_concurrency=2),
        metadata={"version": "test"},
    )


def test_configuration_roundtrip(tmp_path: Path) -> None:
    config = build_config()
    target = tmp_path / "config.json"
    save_configuration(config, target)
    loaded = load_configuration(target)
    assert loaded.limits == config.limits
    assert loaded.performance.workers == 2
    assert loaded.metadata["version"] == "test"


def test_default_workers() -> None:
    assert LabConfiguration().performance.workers == 1


def test_configuration_invalid_json(tmp_path: Path) -> None:
    target = tmp_path / "broken.json"
    target.write_text("not json", encoding="utf-8")
    with pytest.raises(ConfigurationError):
        load_configuration(target)


def test_configuration_missing_file(tmp_path: Path) -> None:
    with pytest.raises(ConfigurationError):
        load_configuration(tmp_path / "missing.json")


def test_configuration_out_of_range(tmp_path: Path) -> None:
    with pytest.raises(ValidationError):
        SearchLimits(bisection_cap=40)
    target = tmp_path / "limits.json"
    target.write_text(json.dumps({"limits": {"crossing_k_max": 9}}), encoding="utf-8")
    with pytest.raises(ConfigurationError):
        load_configuration(target)


def test_suite_config(tmp_path: Path) -> None:
    target = tmp_path / "suite.json"
    target.write_text(
        json.dumps({"corpus": ["K5"], "checks": ["pss", "t3"], "params": {"A": 1.0}}),
        encoding="utf-8",
    )
    config = load_suite_config(target)
    assert config.corpus == ["K5"]
    assert config.params.A == 1.0
    assert config.params.t_values == [2.5, 3.0, 4.0]
    assert config.output_format == "json"


def test_suite_config_rejects_unknown_format(tmp_path: Path) -> None:
    target = tmp_path / "suite.json"
    target.write_text(json.dumps({"corpus": ["K5"], "output_format": "xml"}), encoding="utf-8")
    with pytest.raises(ConfigurationError):
        load_suite_config(target)
    with pytest.raises(ConfigurationError):
        load_suite_config(tmp_path / "absent.json")


def test_undecodable_configuration(tmp_path: Path) -> None:
    target = tmp_path / "config.json"
    target.write_bytes(b'{"limits": "\xff"}')
    with pytest.raises(ConfigurationError):
        load_configuration(target)
