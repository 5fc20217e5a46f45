"""Verification suite runner."""

from __future__ import annotations

import hashlib
import json
import threading
import time
from collections.abc import Callable, MutableMapping
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, TypeVar

from loguru import logger

from ..algorithms.bisection import Bisection, exact_bisection
from ..algorithms.crossing import SearchBudgetExceededError, exact_crossing_number
from ..algorithms.drawings import is_planar
from ..checks import register_all_checks
from ..io.corpus import CorpusEntry, resolve_source
from ..io.reports import Report, ReportRecord
from .configuration import DEFAULT_LIMITS, LabConfiguration, SearchLimits, SuiteConfig
from .graph import Graph
from .registry import CheckOutcome, CheckRegistry, registry

__all__ = [
    "InvalidConfigError",
    "OracleCache",
    "SuiteContext",
    "SuiteError",
    "SuiteRunner",
    "run_suite",
]

T = TypeVar("T")


class SuiteError(RuntimeError):
    """Raised when a suite cannot be executed."""


class InvalidConfigError(SuiteError):
    """Raised when a suite configuration names nothing runnable."""


def _signature(kind: str, graph: Graph, params: dict[str, Any]) -> str:
    payload = {
        "kind": kind,
        "n": graph.vertex_count,
        "edges": graph.edge_list(),
        "params": params,
    }
    data = json.dumps(payload, sort_keys=True).encode("utf-8")
    return hashlib.sha256(data).hexdigest()


@dataclass
class OracleCache:
    """Memoised exact oracle values keyed by graph and parameters."""

    _values: MutableMapping[str, object] = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock)
    hits: int = 0
    misses: int = 0

    def get_or_compute(
        self,
        kind: str,
        graph: Graph,
        compute: Callable[[], T],
        **params: Any,
    ) -> T:
        key = _signature(kind, graph, params)
        with self._lock:
            if key in self._values:
                self.hits += 1
                return self._values[key]  # type: ignore[return-value]
        value = compute()
        with self._lock:
            self.misses += 1
            self._values.setdefault(key, value)
        return value

    def clear(self) -> None:
        with self._lock:
            self._values.clear()
            self.hits = self.misses = 0


@dataclass
class SuiteContext:
    params: dict[str, Any]
    limits: SearchLimits = field(default_factory=SearchLimits)
    seed: int = 0
    cache: OracleCache = field(default_factory=OracleCache)
    state: dict[str, Any] = field(default_factory=dict)

    def crossing_number(self, graph: Graph) -> int | None:
        """Exact cr, or ``None`` when it lies outside the searchable regime."""

        k_max = int(self.params.get("k_max", self.limits.crossing_k_max))

        def compute() -> int | None:
            if is_planar(graph):
                return 0
            if graph.e > self.limits.crossing_edge_cap:
                return None
            try:
                return exact_crossing_number(graph, k_max, limits=self.limits).value
            except SearchBudgetExceededError as exc:
                logger.warning("Crossing search gave up on n={} e={}: {}", graph.n, graph.e, exc)
                return None

        return self.cache.get_or_compute("cr", graph, compute, k_max=k_max)

    def exact_bisection(self, graph: Graph) -> Bisection | None:
        if not 2 <= graph.vertex_count <= self.limits.bisection_cap:
            return None
        return self.cache.get_or_compute(
            "bisection", graph, lambda: exact_bisection(graph, limits=self.limits)
        )


class SuiteRunner:
    def __init__(
        self,
        *,
        check_registry: CheckRegistry | None = None,
        limits: SearchLimits | None = None,
        workers: int = 1,
        cache: OracleCache | None = None,
    ) -> None:
        self.registry = check_registry or registry
        self.limits = limits or DEFAULT_LIMITS
        self.workers = max(1, workers)
        self.cache = cache or OracleCache()

    def run(self, config: SuiteConfig, *, base_dir: Path | None = None) -> Report:
        if not config.corpus:
            raise InvalidConfigError("Suite corpus is empty")
        unknown = [name for name in config.checks if name not in self.registry]
        if unknown:
            raise InvalidConfigError(
                f"Unknown checks {unknown}; registered: {self.registry.names()}"
            )
        if not config.checks:
            raise InvalidConfigError("Suite names no checks")

        context = SuiteContext(
            params=config.params.model_dump(),
            limits=self.limits,
            seed=config.seed,
            cache=self.cache,
        )

        def evaluate(spec: str) -> list[ReportRecord]:
            return self._run_source(spec, config, context, base_dir)

        if self.workers > 1 and len(config.corpus) > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as executor:
                batches = list(executor.map(evaluate, config.corpus))
        else:
            batches = [evaluate(spec) for spec in config.corpus]

        report = Report.from_records(record for batch in batches for record in batch)
        logger.info(
            "Suite finished: {} records, {} passed, {} failed, {} skipped",
            report.summary.total,
            report.summary.passed,
            report.summary.failed,
            report.summary.skipped,
        )
        return report

    def _run_source(
        self,
        spec: str,
        config: SuiteConfig,
        context: SuiteContext,
        base_dir: Path | None,
    ) -> list[ReportRecord]:
        try:
            entry = resolve_source(spec, base_dir=base_dir)
        except Exception as exc:
            logger.warning("Corpus entry '{}' could not be resolved: {}", spec, exc)
            return [
                ReportRecord(
                    graph=spec,
                    n=0,
                    e=0,
                    check="corpus",
                    holds=False,
                    status="failed",
                    reason=f"{type(exc).__name__}: {exc}",
                )
            ]

        records: list[ReportRecord] = []
        for name in config.checks:
            handler = self.registry.get(name).handler
            started = time.perf_counter_ns()
            try:
                outcomes = list(handler(entry, context))
            except Exception as exc:
                logger.warning("Check '{}' failed on {}: {}", name, entry.name, exc)
                records.append(_failure(entry, name, exc))
                continue
            micros = (time.perf_counter_ns() - started) // 1000 if config.record_timings else None
            records.extend(_record(entry, outcome, micros) for outcome in outcomes)
        return records


def _failure(entry: CorpusEntry, check: str, exc: Exception) -> ReportRecord:
    return ReportRecord(
        graph=entry.name,
        n=entry.graph.n,
        e=entry.graph.e,
        check=check,
        holds=False,
        status="failed",
        reason=f"{type(exc).__name__}: {exc}",
    )


def _record(entry: CorpusEntry, outcome: CheckOutcome, micros: int | None) -> ReportRecord:
    if outcome.skipped:
        status = "skipped"
    else:
        status = "passed" if outcome.holds else "failed"
    return ReportRecord(
        graph=entry.name,
        n=entry.graph.n,
        e=entry.graph.e,
        check=outcome.check,
        lhs=outcome.lhs,
        rhs=outcome.rhs,
        holds=outcome.holds,
        micros=micros,
        status=status,
        reason=outcome.reason,
    )


def run_suite(
    config: SuiteConfig,
    *,
    configuration: LabConfiguration | None = None,
    check_registry: CheckRegistry | None = None,
    base_dir: Path | None = None,
    workers: int | None = None,
) -> Report:
    """Run ``config`` with checks from ``check_registry`` (all built-in checks by default)."""

    configuration = configuration or LabConfiguration()
    target = register_all_checks(check_registry)
    runner = SuiteRunner(
        check_registry=target,
        limits=configuration.limits,
        workers=workers if workers is not None else configuration.performance.workers,
    )
    return runner.run(config, base_dir=base_dir)
