"""Checks over the splitting construction and decomposition traces."""

from __future__ import annotations

import math
from collections.abc import Sequence
from fractions import Fraction

from ..algorithms.decomposition import (
    contract_split,
    decompose,
    split_crossing_report,
    split_high_degree,
    verify_trace,
)
from ..core.graph import GraphError
from ..core.registry import (
    CheckContext,
    CheckMetadata,
    CheckOutcome,
    CheckRegistry,
    ParameterSpec,
    registry,
)
from ..io.corpus import CorpusEntry

__all__ = ["register_decomposition_checks"]

_DECOMPOSITION_METADATA = {
    "trace": CheckMetadata(
        name="trace",
        label="Decomposition trace",
        module="decomposition",
        parameters=(
            ParameterSpec("A", "float", 0.5, "Density constant"),
            ParameterSpec("alpha", "float", 1.0, "Density exponent"),
            ParameterSpec("policy", "str", "auto", "Bisector policy"),
        ),
        description="Runs the decomposition and re-verifies every recorded invariant.",
        tags=("decomposition",),
    ),
    "split": CheckMetadata(
        name="split",
        label="Vertex splitting",
        module="decomposition",
        description="Edge count, vertex range, degree cap, group sizes and contraction.",
        tags=("decomposition", "splitting"),
    ),
}


def _trace(entry: CorpusEntry, context: CheckContext) -> Sequence[CheckOutcome]:
    graph = entry.graph
    if graph.e == 0:
        return [CheckOutcome.skip("trace", "edgeless graph")]
    trace = decompose(
        graph,
        context.params["A"],
        context.params["alpha"],
        context.params["policy"],
        limits=context.limits,
        seed=context.seed,
    )
    oracle = context.crossing_number if trace.exact_throughout else None
    verdict = verify_trace(trace, oracle)
    outcomes = []
    for check in verdict.checks:
        name = f"trace:{check.name}"
        if check.skipped:
            outcomes.append(CheckOutcome.skip(name, check.reason))
        else:
            outcomes.append(
                CheckOutcome.compare(name, float(len(check.witnesses)), 0.0, check.passed)
            )
    return outcomes


def _expected_copies(degree: int, d_bar: Fraction) -> int:
    return math.ceil(Fraction(degree) / d_bar) if degree > d_bar else 1


def _split(entry: CorpusEntry, context: CheckContext) -> Sequence[CheckOutcome]:
    graph = entry.graph
    if graph.e == 0:
        return [CheckOutcome.skip("split", "edgeless graph")]
    result = split_high_degree(graph, entry.drawing)
    split = result.split_graph
    n = graph.n
    degrees = graph.degree_sequence()
    mismatched = sum(
        1
        for v, ids in enumerate(result.groups)
        if len(ids) != _expected_copies(degrees[v], result.d_bar)
    )
    try:
        contracted = float(contract_split(result) != graph)
    except GraphError:
        contracted = 1.0
    outcomes = [
        CheckOutcome.compare("split:edges", float(abs(split.e - graph.e)), 0.0),
        CheckOutcome.compare(
            "split:vertex_range", float(result.N), float(2 * n - 1), n <= result.N < 2 * n
        ),
        CheckOutcome.compare(
            "split:degree_cap", float(split.max_degree()), float(result.degree_cap)
        ),
        CheckOutcome.compare("split:group_sizes", float(mismatched), 0.0),
        CheckOutcome.compare("split:contraction", contracted, 0.0),
    ]
    if result.split_drawing is not None:
        report = split_crossing_report(result)
        outcomes.append(
            CheckOutcome.compare(
                "split:crossings", float(report.after), float(report.before), report.holds
            )
        )
    return outcomes


def register_decomposition_checks(check_registry: CheckRegistry | None = None) -> None:
    target = check_registry or registry
    target.register(
        "trace",
        _trace,
        description="Decomposition trace verification",
        metadata=_DECOMPOSITION_METADATA["trace"],
    )
    target.register(
        "split",
        _split,
        description="Vertex splitting invariants",
        metadata=_DECOMPOSITION_METADATA["split"],
    )
