"""Bisection-width and degree-norm checks."""

from __future__ import annotations

from collections.abc import Sequence

from ..algorithms.bisection import jensen_check, lt_norm, pss_check, t3_counterexample_check
from ..core.registry import (
    CheckContext,
    CheckMetadata,
    CheckOutcome,
    CheckRegistry,
    ParameterSpec,
    registry,
)
from ..io.corpus import CorpusEntry

__all__ = ["register_bisection_checks"]

_BISECTION_METADATA = {
    "pss": CheckMetadata(
        name="pss",
        label="Bisection width vs crossings",
        module="bisection",
        parameters=(ParameterSpec("k_max", "int", 4, "Crossing search depth"),),
        description="b(G) <= 6.32 sqrt(cr) + 1.58 sqrt(sum d^2) with exact cr and exact b.",
        requires_exact=("crossing_number", "bisection"),
        tags=("inequality", "bisection"),
    ),
    "jensen": CheckMetadata(
        name="jensen",
        label="Degree norm ordering",
        module="bisection",
        parameters=(
            ParameterSpec("jensen_t", "list[float]", [0.5, 1.0, 1.5, 2.0], "Exponents <= 2"),
            ParameterSpec("norm_t", "list[float]", [0.5, 1.0, 1.5, 2.0, 3.0, 4.0], "Norm grid"),
        ),
        description="l_2 <= l_t for t <= 2, and l_t non-increasing in t.",
        tags=("inequality", "degrees"),
    ),
    "t3": CheckMetadata(
        name="t3",
        label="Grid counterexample for t > 2",
        module="bisection",
        parameters=(ParameterSpec("t_values", "list[float]", [2.5, 3.0, 4.0], "Exponents > 2"),),
        description="sqrt(cr) + l_t <= 4 n^(2/t) <= 12 n^(2/t-1) b(G) on grid(n).",
        requires_exact=("bisection",),
        tags=("inequality", "grid"),
    ),
}


def _pss(entry: CorpusEntry, context: CheckContext) -> Sequence[CheckOutcome]:
    graph = entry.graph
    if graph.n < 2:
        return [CheckOutcome.skip("pss", "bisection width undefined for n < 2")]
    bisection = context.exact_bisection(graph)
    if bisection is None:
        cap = context.limits.bisection_cap
        return [CheckOutcome.skip("pss", f"n={graph.n} above the exhaustive bisection cap {cap}")]
    cr = context.crossing_number(graph)
    if cr is None:
        return [CheckOutcome.skip("pss", "exact crossing number outside the search regime")]
    report = pss_check(graph, cr, bisection)
    return [CheckOutcome.compare("pss", float(report.b_value), report.rhs, report.holds)]


def _jensen(entry: CorpusEntry, context: CheckContext) -> Sequence[CheckOutcome]:
    graph = entry.graph
    l2 = lt_norm(graph, 2)
    outcomes = [
        CheckOutcome.compare(f"jensen[t={t:g}]", l2, lt_norm(graph, t), jensen_check(graph, t))
        for t in context.params["jensen_t"]
    ]
    norms = [lt_norm(graph, t) for t in sorted(context.params["norm_t"])]
    increases = sum(
        1 for low, high in zip(norms, norms[1:], strict=False) if high > low * (1 + 1e-9)
    )
    outcomes.append(CheckOutcome.compare("lt_monotone", float(increases), 0.0))
    return outcomes


def _t3(entry: CorpusEntry, context: CheckContext) -> Sequence[CheckOutcome]:
    n = entry.grid_size
    if n is None:
        return [CheckOutcome.skip("t3", "applies to grid(n) corpus entries only")]
    bisection = context.exact_bisection(entry.graph)
    if bisection is None:
        return [CheckOutcome.skip("t3", f"grid({n}) above the exhaustive bisection cap")]
    outcomes = []
    for t in context.params["t_values"]:
        report = t3_counterexample_check(n, t, bisection)
        outcomes.append(
            CheckOutcome.compare(
                f"t3[t={t:g}]", report.chain_left, report.chain_right, report.holds
            )
        )
    return outcomes


def register_bisection_checks(check_registry: CheckRegistry | None = None) -> None:
    target = check_registry or registry
    target.register(
        "pss",
        _pss,
        description="Bisection width inequality",
        metadata=_BISECTION_METADATA["pss"],
    )
    target.register(
        "jensen",
        _jensen,
        description="Degree norm ordering",
        metadata=_BISECTION_METADATA["jensen"],
    )
    target.register(
        "t3",
        _t3,
        description="Grid chain for t > 2",
        metadata=_BISECTION_METADATA["t3"],
    )
