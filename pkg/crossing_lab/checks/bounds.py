"""Crossing-number lower bounds and the even-cycle edge cap."""

from __future__ import annotations

from collections.abc import Sequence

from ..algorithms.bounds import (
    corollary_c2k_lb,
    crossing_lemma_lb,
    euler_lb,
    girth_lb,
    theorem2_constants,
    theorem2_lb,
)
from ..algorithms.generators import bs_check, girth, has_cycle_of_length
from ..core.registry import (
    CheckContext,
    CheckMetadata,
    CheckOutcome,
    CheckRegistry,
    ParameterSpec,
    registry,
)
from ..io.corpus import CorpusEntry

__all__ = ["register_bound_checks"]

_BOUND_METADATA = {
    "bs": CheckMetadata(
        name="bs",
        label="Even-cycle edge cap",
        module="generators",
        parameters=(ParameterSpec("cycle_k", "list[int]", [2, 3], "Cycle parameters k"),),
        description="Graphs without a cycle of length 2k have at most 100 k n^(1+1/k) edges.",
        tags=("extremal",),
    ),
    "bounds": CheckMetadata(
        name="bounds",
        label="Crossing lower bounds",
        module="bounds",
        parameters=(
            ParameterSpec("A", "float", 0.5, "Density constant"),
            ParameterSpec("alpha", "float", 1.0, "Density exponent"),
            ParameterSpec("cycle_k", "list[int]", [2, 3], "Cycle parameters k"),
        ),
        description="Every applicable closed-form lower bound stays below the exact cr.",
        requires_exact=("crossing_number",),
        tags=("inequality", "crossing"),
    ),
}


def _bs(entry: CorpusEntry, context: CheckContext) -> Sequence[CheckOutcome]:
    graph = entry.graph
    cap = context.limits.cycle_search_cap
    outcomes = []
    for k in context.params["cycle_k"]:
        name = f"bs[k={k}]"
        if graph.n < 1:
            outcomes.append(CheckOutcome.skip(name, "empty graph"))
        elif graph.n > cap:
            outcomes.append(CheckOutcome.skip(name, f"n={graph.n} above cycle search cap {cap}"))
        else:
            report = bs_check(graph, k, cap=cap)
            edges = float(report.edge_count)
            outcomes.append(CheckOutcome.compare(name, edges, report.edge_bound, report.holds))
    return outcomes


def _bounds(entry: CorpusEntry, context: CheckContext) -> Sequence[CheckOutcome]:
    graph = entry.graph
    n, e = graph.n, graph.e
    if n < 3:
        return [CheckOutcome.skip("bounds", "needs at least 3 vertices")]
    cr = context.crossing_number(graph)
    if cr is None:
        return [CheckOutcome.skip("bounds", "exact crossing number outside the search regime")]

    outcomes = [
        CheckOutcome.compare("bounds:euler", euler_lb(n, e).value, float(cr)),
        CheckOutcome.compare("bounds:girth", girth_lb(n, e, girth(graph)).value, float(cr)),
    ]
    lemma = crossing_lemma_lb(n, e)
    if lemma.applicable:
        outcomes.append(CheckOutcome.compare("bounds:crossing_lemma", lemma.value, float(cr)))
    else:
        outcomes.append(CheckOutcome.skip("bounds:crossing_lemma", f"needs {lemma.hypothesis}"))

    density = theorem2_lb(n, e, theorem2_constants(context.params["A"], context.params["alpha"]))
    if density.applicable:
        outcomes.append(CheckOutcome.compare("bounds:density", density.value, float(cr)))
    else:
        outcomes.append(CheckOutcome.skip("bounds:density", f"needs {density.hypothesis}"))

    for k in context.params["cycle_k"]:
        name = f"bounds:c2k[k={k}]"
        if n > context.limits.cycle_search_cap:
            outcomes.append(CheckOutcome.skip(name, "above cycle search cap"))
            continue
        if has_cycle_of_length(graph, 2 * k, cap=context.limits.cycle_search_cap):
            outcomes.append(CheckOutcome.skip(name, f"graph contains a cycle of length {2 * k}"))
            continue
        bound = corollary_c2k_lb(n, e, k)
        if bound.applicable:
            outcomes.append(CheckOutcome.compare(name, bound.value, float(cr)))
        else:
            outcomes.append(CheckOutcome.skip(name, f"needs {bound.hypothesis}"))
    return outcomes


def register_bound_checks(check_registry: CheckRegistry | None = None) -> None:
    target = check_registry or registry
    target.register(
        "bs",
        _bs,
        description="Even-cycle edge cap",
        metadata=_BOUND_METADATA["bs"],
    )
    target.register(
        "bounds",
        _bounds,
        description="Closed-form crossing lower bounds",
        metadata=_BOUND_METADATA["bounds"],
    )
