"""Vertex splitting and the level-by-level decomposition of the split graph."""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from functools import partial
from itertools import combinations
from typing import Any

from loguru import logger

from ..core.configuration import DEFAULT_LIMITS, SearchLimits
from ..core.errors import InvalidParameterError, TooLargeError
from ..core.graph import Edge, Graph, GraphError, VertexSet
from ..data.structures import Drawing
from .bisection import Bisection, Exactness, exact_bisection, heuristic_bisection
from .bounds import BoundParams, theorem2_constants
from .drawings import DegenerateDrawingError, angular_order, count_crossings

__all__ = [
    "BisectionRecord",
    "BisectorCapExceededError",
    "BisectorPolicy",
    "ComponentSummary",
    "CrossingOracle",
    "DecompositionTrace",
    "EmptyGraphError",
    "LevelRecord",
    "SplitCrossingReport",
    "SplitResult",
    "TraceCheck",
    "TraceVerdict",
    "contract_split",
    "decompose",
    "level_is_open",
    "log_threshold",
    "split_crossing_report",
    "split_high_degree",
    "stopping_level",
    "stopping_level_by_iteration",
    "verify_trace",
]

LOG_TWO_THIRDS = math.log(2 / 3)

CrossingOracle = Callable[[Graph], int | None]


class EmptyGraphError(ValueError):
    """Raised when an operation needs at least one edge."""


class BisectorCapExceededError(RuntimeError):
    def __init__(self, level: int, component: int, size: int, cap: int) -> None:
        super().__init__(
            f"Component {component} at level {level} has {size} vertices, "
            f"above the exhaustive bisection cap {cap}"
        )
        self.level = level
        self.component = component
        self.size = size
        self.cap = cap


class BisectorPolicy(StrEnum):
    EXACT = "exact"
    AUTO = "auto"


# Splitting -----------------------------------------------------------------


@dataclass(frozen=True)
class SplitResult:
    """``original`` with every vertex of degree above ``d_bar`` split by its neighbour order.

    ``groups[v]`` holds the split ids replacing ``v``; ``assignment[x]`` the
    original neighbours received by split vertex ``x``; ``owner[x]`` its original vertex.
    """

    original: Graph
    split_graph: Graph
    d_bar: Fraction
    groups: tuple[tuple[int, ...], ...]
    assignment: tuple[tuple[int, ...], ...]
    owner: tuple[int, ...]
    neighbour_order: str = "id"
    drawing: Drawing | None = field(default=None, compare=False)
    split_drawing: Drawing | None = field(default=None, compare=False)

    @property
    def N(self) -> int:
        return self.split_graph.vertex_count

    @property
    def degree_cap(self) -> int:
        return math.ceil(self.d_bar)

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.original.vertex_count,
            "e": self.original.e,
            "N": self.N,
            "d_bar": str(self.d_bar),
            "neighbour_order": self.neighbour_order,
            "groups": [list(group) for group in self.groups],
            "assignment": [list(items) for items in self.assignment],
            "edges": [list(edge) for edge in self.original.edge_list()],
            "split_edges": [list(edge) for edge in self.split_graph.edge_list()],
        }


def _group_index(position: int, d_bar: Fraction) -> int:
    """Group ``i`` (1-based) with ``d_bar (i - 1) < position <= d_bar i``."""

    return math.ceil(Fraction(position) / d_bar)


def _ring_scale(drawing: Drawing) -> Fraction:
    points = drawing.coordinates
    gaps = [
        max(abs(a[0] - b[0]), abs(a[1] - b[1])) for a, b in combinations(points, 2) if a != b
    ]
    extent = max(gaps, default=Fraction(1))
    return min(gaps, default=Fraction(1)) / (1000 * extent)


def split_high_degree(graph: Graph, drawing: Drawing | None = None) -> SplitResult:
    """Split every vertex whose degree exceeds ``d_bar = 2e/n``.

    Neighbours are taken in ascending id order, or clockwise when ``drawing`` is
    given; position ``j`` goes to copy ``ceil(j / d_bar)``. Copies get
    consecutive ids in vertex order and keep one edge per original edge.
    """

    if graph.e == 0:
        raise EmptyGraphError("Splitting needs at least one edge")
    if drawing is not None and drawing.host != graph:
        raise InvalidParameterError("drawing does not belong to the graph being split")
    d_bar = Fraction(2 * graph.e, graph.vertex_count)

    groups: list[tuple[int, ...]] = []
    assignment: list[tuple[int, ...]] = []
    owner: list[int] = []
    holder: dict[tuple[int, int], int] = {}
    next_id = 0
    for v in range(graph.vertex_count):
        order = angular_order(drawing, v) if drawing is not None else graph.adjacency[v]
        count = math.ceil(Fraction(len(order)) / d_bar) if len(order) > d_bar else 1
        buckets: list[list[int]] = [[] for _ in range(count)]
        for position, w in enumerate(order, start=1):
            index = _group_index(position, d_bar) - 1 if count > 1 else 0
            buckets[index].append(w)
        ids = tuple(range(next_id, next_id + count))
        for copy, bucket in zip(ids, buckets, strict=True):
            for w in bucket:
                holder[(v, w)] = copy
            assignment.append(tuple(bucket))
            owner.append(v)
        groups.append(ids)
        next_id += count

    split_edges = [(holder[(u, v)], holder[(v, u)]) for u, v in graph.edge_list()]
    split_graph = Graph.from_edge_list(split_edges, vertex_count=next_id)
    split_drawing = None
    if drawing is not None:
        split_drawing = _place_copies(drawing, split_graph, groups, assignment)
    logger.debug(
        "Split n={} e={} d_bar={} into N={} vertices", graph.n, graph.e, d_bar, next_id
    )
    return SplitResult(
        original=graph,
        split_graph=split_graph,
        d_bar=d_bar,
        groups=tuple(groups),
        assignment=tuple(assignment),
        owner=tuple(owner),
        neighbour_order="id" if drawing is None else "clockwise",
        drawing=drawing,
        split_drawing=split_drawing,
    )


def _place_copies(
    drawing: Drawing,
    split_graph: Graph,
    groups: Sequence[tuple[int, ...]],
    assignment: Sequence[tuple[int, ...]],
) -> Drawing:
    """Copy ``i`` of ``v`` sits a tiny step from ``v`` towards the middle of its neighbours."""

    scale = _ring_scale(drawing)
    points = []
    for v, ids in enumerate(groups):
        px, py = drawing.point(v)
        if len(ids) == 1:
            points.append((px, py))
            continue
        for rank, copy in enumerate(ids, start=1):
            bucket = assignment[copy]
            if bucket:
                tx, ty = drawing.point(bucket[(len(bucket) - 1) // 2])
                points.append((px + scale * (tx - px), py + scale * (ty - py)))
            else:
                step = scale / (rank + 1)
                points.append((px + step, py + step / 3))
    return Drawing(
        host=split_graph,
        coordinates=tuple(points),
        metadata={**drawing.metadata, "split": True},
    )


@dataclass(frozen=True, slots=True)
class SplitCrossingReport:
    before: int
    after: int
    violations: tuple[str, ...] = ()

    @property
    def holds(self) -> bool:
        return not self.violations and self.after <= self.before


def split_crossing_report(result: SplitResult) -> SplitCrossingReport:
    """Compare crossing counts of the drawing before and after splitting."""

    if result.drawing is None or result.split_drawing is None:
        raise InvalidParameterError("split was computed without a drawing")
    before = count_crossings(result.drawing)
    try:
        after = count_crossings(result.split_drawing)
    except DegenerateDrawingError as exc:
        return SplitCrossingReport(
            before=before,
            after=-1,
            violations=tuple(violation.describe() for violation in exc.violations),
        )
    return SplitCrossingReport(before=before, after=after)


def contract_split(result: SplitResult) -> Graph:
    """Merge every copy back into its original vertex; the edges must stay simple."""

    mapped = Counter(
        tuple(sorted((result.owner[a], result.owner[b]))) for a, b in result.split_graph.edges
    )
    repeated = [edge for edge, count in mapped.items() if count > 1]
    if repeated:
        raise GraphError(f"Contraction produced parallel edges: {sorted(repeated)}")
    return Graph.from_edge_list(mapped, vertex_count=result.original.vertex_count)


# Stopping level ------------------------------------------------------------


def log_threshold(N: int, e: int, A: float, alpha: float) -> float:
    """``log((e / 2A)^(1/alpha) / N^(1+1/alpha))``."""

    if N < 1 or e < 1:
        raise InvalidParameterError(f"N and e must be positive, got N={N}, e={e}")
    if not (A > 0 and alpha > 0):
        raise InvalidParameterError(f"A and alpha must be positive, got A={A}, alpha={alpha}")
    return (math.log(e) - math.log(2 * A)) / alpha - (1 + 1 / alpha) * math.log(N)


def level_is_open(level: int, log_tau: float) -> bool:
    """True while ``(2/3)^level >= threshold``, i.e. the decomposition keeps bisecting."""

    return level * LOG_TWO_THIRDS >= log_tau


def stopping_level_by_iteration(N: int, e: int, A: float, alpha: float) -> int:
    log_tau = log_threshold(N, e, A, alpha)
    level = 0
    while level_is_open(level, log_tau):
        level += 1
    return level


def stopping_level(N: int, e: int, A: float, alpha: float) -> int:
    """Unique ``k >= 1`` with ``(2/3)^k < threshold <= (2/3)^(k-1)``; 0 when threshold > 1."""

    log_tau = log_threshold(N, e, A, alpha)
    if log_tau > 0:
        return 0
    k = max(1, math.floor(log_tau / LOG_TWO_THIRDS) + 1)
    # rounding near exact powers of 2/3
    while k > 1 and not level_is_open(k - 1, log_tau):
        k -= 1
    while level_is_open(k, log_tau):
        k += 1
    return k


# Decomposition -------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ComponentSummary:
    n: int
    e: int
    ids: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "e": self.e, "ids": list(self.ids)}


@dataclass(frozen=True, slots=True)
class BisectionRecord:
    """Cut of one large component, in split-graph ids."""

    component: int
    exactness: Exactness
    part_one: tuple[int, ...]
    part_two: tuple[int, ...]
    cut_edges: tuple[Edge, ...]

    @property
    def width(self) -> int:
        return len(self.cut_edges)

    def to_dict(self) -> dict[str, Any]:
        return {
            "component": self.component,
            "width": self.width,
            "exactness": self.exactness.value,
            "part_one": list(self.part_one),
            "part_two": list(self.part_two),
            "cut": [list(edge) for edge in self.cut_edges],
        }


@dataclass(frozen=True)
class LevelRecord:
    level: int
    components: tuple[ComponentSummary, ...]
    m: int
    deleted: int
    bisections: tuple[BisectionRecord, ...] = ()

    @property
    def M(self) -> int:
        return len(self.components)

    def to_dict(self) -> dict[str, Any]:
        return {
            "i": self.level,
            "M_i": self.M,
            "m_i": self.m,
            "components": [component.to_dict() for component in self.components],
            "deleted": self.deleted,
            "bisections": [record.to_dict() for record in self.bisections],
        }


@dataclass(frozen=True)
class DecompositionTrace:
    split: SplitResult
    params: BoundParams
    levels: tuple[LevelRecord, ...]
    k: int
    sigma: int
    final_edge_count: int
    preimages: tuple[tuple[int, ...], ...]
    policy: BisectorPolicy
    log_threshold: float
    diagnostics: tuple[str, ...] = ()

    @property
    def threshold(self) -> float:
        try:
            return math.exp(self.log_threshold)
        except OverflowError:
            return math.inf

    @property
    def exact_throughout(self) -> bool:
        return all(
            record.exactness is Exactness.EXACT
            for level in self.levels
            for record in level.bisections
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "split": self.split.to_dict(),
            "params": self.params.to_dict(),
            "policy": self.policy.value,
            "threshold": self.threshold,
            "log_threshold": self.log_threshold,
            "levels": [level.to_dict() for level in self.levels],
            "k": self.k,
            "sigma": self.sigma,
            "final_edge_count": self.final_edge_count,
            "preimages": [list(ids) for ids in self.preimages],
            "diagnostics": list(self.diagnostics),
        }


def _is_large(size: int, level: int, N: int) -> bool:
    """``size >= (2/3)^(level+1) N`` in exact arithmetic; singletons never qualify."""

    return size >= 2 and size * 3 ** (level + 1) >= 2 ** (level + 1) * N


def _bisect_component(
    item: tuple[int, tuple[Graph, VertexSet]],
    *,
    level: int,
    policy: BisectorPolicy,
    limits: SearchLimits,
    seed: int,
) -> BisectionRecord:
    index, (component, members) = item
    if component.vertex_count <= limits.bisection_cap:
        bisection: Bisection = exact_bisection(component, limits=limits)
    elif policy is BisectorPolicy.EXACT:
        raise BisectorCapExceededError(level, index, component.vertex_count, limits.bisection_cap)
    else:
        logger.warning(
            "Level {} component {} has {} vertices; using heuristic bisection",
            level,
            index,
            component.vertex_count,
        )
        bisection = heuristic_bisection(component, seed, limits=limits)
    ids = members.members
    return BisectionRecord(
        component=index,
        exactness=bisection.exactness,
        part_one=tuple(ids[v] for v in bisection.part_one),
        part_two=tuple(ids[v] for v in bisection.part_two),
        cut_edges=tuple((ids[u], ids[v]) for u, v in bisection.cut_edges),
    )


def decompose(
    graph: Graph,
    A: float,
    alpha: float,
    policy: BisectorPolicy | str = BisectorPolicy.AUTO,
    *,
    limits: SearchLimits | None = None,
    workers: int = 1,
    seed: int = 0,
    drawing: Drawing | None = None,
) -> DecompositionTrace:
    """Split ``graph`` and bisect every large component level by level until level ``k``."""

    if graph.e == 0:
        raise EmptyGraphError("Decomposition needs at least one edge")
    limits = limits or DEFAULT_LIMITS
    bisector = BisectorPolicy(policy)
    params = theorem2_constants(A, alpha)
    split = split_high_degree(graph, drawing)
    N = split.N
    log_tau = log_threshold(N, graph.e, A, alpha)
    k = stopping_level(N, graph.e, A, alpha)
    if k > limits.max_levels:
        raise TooLargeError("decomposition levels", k, limits.max_levels)

    diagnostics: list[str] = []
    if k == 0:
        diagnostics.append(
            "HypothesisViolation: threshold exceeds 1, so e > 2A N^(1+alpha) >= 2A n^(1+alpha)"
        )
        logger.warning("Decomposition stops at level 0: {}", diagnostics[-1])
    if split.split_graph.max_degree() > split.d_bar:
        diagnostics.append(
            f"Split degree {split.split_graph.max_degree()} exceeds d_bar={split.d_bar} "
            f"(bounded by ceil(d_bar)={split.degree_cap})"
        )

    current = split.split_graph
    levels: list[LevelRecord] = []
    sigma = 0
    for level in range(k + 1):
        components = current.components()
        m = sum(1 for component, _ in components if _is_large(component.n, level, N))
        records: tuple[BisectionRecord, ...] = ()
        if level < k:
            bisect = partial(
                _bisect_component, level=level, policy=bisector, limits=limits, seed=seed
            )
            work = list(enumerate(components[:m]))
            if workers > 1 and len(work) > 1:
                with ThreadPoolExecutor(max_workers=workers) as executor:
                    records = tuple(executor.map(bisect, work))
            else:
                records = tuple(bisect(item) for item in work)
        deleted = sum(record.width for record in records)
        sigma += deleted
        levels.append(
            LevelRecord(
                level=level,
                components=tuple(
                    ComponentSummary(n=component.n, e=component.e, ids=members.members)
                    for component, members in components
                ),
                m=m,
                deleted=deleted,
                bisections=records,
            )
        )
        logger.debug("Level {}: M={} m={} deleted={}", level, len(components), m, deleted)
        current = current.without_edges(edge for record in records for edge in record.cut_edges)

    preimages = tuple(
        tuple(sorted({split.owner[x] for x in summary.ids})) for summary in levels[-1].components
    )
    logger.info(
        "Decomposition finished: N={} k={} sigma={} final edges={}", N, k, sigma, current.e
    )
    return DecompositionTrace(
        split=split,
        params=params,
        levels=tuple(levels),
        k=k,
        sigma=sigma,
        final_edge_count=current.e,
        preimages=preimages,
        policy=bisector,
        log_threshold=log_tau,
        diagnostics=tuple(diagnostics),
    )


# Verification --------------------------------------------------------------


@dataclass(frozen=True)
class TraceCheck:
    name: str
    passed: bool
    skipped: bool = False
    reason: str = ""
    witnesses: tuple[dict[str, Any], ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "skipped": self.skipped,
            "reason": self.reason,
            "witnesses": [dict(witness) for witness in self.witnesses],
        }


@dataclass(frozen=True)
class TraceVerdict:
    checks: tuple[TraceCheck, ...]

    def __getitem__(self, name: str) -> TraceCheck:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks if not check.skipped)

    def to_dict(self) -> dict[str, Any]:
        return {"passed": self.passed, "checks": [check.to_dict() for check in self.checks]}


def _check(name: str, witnesses: list[dict[str, Any]]) -> TraceCheck:
    return TraceCheck(name=name, passed=not witnesses, witnesses=tuple(witnesses))


def _check_sizes(trace: DecompositionTrace) -> TraceCheck:
    N = trace.split.N
    witnesses = [
        {"i": level.level, "j": j, "n": component.n, "bound": (2 / 3) ** level.level * N}
        for level in trace.levels
        for j, component in enumerate(level.components)
        if component.n > 1 and component.n * 3**level.level > 2**level.level * N
    ]
    return _check("size_bound", witnesses)


def _check_classification(trace: DecompositionTrace) -> TraceCheck:
    N = trace.split.N
    witnesses: list[dict[str, Any]] = []
    for level in trace.levels:
        for j, component in enumerate(level.components):
            large = _is_large(component.n, level.level, N)
            if large != (j < level.m):
                witnesses.append(
                    {"i": level.level, "j": j, "n": component.n, "classified_large": j < level.m}
                )
        expected = level.m if level.level < trace.k else 0
        if len(level.bisections) != expected:
            witnesses.append(
                {"i": level.level, "bisections": len(level.bisections), "expected": expected}
            )
    return _check("classification", witnesses)


def _check_large_count(trace: DecompositionTrace) -> TraceCheck:
    witnesses = [
        {"i": level.level, "m_i": level.m, "bound": 1.5 ** (level.level + 1)}
        for level in trace.levels
        if level.m * 2 ** (level.level + 1) > 3 ** (level.level + 1)
    ]
    return _check("large_count", witnesses)


def _check_bracket(trace: DecompositionTrace) -> TraceCheck:
    log_tau = log_threshold(
        trace.split.N, trace.split.original.e, trace.params.A, trace.params.alpha
    )
    if trace.k == 0:
        ok = log_tau > 0
    else:
        ok = level_is_open(trace.k - 1, log_tau) and not level_is_open(trace.k, log_tau)
    ok = ok and len(trace.levels) == trace.k + 1
    witnesses = [] if ok else [{"k": trace.k, "threshold": math.exp(min(log_tau, 700.0))}]
    return _check("stopping_bracket", witnesses)


def _check_accounting(trace: DecompositionTrace) -> TraceCheck:
    witnesses: list[dict[str, Any]] = []
    for level in trace.levels:
        widths = sum(record.width for record in level.bisections)
        if widths != level.deleted:
            witnesses.append({"i": level.level, "deleted": level.deleted, "widths": widths})
    recorded = sum(level.deleted for level in trace.levels)
    expected = trace.split.split_graph.e - trace.final_edge_count
    if not trace.sigma == recorded == expected:
        witnesses.append({"sigma": trace.sigma, "recorded": recorded, "expected": expected})
    return _check("accounting", witnesses)


def _check_preimages(trace: DecompositionTrace) -> TraceCheck:
    final = trace.levels[-1].components if trace.levels else ()
    witnesses = [
        {"j": j, "preimage": len(ids), "n": component.n}
        for j, (ids, component) in enumerate(zip(trace.preimages, final, strict=False))
        if len(ids) > component.n
    ]
    if len(trace.preimages) != len(final):
        witnesses.append({"preimages": len(trace.preimages), "components": len(final)})
    return _check("preimage_bound", witnesses)


def _check_final_edges(trace: DecompositionTrace) -> TraceCheck:
    original = trace.split.original
    A, alpha = trace.params.A, trace.params.alpha
    failing = []
    for j, ids in enumerate(trace.preimages):
        sub, _ = original.induced_subgraph(VertexSet.of(ids))
        if sub.e > A * len(ids) ** (1 + alpha):
            failing.append({"j": j, "e": sub.e, "bound": A * len(ids) ** (1 + alpha)})
    if failing:
        return TraceCheck(
            name="final_edges",
            passed=True,
            skipped=True,
            reason=f"density hypothesis fails on {len(failing)} preimages",
            witnesses=tuple(failing),
        )
    witnesses = []
    if not 2 * trace.final_edge_count < original.e:
        witnesses.append({"final_edge_count": trace.final_edge_count, "half_e": original.e / 2})
    return _check("final_edges", witnesses)


def _level_graphs(trace: DecompositionTrace) -> list[Graph]:
    graphs = [trace.split.split_graph]
    for level in trace.levels[:-1]:
        graphs.append(
            graphs[-1].without_edges(
                edge for record in level.bisections for edge in record.cut_edges
            )
        )
    return graphs


def _bisected_components(trace: DecompositionTrace) -> list[tuple[int, list[Graph]]]:
    out = []
    for level, current in zip(trace.levels[:-1], _level_graphs(trace), strict=False):
        pieces = [
            current.induced_subgraph(VertexSet.of(level.components[record.component].ids))[0]
            for record in level.bisections
        ]
        out.append((level.level, pieces))
    return out


def _check_crossing_budget(
    trace: DecompositionTrace, oracle: CrossingOracle | None
) -> TraceCheck:
    name = "crossing_budget"
    if oracle is None:
        return TraceCheck(name=name, passed=True, skipped=True, reason="no exact crossing oracle")
    if not trace.exact_throughout:
        return TraceCheck(
            name=name, passed=True, skipped=True, reason="trace contains heuristic bisections"
        )
    total = oracle(trace.split.split_graph)
    if total is None:
        return TraceCheck(
            name=name, passed=True, skipped=True, reason="cr of the split graph unavailable"
        )
    witnesses: list[dict[str, Any]] = []
    for level, pieces in _bisected_components(trace):
        values = [oracle(piece) for piece in pieces]
        if any(value is None for value in values):
            return TraceCheck(
                name=name,
                passed=True,
                skipped=True,
                reason=f"cr unavailable for a level {level} component",
            )
        lhs = math.fsum(math.sqrt(value) for value in values if value is not None)
        rhs = math.sqrt(1.5 ** (level + 1) * total)
        if lhs > rhs + 1e-9 * max(1.0, rhs):
            witnesses.append({"i": level, "lhs": lhs, "rhs": rhs})
    return _check(name, witnesses)


def _check_degree_budget(trace: DecompositionTrace) -> TraceCheck:
    delta = trace.split.split_graph.max_degree()
    e = trace.split.original.e
    witnesses = []
    for level, pieces in _bisected_components(trace):
        lhs = math.fsum(math.sqrt(piece.degree_power_sum(2)) for piece in pieces)
        rhs = math.sqrt(1.5 ** (level + 1) * delta * 2 * e)
        if lhs > rhs + 1e-9 * max(1.0, rhs):
            witnesses.append({"i": level, "lhs": lhs, "rhs": rhs})
    return _check("degree_budget", witnesses)


def verify_trace(
    trace: DecompositionTrace,
    crossing_oracle: CrossingOracle | None = None,
) -> TraceVerdict:
    """Re-check the recorded run against the decomposition invariants.

    ``final_edges`` and ``crossing_budget`` are conditional: they are skipped,
    with a reason, when their hypothesis cannot be established.
    """

    checks = (
        _check_sizes(trace),
        _check_classification(trace),
        _check_large_count(trace),
        _check_bracket(trace),
        _check_accounting(trace),
        _check_preimages(trace),
        _check_final_edges(trace),
        _check_crossing_budget(trace, crossing_oracle),
        _check_degree_budget(trace),
    )
    for check in checks:
        if not check.passed:
            logger.warning("Trace check {} failed: {}", check.name, list(check.witnesses)[:3])
    return TraceVerdict(checks=checks)
