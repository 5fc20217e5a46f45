"""Exact crossing numbers of small graphs by planarization search."""

from __future__ import annotations

import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Any

from loguru import logger

from ..core.configuration import DEFAULT_LIMITS, SearchLimits
from ..core.graph import Edge, Graph
from .bounds import girth_lb
from .drawings import is_planar
from .generators import complete, complete_bipartite, girth, grid, petersen

__all__ = [
    "CrossingFixture",
    "CrossingResult",
    "KMaxTooLargeError",
    "Planarization",
    "SearchBudgetExceededError",
    "SearchStats",
    "exact_crossing_number",
    "fixture_registry",
    "planarize",
    "search_lower_bound",
]

K_MAX_LIMIT = 4

CrossingPair = tuple[Edge, Edge]
EdgeOrders = tuple[tuple[Edge, tuple[int, ...]], ...]


class KMaxTooLargeError(ValueError):
    def __init__(self, k_max: int) -> None:
        super().__init__(f"k_max={k_max} exceeds the supported maximum of {K_MAX_LIMIT}")
        self.k_max = k_max


@dataclass
class SearchStats:
    planarity_tests: int = 0
    lower_bound: int = 0
    levels_searched: list[int] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "planarity_tests": self.planarity_tests,
            "lower_bound": self.lower_bound,
            "levels_searched": list(self.levels_searched),
        }


class SearchBudgetExceededError(RuntimeError):
    """Raised when the planarity-test budget runs out before the search settles."""

    def __init__(self, stats: SearchStats, budget: int) -> None:
        super().__init__(
            f"Crossing search aborted after {stats.planarity_tests} planarity tests "
            f"(budget {budget}, levels searched {stats.levels_searched})"
        )
        self.stats = stats
        self.budget = budget


@dataclass(frozen=True)
class Planarization:
    """Base graph with designated crossings replaced by degree-4 dummy vertices.

    Crossing ``i`` becomes vertex ``base.vertex_count + i``. ``edge_orders`` lists,
    for every crossed edge, its crossing indices from the lower endpoint outwards.
    """

    base: Graph
    crossings: tuple[CrossingPair, ...]
    edge_orders: EdgeOrders
    derived_graph: Graph

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def dummy(self, index: int) -> int:
        return self.base.vertex_count + index

    def is_sound(self) -> bool:
        """Crossing pairs are non-adjacent base edges and the derived graph is planar."""

        for first, second in self.crossings:
            if first not in self.base.edges or second not in self.base.edges:
                return False
            if set(first) & set(second):
                return False
        expected = self.base.vertex_count + len(self.crossings)
        if self.derived_graph.vertex_count != expected:
            return False
        degrees = self.derived_graph.degree_sequence()
        if any(degrees[self.dummy(i)] != 4 for i in range(len(self.crossings))):
            return False
        return is_planar(self.derived_graph)

    def to_dict(self) -> dict[str, Any]:
        return {
            "crossings": [[list(first), list(second)] for first, second in self.crossings],
            "edge_orders": [
                {"edge": list(edge), "order": list(order)} for edge, order in self.edge_orders
            ],
            "derived": {
                "n": self.derived_graph.vertex_count,
                "edges": [list(edge) for edge in self.derived_graph.edge_list()],
            },
        }


@dataclass(frozen=True)
class CrossingResult:
    value: int | None
    k_max: int
    certificate: Planarization | None
    stats: SearchStats

    @property
    def exceeds(self) -> bool:
        return self.value is None

    def to_dict(self) -> dict[str, Any]:
        return {
            "value": self.value if self.value is not None else f"exceeds {self.k_max}",
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "stats": self.stats.to_dict(),
        }


def planarize(
    base: Graph,
    crossings: Sequence[CrossingPair],
    edge_orders: Sequence[tuple[Edge, Sequence[int]]] = (),
) -> Planarization:
    """Build the planarization for ``crossings``.

    Edges carrying one crossing need no order; for edges with several, the
    order must be given in ``edge_orders``, otherwise crossing index order is used.
    """

    along: dict[Edge, list[int]] = {}
    for index, (first, second) in enumerate(crossings):
        along.setdefault(first, []).append(index)
        along.setdefault(second, []).append(index)
    explicit = {edge: tuple(order) for edge, order in edge_orders}
    orders = tuple(
        (edge, explicit.get(edge, tuple(indices))) for edge, indices in sorted(along.items())
    )

    derived: list[Edge] = []
    routed = dict(orders)
    for u, v in base.edge_list():
        order = routed.get((u, v))
        if not order:
            derived.append((u, v))
            continue
        chain = [u, *(base.vertex_count + index for index in order), v]
        derived.extend(zip(chain, chain[1:], strict=False))
    return Planarization(
        base=base,
        crossings=tuple(crossings),
        edge_orders=orders,
        derived_graph=Graph.from_edge_list(
            derived, vertex_count=base.vertex_count + len(crossings)
        ),
    )


def search_lower_bound(graph: Graph) -> int:
    """Levels below this cannot hold a planar planarization (girth density bound)."""

    if graph.vertex_count < 3 or graph.e == 0:
        return 0
    g = girth(graph)
    if math.isinf(g):
        return 0
    return int(girth_lb(graph.vertex_count, graph.e, g).value)


def _candidate_pairs(graph: Graph) -> list[CrossingPair]:
    return [
        (first, second)
        for first, second in combinations(graph.edge_list(), 2)
        if not set(first) & set(second)
    ]


def _orderings(crossings: Sequence[CrossingPair]) -> Iterator[EdgeOrders]:
    along: dict[Edge, list[int]] = {}
    for index, (first, second) in enumerate(crossings):
        along.setdefault(first, []).append(index)
        along.setdefault(second, []).append(index)
    shared = sorted((edge, indices) for edge, indices in along.items() if len(indices) > 1)
    if not shared:
        yield ()
        return
    edges = [edge for edge, _ in shared]
    for choice in product(*(permutations(indices) for _, indices in shared)):
        yield tuple(zip(edges, choice, strict=True))


def exact_crossing_number(
    graph: Graph,
    k_max: int = K_MAX_LIMIT,
    *,
    limits: SearchLimits | None = None,
) -> CrossingResult:
    """Smallest ``k <= k_max`` with a planar planarization of ``k`` crossings.

    Crossing sets are enumerated in lexicographic order of sorted non-adjacent
    edge pairs, then orders along shared edges in lexicographic order, so the
    first planar hit is the lexicographically least minimum certificate.
    """

    if k_max > K_MAX_LIMIT:
        raise KMaxTooLargeError(k_max)
    limits = limits or DEFAULT_LIMITS
    budget = limits.planarity_test_budget
    stats = SearchStats(lower_bound=search_lower_bound(graph))

    if stats.lower_bound > k_max:
        logger.debug(
            "Crossing lower bound {} already exceeds k_max={}", stats.lower_bound, k_max
        )
        return CrossingResult(value=None, k_max=k_max, certificate=None, stats=stats)

    candidates = _candidate_pairs(graph)
    for k in range(stats.lower_bound, k_max + 1):
        stats.levels_searched.append(k)
        for crossings in combinations(candidates, k):
            for orders in _orderings(crossings):
                if stats.planarity_tests >= budget:
                    raise SearchBudgetExceededError(stats, budget)
                stats.planarity_tests += 1
                candidate = planarize(graph, crossings, orders)
                if is_planar(candidate.derived_graph):
                    logger.info(
                        "cr = {} for n={} e={} after {} planarity tests",
                        k,
                        graph.n,
                        graph.e,
                        stats.planarity_tests,
                    )
                    return CrossingResult(value=k, k_max=k_max, certificate=candidate, stats=stats)
        logger.debug("No planar planarization with {} crossings", k)
    return CrossingResult(value=None, k_max=k_max, certificate=None, stats=stats)


@dataclass(frozen=True)
class CrossingFixture:
    name: str
    graph: Graph
    crossing_number: int


def fixture_registry() -> list[CrossingFixture]:
    """Named small graphs with known crossing numbers, all reachable with ``k_max <= 4``."""

    fixtures = [
        CrossingFixture("K4", complete(4), 0),
        CrossingFixture("K5", complete(5), 1),
        CrossingFixture("K3,3", complete_bipartite(3, 3), 1),
        CrossingFixture("K3,4", complete_bipartite(3, 4), 2),
        CrossingFixture("petersen", petersen(), 2),
        CrossingFixture("K6", complete(6), 3),
    ]
    fixtures.extend(CrossingFixture(f"grid({n})", grid(n)[0], 0) for n in range(2, 6))
    return fixtures
