"""Graph constructions: grids, K_{s,s} blowups, classic fixtures and random graphs."""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx
import numpy as np

from ..core.configuration import DEFAULT_LIMITS
from ..core.errors import InvalidParameterError, TooLargeError
from ..core.graph import Edge, Graph, normalise_edge
from ..data.structures import Drawing
from .bounds import bs_max_edges

__all__ = [
    "BlowupSpec",
    "BsReport",
    "GeneratorError",
    "blowup",
    "bs_check",
    "classic",
    "complete",
    "complete_bipartite",
    "cycle",
    "girth",
    "grid",
    "has_cycle_of_length",
    "path",
    "petersen",
    "random_graph",
    "star",
]


class GeneratorError(RuntimeError):
    """Raised when a named construction is unknown or malformed."""


def grid(n: int) -> tuple[Graph, Drawing]:
    """``n x n`` unit-distance grid, vertex ``(i, j)`` numbered ``(i-1) n + (j-1)``."""

    if n < 2:
        raise InvalidParameterError(f"grid size must be at least 2, got {n}")
    edges: list[Edge] = []
    for i in range(n):
        for j in range(n):
            vertex = i * n + j
            if j + 1 < n:
                edges.append((vertex, vertex + 1))
            if i + 1 < n:
                edges.append((vertex, vertex + n))
    graph = Graph.from_edge_list(edges, vertex_count=n * n)
    points = tuple((Fraction(i + 1), Fraction(j + 1)) for i in range(n) for j in range(n))
    return graph, Drawing(host=graph, coordinates=points, metadata={"generator": f"grid({n})"})


def complete(n: int) -> Graph:
    return Graph.from_networkx(nx.complete_graph(n))


def complete_bipartite(s: int, t: int) -> Graph:
    return Graph.from_networkx(nx.complete_bipartite_graph(s, t))


def path(n: int) -> Graph:
    return Graph.from_networkx(nx.path_graph(n))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError(f"cycle length must be at least 3, got {n}")
    return Graph.from_networkx(nx.cycle_graph(n))


def petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the centre numbered 0."""

    return Graph.from_networkx(nx.star_graph(leaves))


_CLASSICS: dict[str, Callable[..., Graph]] = {
    "complete": complete,
    "kn": complete,
    "complete_bipartite": complete_bipartite,
    "kst": complete_bipartite,
    "path": path,
    "cycle": cycle,
    "petersen": petersen,
    "star": star,
}


def classic(name: str, *sizes: int) -> Graph:
    factory = _CLASSICS.get(name.lower())
    if factory is None:
        raise GeneratorError(f"Unknown classic graph '{name}'; known: {sorted(_CLASSICS)}")
    try:
        return factory(*sizes)
    except TypeError as exc:
        raise GeneratorError(f"Bad parameters {list(sizes)} for '{name}'") from exc


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi sample.

    One uniform draw from ``np.random.default_rng(seed)`` per vertex pair, pairs
    visited in lexicographic order; the pair is an edge when its draw is below ``p``.
    """

    if not 0.0 <= p <= 1.0:
        raise InvalidParameterError(f"edge probability must lie in [0, 1], got {p}")
    if n < 0:
        raise InvalidParameterError(f"vertex count must be nonnegative, got {n}")
    rows, cols = np.triu_indices(n, k=1)
    draws = np.random.default_rng(seed=seed).random(rows.shape[0])
    keep = draws < p
    return Graph.from_edge_list(
        zip(rows[keep].tolist(), cols[keep].tolist(), strict=True), vertex_count=n
    )


@dataclass(frozen=True)
class BlowupSpec:
    base: Graph
    selected_edges: frozenset[Edge]
    s: int

    def __post_init__(self) -> None:
        if self.s < 3:
            raise InvalidParameterError(f"blowup size s must be at least 3, got {self.s}")
        missing = self.selected_edges - self.base.edges
        if missing:
            raise InvalidParameterError(f"selected edges not in base graph: {sorted(missing)}")

    @classmethod
    def first_edges(cls, base: Graph, count: int, s: int) -> BlowupSpec:
        """Select the first ``count`` edges in canonical order."""

        return cls(base=base, selected_edges=frozenset(base.edge_list()[:count]), s=s)

    @classmethod
    def of(cls, base: Graph, edges: Iterable[Edge], s: int) -> BlowupSpec:
        return cls(base=base, selected_edges=frozenset(normalise_edge(*e) for e in edges), s=s)

    @property
    def blown_vertices(self) -> frozenset[int]:
        return frozenset(v for edge in self.selected_edges for v in edge)


def blowup(spec: BlowupSpec) -> Graph:
    """Replace each endpoint of a selected edge by an independent set of size ``s``.

    Edges between two replaced vertices become complete bipartite, edges from a
    replaced vertex to a kept one fan out to all ``s`` copies.
    """

    blown = spec.blown_vertices
    copies: list[tuple[int, ...]] = []
    next_id = 0
    for vertex in range(spec.base.vertex_count):
        width = spec.s if vertex in blown else 1
        copies.append(tuple(range(next_id, next_id + width)))
        next_id += width
    edges = [(a, b) for u, v in spec.base.edge_list() for a in copies[u] for b in copies[v]]
    return Graph.from_edge_list(edges, vertex_count=next_id)


def girth(graph: Graph) -> float:
    """Length of a shortest cycle, ``inf`` for forests."""

    return float(nx.girth(graph.to_networkx()))


def _distances_within(graph: Graph, root: int) -> dict[int, int]:
    distance = {root: 0}
    queue = deque([root])
    while queue:
        vertex = queue.popleft()
        for neighbour in graph.adjacency[vertex]:
            if neighbour > root and neighbour not in distance:
                distance[neighbour] = distance[vertex] + 1
                queue.append(neighbour)
    return distance


def has_cycle_of_length(graph: Graph, length: int, *, cap: int | None = None) -> bool:
    """Exhaustive search for a simple cycle of exactly ``length`` vertices.

    Each cycle is rooted at its smallest vertex; paths only visit larger
    vertices that can still return to the root in the remaining steps.
    """

    if length < 3:
        raise InvalidParameterError(f"cycle length must be at least 3, got {length}")
    limit = DEFAULT_LIMITS.cycle_search_cap if cap is None else cap
    if graph.vertex_count > limit:
        raise TooLargeError("cycle search", graph.vertex_count, limit)
    if length > graph.vertex_count:
        return False

    adjacency = graph.adjacency
    for root in range(graph.vertex_count - length + 1):
        distance = _distances_within(graph, root)
        if len(distance) < length:
            continue
        trail = [root]
        on_trail = {root}

        def extend(vertex: int) -> bool:
            if len(trail) == length:
                return root in adjacency[vertex]
            remaining = length - len(trail)
            for neighbour in adjacency[vertex]:
                if neighbour <= root or neighbour in on_trail:
                    continue
                if distance.get(neighbour, length + 1) > remaining:
                    continue
                trail.append(neighbour)
                on_trail.add(neighbour)
                found = extend(neighbour)
                trail.pop()
                on_trail.discard(neighbour)
                if found:
                    return True
            return False

        if extend(root):
            return True
    return False


@dataclass(frozen=True, slots=True)
class BsReport:
    k: int
    c2k_free: bool
    edge_count: int
    edge_bound: float

    @property
    def holds(self) -> bool:
        return not self.c2k_free or self.edge_count <= self.edge_bound

    def to_dict(self) -> dict[str, object]:
        return {
            "k": self.k,
            "c2k_free": self.c2k_free,
            "edge_count": self.edge_count,
            "edge_bound": self.edge_bound,
            "holds": self.holds,
        }


def bs_check(graph: Graph, k: int, *, cap: int | None = None) -> BsReport:
    """Edge count against the cap for graphs without a cycle of length ``2k``."""

    edge_bound = bs_max_edges(max(graph.vertex_count, 1), k)
    c2k_free = not has_cycle_of_length(graph, 2 * k, cap=cap)
    return BsReport(k=k, c2k_free=c2k_free, edge_count=graph.e, edge_bound=edge_bound)
