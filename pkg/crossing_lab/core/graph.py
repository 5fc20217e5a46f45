"""Core graph data structures."""

from __future__ import annotations

import math
from bisect import bisect_left
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from .errors import InvalidParameterError

__all__ = [
    "Edge",
    "Graph",
    "GraphError",
    "InvalidVertexError",
    "SelfLoopError",
    "VertexSet",
    "normalise_edge",
]

Edge = tuple[int, int]


class GraphError(RuntimeError):
    """Raised when a graph would violate its invariants."""


class SelfLoopError(GraphError):
    def __init__(self, vertex: int) -> None:
        super().__init__(f"Self-loop at vertex {vertex}")
        self.vertex = vertex


class InvalidVertexError(GraphError):
    def __init__(self, vertex: int, vertex_count: int) -> None:
        super().__init__(f"Vertex {vertex} is not in range 0..{vertex_count - 1}")
        self.vertex = vertex


def normalise_edge(u: int, v: int) -> Edge:
    if u == v:
        raise SelfLoopError(u)
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, slots=True)
class VertexSet:
    """Sorted set of vertex ids belonging to a host graph."""

    members: tuple[int, ...]

    @classmethod
    def of(cls, members: Iterable[int], host: Graph | None = None) -> VertexSet:
        ordered = tuple(sorted(set(members)))
        if host is not None:
            for vertex in ordered:
                if not 0 <= vertex < host.vertex_count:
                    raise InvalidVertexError(vertex, host.vertex_count)
        return cls(members=ordered)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, vertex: object) -> bool:
        if not isinstance(vertex, int):
            return False
        index = bisect_left(self.members, vertex)
        return index < len(self.members) and self.members[index] == vertex


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..vertex_count-1``."""

    vertex_count: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise GraphError("vertex_count must be nonnegative")
        for u, v in self.edges:
            if u == v:
                raise SelfLoopError(u)
            if u > v:
                raise GraphError(f"Edge ({u}, {v}) is not normalised")
            if not 0 <= u < self.vertex_count or not 0 <= v < self.vertex_count:
                raise InvalidVertexError(max(u, v), self.vertex_count)

    # Construction ----------------------------------------------------
    @classmethod
    def from_edge_list(
        cls,
        pairs: Iterable[Sequence[int]],
        *,
        vertex_count: int | None = None,
    ) -> Graph:
        edges: set[Edge] = set()
        highest = -1
        for pair in pairs:
            u, v = int(pair[0]), int(pair[1])
            if u < 0 or v < 0:
                raise InvalidVertexError(min(u, v), vertex_count or 0)
            edges.add(normalise_edge(u, v))
            highest = max(highest, u, v)
        count = highest + 1 if vertex_count is None else vertex_count
        return cls(vertex_count=count, edges=frozenset(edges))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> Graph:
        """Relabel a networkx graph onto dense ids in sorted node order."""

        order = {node: index for index, node in enumerate(sorted(graph.nodes))}
        return cls.from_edge_list(
            ((order[u], order[v]) for u, v in graph.edges),
            vertex_count=len(order),
        )

    # Queries ---------------------------------------------------------
    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def e(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        neighbours: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            neighbours[u].append(v)
            neighbours[v].append(u)
        return tuple(tuple(sorted(items)) for items in neighbours)

    def neighbours(self, vertex: int) -> tuple[int, ...]:
        if not 0 <= vertex < self.vertex_count:
            raise InvalidVertexError(vertex, self.vertex_count)
        return self.adjacency[vertex]

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and normalise_edge(u, v) in self.edges

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def degree_sequence(self) -> list[int]:
        return [len(items) for items in self.adjacency]

    def max_degree(self) -> int:
        return max(self.degree_sequence(), default=0)

    def degree_power_sum(self, t: float) -> int | float:
        """Return ``sum(d_i ** t)``; exact for integral ``t``."""

        if t <= 0:
            raise InvalidParameterError(f"Degree power t must be positive, got {t}")
        degrees = self.degree_sequence()
        if float(t).is_integer():
            power = int(t)
            return sum(d**power for d in degrees)
        return math.fsum(float(d) ** t for d in degrees)

    # Derived graphs --------------------------------------------------
    def induced_subgraph(self, vertices: VertexSet) -> tuple[Graph, tuple[int, ...]]:
        """Return ``G[S]`` relabelled to ``0..|S|-1`` and the map back to ``G``."""

        for vertex in vertices.members:
            if not 0 <= vertex < self.vertex_count:
                raise InvalidVertexError(vertex, self.vertex_count)
        relabel = {old: new for new, old in enumerate(vertices.members)}
        edges = frozenset(
            (relabel[u], relabel[v]) for u, v in self.edges if u in relabel and v in relabel
        )
        return Graph(vertex_count=len(relabel), edges=edges), vertices.members

    def without_edges(self, removed: Iterable[Edge]) -> Graph:
        return Graph(vertex_count=self.vertex_count, edges=self.edges - frozenset(removed))

    def components(self) -> list[tuple[Graph, VertexSet]]:
        """Connected components, largest first, ties by smallest original id."""

        vertex_sets = [
            VertexSet.of(component) for component in nx.connected_components(self.to_networkx())
        ]
        vertex_sets.sort(key=lambda members: (-len(members), members.members[0]))
        return [(self.induced_subgraph(members)[0], members) for members in vertex_sets]

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edge_list())
        return graph
