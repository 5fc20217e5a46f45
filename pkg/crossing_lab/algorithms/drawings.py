"""Straight-line drawings: validation, crossing counts and planarity."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations

import networkx as nx
from loguru import logger

from ..core.graph import Edge, Graph
from ..data.structures import Drawing, Point

__all__ = [
    "DegenerateDrawingError",
    "Violation",
    "ViolationKind",
    "angular_order",
    "count_crossings",
    "crossing_pairs",
    "is_planar",
    "planar_drawing",
    "validate_drawing",
]


class ViolationKind(StrEnum):
    COINCIDENT_VERTICES = "CoincidentVertices"
    VERTEX_ON_EDGE = "VertexOnEdge"
    OVERLAPPING_EDGES = "OverlappingEdges"
    TRIPLE_POINT = "TriplePoint"


@dataclass(frozen=True, slots=True)
class Violation:
    kind: ViolationKind
    vertices: tuple[int, ...] = ()
    edges: tuple[Edge, ...] = ()
    point: Point | None = None

    def describe(self) -> str:
        parts = [self.kind.value]
        if self.vertices:
            parts.append(f"vertices={list(self.vertices)}")
        if self.edges:
            parts.append(f"edges={[list(edge) for edge in self.edges]}")
        if self.point is not None:
            parts.append(f"point=({self.point[0]}, {self.point[1]})")
        return " ".join(parts)


class DegenerateDrawingError(RuntimeError):
    """Raised when a drawing is not in general position."""

    def __init__(self, violations: list[Violation]) -> None:
        summary = "; ".join(violation.describe() for violation in violations[:5])
        super().__init__(f"Degenerate drawing ({len(violations)} violations): {summary}")
        self.violations = violations


def _orientation(a: Point, b: Point, c: Point) -> int:
    cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (cross > 0) - (cross < 0)


def _strictly_inside(a: Point, b: Point, p: Point) -> bool:
    """True when ``p`` lies on the open segment ``ab``."""

    if p in (a, b) or _orientation(a, b, p) != 0:
        return False
    within_x = min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
    within_y = min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    return within_x and within_y


def _collinear_overlap(a: Point, b: Point, c: Point, d: Point) -> bool:
    if _orientation(a, b, c) != 0 or _orientation(a, b, d) != 0:
        return False
    # project on the dominant axis
    axis = 0 if a[0] != b[0] else 1
    lo1, hi1 = sorted((a[axis], b[axis]))
    lo2, hi2 = sorted((c[axis], d[axis]))
    return min(hi1, hi2) > max(lo1, lo2)


def _proper_crossing(a: Point, b: Point, c: Point, d: Point) -> Point | None:
    o1, o2 = _orientation(a, b, c), _orientation(a, b, d)
    o3, o4 = _orientation(c, d, a), _orientation(c, d, b)
    if o1 * o2 >= 0 or o3 * o4 >= 0:
        return None
    denom = (a[0] - b[0]) * (c[1] - d[1]) - (a[1] - b[1]) * (c[0] - d[0])
    t = ((a[0] - c[0]) * (c[1] - d[1]) - (a[1] - c[1]) * (c[0] - d[0])) / denom
    return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))


def validate_drawing(drawing: Drawing) -> list[Violation]:
    """List every general-position violation; empty when the drawing is valid."""

    violations: list[Violation] = []
    graph = drawing.host

    by_point: dict[Point, list[int]] = defaultdict(list)
    for vertex, point in enumerate(drawing.coordinates):
        by_point[point].append(vertex)
    for point, vertices in sorted(by_point.items(), key=lambda item: item[1][0]):
        if len(vertices) > 1:
            violations.append(
                Violation(ViolationKind.COINCIDENT_VERTICES, vertices=tuple(vertices), point=point)
            )

    edges = graph.edge_list()
    for u, v in edges:
        a, b = drawing.segment(u, v)
        for w in range(graph.vertex_count):
            if w in (u, v):
                continue
            if _strictly_inside(a, b, drawing.point(w)):
                violations.append(
                    Violation(ViolationKind.VERTEX_ON_EDGE, vertices=(w,), edges=((u, v),))
                )

    segments_at: dict[Point, set[Edge]] = defaultdict(set)
    for first, second in combinations(edges, 2):
        a, b = drawing.segment(*first)
        c, d = drawing.segment(*second)
        if _collinear_overlap(a, b, c, d):
            violations.append(Violation(ViolationKind.OVERLAPPING_EDGES, edges=(first, second)))
            continue
        if set(first) & set(second):
            continue
        point = _proper_crossing(a, b, c, d)
        if point is not None:
            segments_at[point].update((first, second))
    for point, through in segments_at.items():
        if len(through) > 2:
            violations.append(
                Violation(ViolationKind.TRIPLE_POINT, edges=tuple(sorted(through)), point=point)
            )
    return violations


def crossing_pairs(drawing: Drawing) -> list[tuple[Edge, Edge]]:
    """Pairs of non-adjacent edges whose open segments cross."""

    violations = validate_drawing(drawing)
    if violations:
        raise DegenerateDrawingError(violations)
    pairs: list[tuple[Edge, Edge]] = []
    for first, second in combinations(drawing.host.edge_list(), 2):
        if set(first) & set(second):
            continue
        a, b = drawing.segment(*first)
        c, d = drawing.segment(*second)
        if _proper_crossing(a, b, c, d) is not None:
            pairs.append((first, second))
    return pairs


def count_crossings(drawing: Drawing) -> int:
    """Crossing count of one explicit drawing (an upper bound on cr)."""

    return len(crossing_pairs(drawing))


def is_planar(graph: Graph) -> bool:
    planar, _ = nx.check_planarity(graph.to_networkx())
    return bool(planar)


def planar_drawing(graph: Graph) -> Drawing:
    """Crossing-free straight-line drawing of a planar graph on integer points."""

    planar, embedding = nx.check_planarity(graph.to_networkx())
    if not planar:
        raise ValueError("Graph is not planar")
    positions = nx.combinatorial_embedding_to_pos(embedding)
    logger.debug("Planar drawing computed for n={} e={}", graph.n, graph.e)
    return Drawing.from_pairs(graph, (positions[v] for v in range(graph.vertex_count)))


def angular_order(drawing: Drawing, vertex: int) -> tuple[int, ...]:
    """Neighbours of ``vertex`` in clockwise order, starting at the positive x direction."""

    origin = drawing.point(vertex)

    def offset(w: int) -> tuple[Fraction, Fraction]:
        x, y = drawing.point(w)
        return x - origin[0], y - origin[1]

    def half(w: int) -> int:
        dx, dy = offset(w)
        return 0 if dy < 0 or (dy == 0 and dx > 0) else 1

    def compare(first: int, second: int) -> int:
        h1, h2 = half(first), half(second)
        if h1 != h2:
            return h1 - h2
        (x1, y1), (x2, y2) = offset(first), offset(second)
        cross = x1 * y2 - y1 * x2
        # clockwise successor has negative cross product
        return 1 if cross > 0 else -1 if cross < 0 else 0

    return tuple(sorted(drawing.host.neighbours(vertex), key=cmp_to_key(compare)))
