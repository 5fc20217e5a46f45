"""Balanced bisections, degree norms and the bisection-width inequalities."""

from __future__ import annotations

import math
from collections.abc import Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import StrEnum
from typing import Any

import numpy as np
from loguru import logger

from ..core.configuration import DEFAULT_LIMITS, SearchLimits
from ..core.errors import InvalidParameterError, TooLargeError
from ..core.graph import Edge, Graph, VertexSet
from .generators import grid

__all__ = [
    "Bisection",
    "Exactness",
    "HeuristicBisectionRejectedError",
    "PssReport",
    "T3Report",
    "UndefinedBisectionError",
    "balance_floor",
    "exact_bisection",
    "heuristic_bisection",
    "jensen_check",
    "lt_norm",
    "pss_check",
    "t3_counterexample_check",
]

PSS_CROSSING_FACTOR = 6.32
PSS_DEGREE_FACTOR = 1.58
RELATIVE_TOLERANCE = 1e-9


class UndefinedBisectionError(ValueError):
    def __init__(self, n: int) -> None:
        super().__init__(f"Bisection width is undefined for n={n} < 2")
        self.n = n


class HeuristicBisectionRejectedError(ValueError):
    """Raised when an upper-bound bisection is offered where an exact width is required."""


class Exactness(StrEnum):
    EXACT = "exact"
    HEURISTIC = "heuristic-upper-bound"


def balance_floor(n: int) -> int:
    """Smallest admissible part size ``ceil(n/3)``."""

    return -(-n // 3)


def _within_tolerance(lhs: float, rhs: float) -> bool:
    return lhs <= rhs + RELATIVE_TOLERANCE * max(1.0, abs(rhs))


@dataclass(frozen=True)
class Bisection:
    part_one: VertexSet
    part_two: VertexSet
    cut_edges: tuple[Edge, ...]
    exactness: Exactness

    @classmethod
    def from_part(
        cls,
        graph: Graph,
        part_one: Iterable[int],
        exactness: Exactness,
    ) -> Bisection:
        one = VertexSet.of(part_one, graph)
        two = VertexSet.of((v for v in range(graph.vertex_count) if v not in one), graph)
        cut = tuple(edge for edge in graph.edge_list() if (edge[0] in one) != (edge[1] in one))
        return cls(part_one=one, part_two=two, cut_edges=cut, exactness=exactness)

    @property
    def width(self) -> int:
        return len(self.cut_edges)

    def is_balanced(self) -> bool:
        floor = balance_floor(len(self.part_one) + len(self.part_two))
        return len(self.part_one) >= floor and len(self.part_two) >= floor

    def to_dict(self) -> dict[str, Any]:
        return {
            "width": self.width,
            "part_one": list(self.part_one.members),
            "part_two": list(self.part_two.members),
            "exactness": self.exactness.value,
        }


# Exhaustive search ---------------------------------------------------------


def _best_in_chunk(
    start: int,
    stop: int,
    n: int,
    edge_u: np.ndarray,
    edge_v: np.ndarray,
    size_range: tuple[int, int],
) -> tuple[int, tuple[int, ...]] | None:
    """Minimum ``(width, part_one)`` over masks ``start..stop-1``.

    Bit ``i`` of a mask places vertex ``i + 1`` in part one; vertex 0 always is.
    """

    masks = np.arange(start, stop, dtype=np.int64)
    shifts = np.arange(n - 1, dtype=np.int64)
    member = np.ones((n, masks.shape[0]), dtype=bool)
    member[1:] = ((masks[None, :] >> shifts[:, None]) & 1).astype(bool)
    sizes = member.sum(axis=0)
    valid = (sizes >= size_range[0]) & (sizes <= size_range[1])
    if not valid.any():
        return None
    member = member[:, valid]
    sizes = sizes[valid]
    widths = (member[edge_u] != member[edge_v]).sum(axis=0)
    best = int(widths.min())
    tied = widths == best
    member = member[:, tied]
    sizes = sizes[tied]

    # sorted members per column, padded with -1 so a prefix sorts first
    order = np.argsort(~member, axis=0, kind="stable")
    ranks = np.arange(n)[:, None]
    sequences = np.where(ranks < sizes[None, :], order, -1)
    first = int(np.lexsort(sequences[::-1])[0])
    return best, tuple(int(v) for v in sequences[: sizes[first], first])


def exact_bisection(
    graph: Graph,
    *,
    limits: SearchLimits | None = None,
    workers: int = 1,
) -> Bisection:
    """Minimum-width balanced bisection by exhaustive enumeration.

    Ties resolve to the lexicographically least part one containing vertex 0;
    the result does not depend on ``workers``.
    """

    limits = limits or DEFAULT_LIMITS
    n = graph.vertex_count
    if n < 2:
        raise UndefinedBisectionError(n)
    if n > limits.bisection_cap:
        raise TooLargeError("exact bisection", n, limits.bisection_cap)

    floor = balance_floor(n)
    edges = graph.edge_list()
    edge_u = np.array([u for u, _ in edges], dtype=np.intp)
    edge_v = np.array([v for _, v in edges], dtype=np.intp)
    total = 1 << (n - 1)
    chunk = 1 << limits.bisection_chunk_bits
    bounds = [(start, min(start + chunk, total)) for start in range(0, total, chunk)]

    def evaluate(span: tuple[int, int]) -> tuple[int, tuple[int, ...]] | None:
        return _best_in_chunk(span[0], span[1], n, edge_u, edge_v, (floor, n - floor))

    if workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(evaluate, bounds))
    else:
        results = [evaluate(span) for span in bounds]

    width, part_one = min(result for result in results if result is not None)
    logger.debug("Exact bisection n={} width={} over {} chunks", n, width, len(bounds))
    return Bisection.from_part(graph, part_one, Exactness.EXACT)


# Local search ----------------------------------------------------------------


def _grow_start(graph: Graph, root: int, floor: int) -> list[bool]:
    """Greedy region growing from ``root``; returns the best balanced prefix."""

    n = graph.vertex_count
    inside = [False] * n
    inside[root] = True
    cut = len(graph.adjacency[root])
    best_cut = cut if floor <= 1 <= n - floor else math.inf
    best_size = 1
    order = [root]
    for size in range(2, n - floor + 1):
        candidates = [v for v in range(n) if not inside[v]]
        frontier = [v for v in candidates if any(inside[w] for w in graph.adjacency[v])]
        pool = frontier or candidates[:1]

        def score(v: int) -> tuple[int, int]:
            into = sum(1 for w in graph.adjacency[v] if inside[w])
            return (len(graph.adjacency[v]) - 2 * into, v)

        chosen = min(pool, key=score)
        cut += score(chosen)[0]
        inside[chosen] = True
        order.append(chosen)
        if size >= floor and cut < best_cut:
            best_cut, best_size = cut, size
    start = [False] * n
    for v in order[:best_size]:
        start[v] = True
    return start


def _gain(graph: Graph, side: list[bool], v: int) -> int:
    """Reduction of the cut when ``v`` changes side."""

    across = sum(1 for w in graph.adjacency[v] if side[w] != side[v])
    return 2 * across - len(graph.adjacency[v])


def _improve(graph: Graph, side: list[bool], floor: int) -> None:
    n = graph.vertex_count
    size_one = sum(side)
    improved = True
    while improved:
        improved = False
        for v in range(n):
            after = size_one - 1 if side[v] else size_one + 1
            if floor <= after <= n - floor and _gain(graph, side, v) > 0:
                side[v] = not side[v]
                size_one = after
                improved = True
                break
        if improved:
            continue
        for u in range(n):
            if not side[u]:
                continue
            for v in range(n):
                if side[v]:
                    continue
                swap = _gain(graph, side, u) + _gain(graph, side, v)
                if graph.has_edge(u, v):
                    swap -= 2
                if swap > 0:
                    side[u], side[v] = False, True
                    improved = True
                    break
            if improved:
                break


def heuristic_bisection(
    graph: Graph,
    seed: int,
    *,
    limits: SearchLimits | None = None,
) -> Bisection:
    """Local search upper bound on the bisection width, deterministic for ``seed``.

    Restart 0 grows from the lowest-id minimum-degree vertex, later restarts
    from roots drawn by ``np.random.default_rng(seed)``. Each start is refined
    by first-improvement single moves and pair swaps within the balance bounds.
    """

    limits = limits or DEFAULT_LIMITS
    n = graph.vertex_count
    if n < 2:
        raise UndefinedBisectionError(n)
    floor = balance_floor(n)
    rng = np.random.default_rng(seed)
    degrees = graph.degree_sequence()

    best: tuple[int, tuple[int, ...]] | None = None
    for restart in range(limits.heuristic_restarts):
        root = degrees.index(min(degrees)) if restart == 0 else int(rng.integers(n))
        side = _grow_start(graph, root, floor)
        _improve(graph, side, floor)
        if not side[0]:
            side = [not member for member in side]
        part_one = tuple(v for v in range(n) if side[v])
        width = sum(1 for u, v in graph.edges if side[u] != side[v])
        if best is None or (width, part_one) < best:
            best = (width, part_one)
    assert best is not None
    return Bisection.from_part(graph, best[1], Exactness.HEURISTIC)


# Inequalities ----------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class PssReport:
    n: int
    e: int
    cr_value: int
    b_value: int
    degree_square_sum: int

    @property
    def rhs(self) -> float:
        return PSS_CROSSING_FACTOR * math.sqrt(self.cr_value) + PSS_DEGREE_FACTOR * math.sqrt(
            self.degree_square_sum
        )

    @property
    def holds(self) -> bool:
        return _within_tolerance(self.b_value, self.rhs)

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "e": self.e,
            "cr": self.cr_value,
            "b": self.b_value,
            "degree_square_sum": self.degree_square_sum,
            "rhs": self.rhs,
            "holds": self.holds,
        }


def pss_check(graph: Graph, cr_value: int, bisection: Bisection) -> PssReport:
    if bisection.exactness is not Exactness.EXACT:
        raise HeuristicBisectionRejectedError(
            "Bisection-width inequality needs an exact bisection, got an upper bound"
        )
    if cr_value < 0:
        raise InvalidParameterError(f"crossing number must be nonnegative, got {cr_value}")
    return PssReport(
        n=graph.n,
        e=graph.e,
        cr_value=cr_value,
        b_value=bisection.width,
        degree_square_sum=int(graph.degree_power_sum(2)),
    )


def lt_norm(graph: Graph, t: float) -> float:
    """``(sum d_i^t)^(1/t)`` of the degree sequence."""

    return float(graph.degree_power_sum(t)) ** (1.0 / t)


def jensen_check(graph: Graph, t: float) -> bool:
    """``l_2 <= l_t`` for ``0 < t <= 2``; false only on an arithmetic bug."""

    if not 0 < t <= 2:
        raise InvalidParameterError(f"t must lie in (0, 2], got {t}")
    return _within_tolerance(lt_norm(graph, 2), lt_norm(graph, t))


@dataclass(frozen=True, slots=True)
class T3Report:
    """Grid witness that no ``l_t`` version of the bisection inequality holds for ``t > 2``.

    ``lhs <= chain_left <= chain_right`` is the chain in the grid parameter ``n``;
    the ``statement_*`` fields restate it with the vertex count ``n^2``.
    """

    n: int
    t: float
    width: int
    lhs: float
    chain_left: float
    chain_right: float
    statement_rhs: float

    @property
    def holds(self) -> bool:
        return _within_tolerance(self.lhs, self.chain_left) and _within_tolerance(
            self.chain_left, self.chain_right
        )

    @property
    def statement_holds(self) -> bool:
        return _within_tolerance(self.statement_rhs, self.width)

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "t": self.t,
            "width": self.width,
            "lhs": self.lhs,
            "chain_left": self.chain_left,
            "chain_right": self.chain_right,
            "statement_rhs": self.statement_rhs,
            "holds": self.holds,
            "statement_holds": self.statement_holds,
        }


def t3_counterexample_check(n: int, t: float, bisection: Bisection) -> T3Report:
    """Evaluate ``sqrt(cr) + l_t <= 4 n^(2/t) <= 12 n^(2/t - 1) b`` on ``grid(n)``."""

    if t <= 2:
        raise InvalidParameterError(f"t must exceed 2, got {t}")
    if n < 2:
        raise InvalidParameterError(f"grid size must be at least 2, got {n}")
    graph, _ = grid(n)
    if len(bisection.part_one) + len(bisection.part_two) != graph.vertex_count:
        raise InvalidParameterError(f"bisection does not cover the {n}x{n} grid")
    # the grid is planar, so its crossing term vanishes
    lhs = lt_norm(graph, t)
    vertex_count = graph.vertex_count
    return T3Report(
        n=n,
        t=t,
        width=bisection.width,
        lhs=lhs,
        chain_left=4 * n ** (2 / t),
        chain_right=12 * n ** (2 / t - 1) * bisection.width,
        statement_rhs=vertex_count ** (0.5 - 1 / t) * lhs / 12,
    )
