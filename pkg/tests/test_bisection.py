from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest
from crossing_lab.algorithms.bisection import (
    Exactness,
    HeuristicBisectionRejectedError,
    UndefinedBisectionError,
    balance_floor,
    exact_bisection,
    heuristic_bisection,
    jensen_check,
    lt_norm,
    pss_check,
    t3_counterexample_check,
)
from crossing_lab.algorithms.generators import complete, grid, path, random_graph
from crossing_lab.core.configuration import SearchLimits
from crossing_lab.core.errors import InvalidParameterError, TooLargeError
from crossing_lab.core.graph import Graph
from hypothesis import given, settings
from hypothesis import strategies as st


def brute_force(graph: Graph) -> tuple[int, tuple[int, ...]]:
    n = graph.vertex_count
    floor = balance_floor(n)
    best = None
    for size in range(floor, n - floor + 1):
        for rest in combinations(range(1, n), size - 1):
            part = (0, *rest)
            inside = set(part)
            width = sum(1 for u, v in graph.edges if (u in inside) != (v in inside))
            if best is None or (width, part) < best:
                best = (width, part)
    assert best is not None
    return best


@pytest.mark.parametrize(
    ("graph", "width"),
    [(path(4), 1), (complete(4), 4), (complete(5), 6), (grid(2)[0], 2), (grid(3)[0], 3)],
)
def test_exact_widths(graph: Graph, width: int) -> None:
    result = exact_bisection(graph)
    assert result.width == width
    assert result.exactness is Exactness.EXACT
    assert result.is_balanced()


def test_grid4_width() -> None:
    result = exact_bisection(grid(4)[0])
    assert result.width == 4
    assert result.width >= balance_floor(4)


@pytest.mark.slow
def test_grid5_width() -> None:
    result = exact_bisection(grid(5)[0], workers=4)
    assert result.width == 5


def test_ties_resolve_to_lex_least_part() -> None:
    assert exact_bisection(complete(4)).part_one.members == (0, 1)
    assert exact_bisection(path(4)).part_one.members == (0, 1)


def test_edgeless_graph_has_zero_width() -> None:
    result = exact_bisection(Graph(vertex_count=3))
    assert result.width == 0
    report = pss_check(Graph(vertex_count=3), 0, result)
    assert report.rhs == 0
    assert report.holds


def test_guards() -> None:
    with pytest.raises(UndefinedBisectionError):
        exact_bisection(Graph(vertex_count=1))
    with pytest.raises(UndefinedBisectionError):
        heuristic_bisection(Graph(vertex_count=1), 0)
    with pytest.raises(TooLargeError):
        exact_bisection(complete(5), limits=SearchLimits(bisection_cap=4))


def test_worker_count_does_not_change_result() -> None:
    graph = grid(4)[0]
    limits = SearchLimits(bisection_chunk_bits=6)
    assert exact_bisection(graph, limits=limits, workers=1) == exact_bisection(
        graph, limits=limits, workers=4
    )


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(min_value=2, max_value=9),
    p=st.floats(min_value=0.1, max_value=0.9),
    seed=st.integers(min_value=0, max_value=10_000),
)
def test_exact_matches_brute_force(n: int, p: float, seed: int) -> None:
    graph = random_graph(n, p, seed)
    result = exact_bisection(graph)
    assert (result.width, result.part_one.members) == brute_force(graph)


@settings(max_examples=40, deadline=None)
@given(
    n=st.integers(min_value=2, max_value=10),
    seed=st.integers(min_value=0, max_value=10_000),
)
def test_heuristic_is_an_upper_bound(n: int, seed: int) -> None:
    graph = random_graph(n, 0.4, seed)
    heuristic = heuristic_bisection(graph, seed)
    assert heuristic.is_balanced()
    assert heuristic.width >= exact_bisection(graph).width
    assert heuristic.exactness is Exactness.HEURISTIC


@pytest.mark.parametrize("seed", [0, 1, 17])
def test_heuristic_small_cases(seed: int) -> None:
    assert heuristic_bisection(path(4), seed).width == 1
    assert heuristic_bisection(complete(4), seed).width == 4


def test_heuristic_grid10_window() -> None:
    result = heuristic_bisection(grid(10)[0], 0)
    assert 4 <= result.width <= 14
    assert result == heuristic_bisection(grid(10)[0], 0)


def test_pss_k5() -> None:
    graph = complete(5)
    report = pss_check(graph, 1, exact_bisection(graph))
    assert report.b_value == 6
    assert report.degree_square_sum == 80
    assert report.rhs == pytest.approx(6.32 + 1.58 * np.sqrt(80))
    assert report.holds


@pytest.mark.slow
def test_pss_grid5() -> None:
    graph = grid(5)[0]
    report = pss_check(graph, 0, exact_bisection(graph, workers=4))
    assert report.b_value == 5
    assert report.degree_square_sum == 268
    assert report.holds


def test_pss_rejects_heuristic() -> None:
    graph = complete(4)
    with pytest.raises(HeuristicBisectionRejectedError):
        pss_check(graph, 0, heuristic_bisection(graph, 0))
    with pytest.raises(InvalidParameterError):
        pss_check(graph, -1, exact_bisection(graph))


def test_lt_norm_values() -> None:
    assert lt_norm(complete(4), 2) == pytest.approx(6.0)
    assert lt_norm(complete(4), 1) == pytest.approx(12.0)
    assert lt_norm(grid(5)[0], 4) == pytest.approx(3340**0.25)


def test_jensen_examples() -> None:
    assert jensen_check(path(4), 1)
    assert jensen_check(path(4), 2)
    assert jensen_check(grid(5)[0], 0.5)
    for t in (0, 2.5):
        with pytest.raises(InvalidParameterError):
            jensen_check(path(4), t)


def assert_norms_ordered(graph: Graph) -> None:
    norms = [lt_norm(graph, t) for t in (0.5, 1.0, 1.5, 2.0, 3.0, 4.0)]
    for low, high in zip(norms, norms[1:], strict=False):
        assert high <= low * (1 + 1e-9) + 1e-12
    assert all(jensen_check(graph, t) for t in (0.5, 1.0, 1.5, 2.0))


@settings(max_examples=200, deadline=None)
@given(
    n=st.integers(min_value=1, max_value=30),
    p=st.floats(min_value=0.0, max_value=1.0),
    seed=st.integers(min_value=0, max_value=100_000),
)
def test_lt_norm_non_increasing(n: int, p: float, seed: int) -> None:
    assert_norms_ordered(random_graph(n, p, seed))


def test_lt_norm_ordering_on_seeded_sample() -> None:
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        n = int(rng.integers(1, 31))
        p = float(rng.random())
        assert_norms_ordered(random_graph(n, p, int(rng.integers(0, 1_000_000))))


@pytest.mark.parametrize(("n", "t"), [(2, 3.0), (3, 2.5), (4, 4.0)])
def test_t3_chain_holds(n: int, t: float) -> None:
    graph, _ = grid(n)
    report = t3_counterexample_check(n, t, exact_bisection(graph))
    assert report.holds
    assert report.lhs <= report.chain_left


def test_t3_chain_values_for_grid4() -> None:
    report = t3_counterexample_check(4, 4.0, exact_bisection(grid(4)[0]))
    assert report.chain_left == pytest.approx(8.0)
    assert report.chain_right == pytest.approx(24.0)


def test_t3_rejects_small_t() -> None:
    with pytest.raises(InvalidParameterError):
        t3_counterexample_check(3, 2.0, exact_bisection(grid(3)[0]))
