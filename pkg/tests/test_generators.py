from __future__ import annotations

import math
from itertools import combinations, permutations

import pytest
from crossing_lab.algorithms.drawings import count_crossings, is_planar
from crossing_lab.algorithms.generators import (
    BlowupSpec,
    GeneratorError,
    blowup,
    bs_check,
    classic,
    complete,
    complete_bipartite,
    cycle,
    girth,
    grid,
    has_cycle_of_length,
    path,
    petersen,
    random_graph,
)
from crossing_lab.core.errors import InvalidParameterError, TooLargeError
from crossing_lab.core.graph import Graph
from hypothesis import given, settings
from hypothesis import strategies as st


def brute_force_cycle(graph: Graph, length: int) -> bool:
    for vertices in combinations(range(graph.vertex_count), length):
        first, rest = vertices[0], vertices[1:]
        for order in permutations(rest):
            walk = (first, *order)
            if all(graph.has_edge(walk[i], walk[(i + 1) % length]) for i in range(length)):
                return True
    return False


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_grid_counts_and_drawing(n: int) -> None:
    graph, drawing = grid(n)
    assert graph.vertex_count == n * n
    assert graph.e == 2 * n * (n - 1)
    assert graph.max_degree() <= 4
    assert count_crossings(drawing) == 0
    assert is_planar(graph)


def test_grid_numbering_is_row_major() -> None:
    graph, drawing = grid(3)
    assert graph.has_edge(0, 1)
    assert graph.has_edge(0, 3)
    assert not graph.has_edge(2, 3)
    assert drawing.point(5) == (2, 3)


def test_grid_degree_census() -> None:
    graph, _ = grid(3)
    assert sorted(graph.degree_sequence()) == [2, 2, 2, 2, 3, 3, 3, 3, 4]


def test_grid_rejects_small_size() -> None:
    with pytest.raises(InvalidParameterError):
        grid(1)


def test_blowup_of_single_edge_is_k33() -> None:
    base = path(2)
    graph = blowup(BlowupSpec.of(base, [(0, 1)], 3))
    assert graph == complete_bipartite(3, 3)
    assert not is_planar(graph)


def test_blowup_of_path_edge() -> None:
    graph = blowup(BlowupSpec.of(path(3), [(1, 0)], 3))
    assert graph.vertex_count == 7
    assert graph.e == 12
    assert graph.degree_sequence()[6] == 3


def test_blowup_of_grid_edge_is_nonplanar() -> None:
    base, _ = grid(5)
    graph = blowup(BlowupSpec.first_edges(base, 1, 3))
    assert graph.vertex_count == 29
    assert not is_planar(graph)


def test_blowup_spec_validation() -> None:
    with pytest.raises(InvalidParameterError):
        BlowupSpec.of(path(2), [(0, 1)], 2)
    with pytest.raises(InvalidParameterError):
        BlowupSpec.of(path(3), [(0, 2)], 3)


@settings(max_examples=100, deadline=None)
@given(
    n=st.integers(min_value=2, max_value=9),
    seed=st.integers(min_value=0, max_value=10_000),
    count=st.integers(min_value=1, max_value=4),
    s=st.integers(min_value=3, max_value=4),
)
def test_blowup_counts_match_construction(n: int, seed: int, count: int, s: int) -> None:
    base = random_graph(n, 0.5, seed)
    if base.e == 0:
        return
    spec = BlowupSpec.first_edges(base, count, s)
    graph = blowup(spec)
    blown = spec.blown_vertices
    width = [s if v in blown else 1 for v in range(n)]
    assert graph.vertex_count == n - len(blown) + s * len(blown)
    assert graph.e == sum(width[u] * width[v] for u, v in base.edges)
    assert not is_planar(graph)


def test_classics() -> None:
    assert classic("kn", 5).e == 10
    assert classic("cycle", 6) == cycle(6)
    graph = petersen()
    assert (graph.vertex_count, graph.e) == (10, 15)
    assert set(graph.degree_sequence()) == {3}


def test_unknown_classic() -> None:
    with pytest.raises(GeneratorError):
        classic("dodecahedron")
    with pytest.raises(GeneratorError):
        classic("cycle")


def test_random_graph_extremes() -> None:
    assert random_graph(8, 0.0, 3).e == 0
    assert random_graph(8, 1.0, 3) == complete(8)


def test_random_graph_is_reproducible() -> None:
    assert random_graph(20, 0.3, 7) == random_graph(20, 0.3, 7)
    assert random_graph(20, 0.3, 7).edges != random_graph(20, 0.3, 8).edges


def test_random_graph_rejects_bad_probability() -> None:
    with pytest.raises(InvalidParameterError):
        random_graph(5, 1.5, 0)


def test_cycle_search_examples() -> None:
    assert has_cycle_of_length(cycle(6), 6)
    assert not has_cycle_of_length(cycle(6), 4)
    assert has_cycle_of_length(complete(4), 4)
    assert not has_cycle_of_length(complete(4), 6)
    assert has_cycle_of_length(grid(3)[0], 8)


def test_cycle_search_guards() -> None:
    with pytest.raises(InvalidParameterError):
        has_cycle_of_length(cycle(4), 2)
    with pytest.raises(TooLargeError):
        has_cycle_of_length(grid(6)[0], 4)


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(min_value=3, max_value=7),
    p=st.floats(min_value=0.2, max_value=0.8),
    seed=st.integers(min_value=0, max_value=10_000),
    length=st.integers(min_value=3, max_value=7),
)
def test_cycle_search_agrees_with_brute_force(n: int, p: float, seed: int, length: int) -> None:
    graph = random_graph(n, p, seed)
    assert has_cycle_of_length(graph, length) == brute_force_cycle(graph, length)


def test_girth() -> None:
    assert girth(petersen()) == 5
    assert math.isinf(girth(path(5)))


@pytest.mark.parametrize(
    ("graph", "free"),
    [(cycle(6), True), (complete(4), False), (petersen(), True)],
)
def test_bs_check(graph: Graph, free: bool) -> None:
    report = bs_check(graph, 2)
    assert report.c2k_free is free
    assert report.holds
    assert report.edge_bound == pytest.approx(200 * graph.vertex_count**1.5)


@settings(max_examples=40, deadline=None)
@given(
    n=st.integers(min_value=4, max_value=12),
    seed=st.integers(min_value=0, max_value=10_000),
    k=st.integers(min_value=2, max_value=3),
)
def test_bs_check_holds_on_random_graphs(n: int, seed: int, k: int) -> None:
    assert bs_check(random_graph(n, 0.4, seed), k).holds
