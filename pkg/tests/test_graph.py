from __future__ import annotations

import networkx as nx
import pytest
from crossing_lab.algorithms.generators import complete, path, random_graph
from crossing_lab.core.errors import InvalidParameterError
from crossing_lab.core.graph import (
    Graph,
    GraphError,
    InvalidVertexError,
    SelfLoopError,
    VertexSet,
)
from hypothesis import given, settings
from hypothesis import strategies as st


def test_edges_are_normalised_and_deduplicated() -> None:
    graph = Graph.from_edge_list([(1, 0), (0, 1), (2, 1)])
    assert graph.vertex_count == 3
    assert graph.edge_list() == [(0, 1), (1, 2)]


def test_self_loop_rejected() -> None:
    with pytest.raises(SelfLoopError):
        Graph.from_edge_list([(2, 2)])


def test_negative_vertex_rejected() -> None:
    with pytest.raises(InvalidVertexError):
        Graph.from_edge_list([(-1, 0)])


def test_unnormalised_edge_rejected() -> None:
    with pytest.raises(GraphError):
        Graph(vertex_count=2, edges=frozenset({(1, 0)}))


def test_vertex_out_of_range() -> None:
    with pytest.raises(InvalidVertexError):
        Graph.from_edge_list([(0, 3)], vertex_count=3)


def test_isolated_vertices_kept_with_explicit_count() -> None:
    graph = Graph.from_edge_list([(0, 1)], vertex_count=4)
    assert graph.n == 4
    assert graph.degree_sequence() == [1, 1, 0, 0]


def test_degree_power_sum_exact_for_integer_t() -> None:
    total = complete(4).degree_power_sum(2)
    assert total == 36
    assert isinstance(total, int)
    assert path(4).degree_power_sum(0.5) == pytest.approx(2 + 2 * 2**0.5)


def test_degree_power_sum_rejects_nonpositive_t() -> None:
    with pytest.raises(InvalidParameterError):
        path(3).degree_power_sum(0)


def test_induced_subgraph_relabels() -> None:
    sub, mapping = path(4).induced_subgraph(VertexSet.of([3, 1, 2]))
    assert mapping == (1, 2, 3)
    assert sub.edge_list() == [(0, 1), (1, 2)]


def test_components_largest_first() -> None:
    graph = Graph.from_edge_list([(0, 1), (2, 3), (3, 4)], vertex_count=6)
    components = graph.components()
    assert [members.members for _, members in components] == [(2, 3, 4), (0, 1), (5,)]
    assert [component.e for component, _ in components] == [2, 1, 0]


def test_without_edges() -> None:
    graph = complete(4).without_edges([(0, 1), (2, 3)])
    assert graph.e == 4
    assert not graph.has_edge(1, 0)


def test_vertex_set_membership() -> None:
    members = VertexSet.of([3, 1, 3])
    assert members.members == (1, 3)
    assert 3 in members
    assert 2 not in members
    assert "3" not in members


def test_vertex_set_checks_host() -> None:
    with pytest.raises(InvalidVertexError):
        VertexSet.of([5], path(3))


def test_networkx_roundtrip_uses_sorted_labels() -> None:
    source = nx.Graph([("b", "c"), ("a", "b")])
    graph = Graph.from_networkx(source)
    assert graph.edge_list() == [(0, 1), (1, 2)]
    assert Graph.from_networkx(graph.to_networkx()) == graph


@st.composite
def random_graphs(draw: st.DrawFn) -> Graph:
    n = draw(st.integers(min_value=0, max_value=20))
    p = draw(st.floats(min_value=0.0, max_value=1.0))
    return random_graph(n, p, draw(st.integers(min_value=0, max_value=100_000)))


@settings(max_examples=150, deadline=None)
@given(graph=random_graphs())
def test_edge_list_roundtrip(graph: Graph) -> None:
    rebuilt = Graph.from_edge_list(graph.edges, vertex_count=graph.vertex_count)
    assert rebuilt == graph
    assert Graph.from_edge_list(graph.edge_list(), vertex_count=graph.vertex_count) == graph


@settings(max_examples=150, deadline=None)
@given(graph=random_graphs())
def test_components_partition_vertices_and_edges(graph: Graph) -> None:
    components = graph.components()
    covered = [v for _, members in components for v in members]
    assert sorted(covered) == list(range(graph.vertex_count))
    assert sum(component.e for component, _ in components) == graph.e
    assert sum(component.n for component, _ in components) == graph.n
    sizes = [component.n for component, _ in components]
    assert sizes == sorted(sizes, reverse=True)


@settings(max_examples=150, deadline=None)
@given(graph=random_graphs())
def test_handshake_identity(graph: Graph) -> None:
    assert graph.degree_power_sum(1) == 2 * graph.e
    assert sum(graph.degree_sequence()) == 2 * graph.e


@settings(max_examples=150, deadline=None)
@given(graph=random_graphs())
def test_induced_subgraph_on_all_vertices_is_identity(graph: Graph) -> None:
    sub, ids = graph.induced_subgraph(VertexSet.of(range(graph.vertex_count)))
    assert sub == graph
    assert ids == tuple(range(graph.vertex_count))
