from __future__ import annotations

import numpy as np
import pytest
from crossing_lab.algorithms.crossing import (
    CrossingFixture,
    KMaxTooLargeError,
    SearchBudgetExceededError,
    exact_crossing_number,
    fixture_registry,
    planarize,
    search_lower_bound,
)
from crossing_lab.algorithms.drawings import is_planar
from crossing_lab.algorithms.generators import (
    complete,
    complete_bipartite,
    grid,
    path,
    random_graph,
)
from crossing_lab.core.configuration import SearchLimits
from crossing_lab.core.graph import Graph

FIXTURES = {fixture.name: fixture for fixture in fixture_registry()}
FAST = sorted(name for name in FIXTURES if name not in {"K6"})


@pytest.mark.parametrize("name", FAST)
def test_fixture_reproduced(name: str) -> None:
    fixture: CrossingFixture = FIXTURES[name]
    result = exact_crossing_number(fixture.graph, 3)
    assert result.value == fixture.crossing_number
    assert result.certificate is not None
    assert result.certificate.crossing_count == fixture.crossing_number
    assert result.certificate.is_sound()


@pytest.mark.slow
def test_k6_reproduced() -> None:
    result = exact_crossing_number(complete(6), 3)
    assert result.value == 3
    assert result.certificate is not None
    assert result.certificate.is_sound()


def test_registry_contents() -> None:
    assert FIXTURES["K5"].crossing_number == 1
    assert FIXTURES["grid(4)"].crossing_number == 0
    assert FIXTURES["K6"].crossing_number == 3
    assert len(FIXTURES) >= 8


def test_planar_graphs_settle_at_zero() -> None:
    for graph in (complete(4), grid(3)[0], path(4)):
        assert is_planar(graph)
        assert exact_crossing_number(graph, 0).value == 0


def sparse_random_graphs(count: int, seed: int) -> list[Graph]:
    rng = np.random.default_rng(seed)
    graphs: list[Graph] = []
    while len(graphs) < count:
        n = int(rng.integers(4, 9))
        graph = random_graph(n, float(rng.uniform(0.2, 0.8)), int(rng.integers(0, 1_000_000)))
        if 0 < graph.e <= 12:
            graphs.append(graph)
    return graphs


RANDOM_GRAPHS = sparse_random_graphs(12, seed=11)


@pytest.mark.parametrize("name", FAST)
def test_planarity_matches_zero_crossings_on_fixtures(name: str) -> None:
    graph = FIXTURES[name].graph
    assert is_planar(graph) == (exact_crossing_number(graph, 0).value == 0)


@pytest.mark.parametrize("graph", RANDOM_GRAPHS)
def test_planarity_matches_zero_crossings_on_random_graphs(graph: Graph) -> None:
    result = exact_crossing_number(graph, 4)
    assert result.value is not None
    assert is_planar(graph) == (result.value == 0)


@pytest.mark.parametrize("name", FAST)
def test_subgraphs_do_not_gain_crossings(name: str) -> None:
    fixture = FIXTURES[name]
    edges = fixture.graph.edge_list()
    for removed in (edges[:1], edges[::3]):
        sub = fixture.graph.without_edges(removed)
        value = exact_crossing_number(sub, fixture.crossing_number).value
        assert value is not None
        assert value <= fixture.crossing_number


@pytest.mark.parametrize("graph", RANDOM_GRAPHS)
def test_random_subgraphs_do_not_gain_crossings(graph: Graph) -> None:
    full = exact_crossing_number(graph, 4).value
    assert full is not None
    sub = graph.without_edges(graph.edge_list()[-1:])
    value = exact_crossing_number(sub, full).value
    assert value is not None and value <= full


def test_exceeds_k_max() -> None:
    result = exact_crossing_number(complete(5), 0)
    assert result.value is None
    assert result.exceeds
    assert result.to_dict()["value"] == "exceeds 0"


def test_k_max_guard() -> None:
    with pytest.raises(KMaxTooLargeError):
        exact_crossing_number(complete(4), 5)


def test_budget_exhaustion_reports_stats() -> None:
    limits = SearchLimits(planarity_test_budget=1)
    with pytest.raises(SearchBudgetExceededError) as info:
        exact_crossing_number(complete(6), 3, limits=limits)
    assert info.value.stats.planarity_tests == 1
    assert info.value.stats.levels_searched == [3]


def test_lower_bound_from_girth() -> None:
    assert search_lower_bound(complete(6)) == 3
    assert search_lower_bound(complete_bipartite(3, 4)) == 2
    assert search_lower_bound(path(5)) == 0


def test_certificate_is_deterministic() -> None:
    first = exact_crossing_number(complete_bipartite(3, 3), 2)
    second = exact_crossing_number(complete_bipartite(3, 3), 2)
    assert first.certificate == second.certificate
    assert first.stats.planarity_tests == second.stats.planarity_tests


def test_planarize_single_crossing() -> None:
    planarization = planarize(complete(5), [((0, 2), (1, 3))])
    assert planarization.dummy(0) == 5
    assert planarization.derived_graph.e == 12
    assert planarization.is_sound()


def test_adjacent_pair_is_not_sound() -> None:
    planarization = planarize(complete(5), [((0, 1), (1, 2))])
    assert not planarization.is_sound()


def test_result_serialises_certificate() -> None:
    payload = exact_crossing_number(complete(5), 1).to_dict()
    assert payload["value"] == 1
    assert len(payload["certificate"]["crossings"]) == 1
    assert payload["stats"]["lower_bound"] == 1
