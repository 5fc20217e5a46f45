from __future__ import annotations

from pathlib import Path

import pytest
from crossing_lab.algorithms.generators import (
    GeneratorError,
    complete,
    complete_bipartite,
    cycle,
    grid,
    path,
    petersen,
    random_graph,
)
from crossing_lab.io.corpus import resolve_corpus, resolve_source
from crossing_lab.io.edgelist import write_coordinates, write_edge_list


def test_grid_spec_carries_drawing() -> None:
    entry = resolve_source("grid(4)")
    assert entry.graph == grid(4)[0]
    assert entry.drawing is not None
    assert entry.grid_size == 4


@pytest.mark.parametrize(
    ("spec", "expected"),
    [
        ("K5", complete(5)),
        ("K3,3", complete_bipartite(3, 3)),
        ("K_{3,4}", complete_bipartite(3, 4)),
        ("C6", cycle(6)),
        ("P4", path(4)),
        ("petersen", petersen()),
        ("cycle(5)", cycle(5)),
        ("random(20, 0.3, 7)", random_graph(20, 0.3, 7)),
    ],
)
def test_named_specs(spec: str, expected: object) -> None:
    entry = resolve_source(spec)
    assert entry.graph == expected
    assert entry.name == spec
    assert entry.grid_size is None


def test_blowup_spec() -> None:
    entry = resolve_source("blowup(grid(5),1,3)")
    assert entry.graph.vertex_count == 29


@pytest.mark.parametrize("spec", ["grid(x)", "nonsense", "grid()", "dodecahedron(3)"])
def test_bad_specs(spec: str) -> None:
    with pytest.raises(GeneratorError):
        resolve_source(spec)


def test_file_entry_with_coordinates(tmp_path: Path) -> None:
    graph, drawing = grid(3)
    write_edge_list(graph, tmp_path / "g3.txt")
    write_coordinates(drawing, tmp_path / "g3.coords")
    entry = resolve_source("g3.txt", base_dir=tmp_path)
    assert entry.name == "g3"
    assert entry.graph == graph
    assert entry.drawing is not None
    assert entry.drawing.coordinates == drawing.coordinates


def test_resolve_corpus_keeps_order() -> None:
    entries = resolve_corpus(["petersen", "K5", "grid(2)"])
    assert [entry.name for entry in entries] == ["petersen", "K5", "grid(2)"]
