from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import pytest
from crossing_lab.algorithms.generators import grid, petersen
from crossing_lab.io.edgelist import (
    ParseError,
    format_edge_list,
    parse_coordinates,
    parse_edge_list,
    read_coordinates,
    read_edge_list,
    write_coordinates,
    write_edge_list,
)


def test_parse_with_header_and_comments() -> None:
    text = "# triangle plus an isolated vertex\nn 4\n0 1\n1 2\n\n2 0\n"
    graph = parse_edge_list(text)
    assert graph.vertex_count == 4
    assert graph.edge_list() == [(0, 1), (0, 2), (1, 2)]


def test_vertex_count_inferred_without_header() -> None:
    assert parse_edge_list("0 3\n").vertex_count == 4


@pytest.mark.parametrize(
    ("text", "line"),
    [("0 1\nn 3\n", 2), ("0 1 2\n", 1), ("0 x\n", 1), ("0 -1\n", 1), ("n three\n", 1)],
)
def test_malformed_lines_report_position(text: str, line: int) -> None:
    with pytest.raises(ParseError) as info:
        parse_edge_list(text, source="bad.txt")
    assert info.value.line == line
    assert "bad.txt" in str(info.value)


def test_self_loop_is_a_parse_error() -> None:
    with pytest.raises(ParseError):
        parse_edge_list("1 1\n")


def test_file_roundtrip(tmp_path: Path) -> None:
    graph = petersen()
    target = tmp_path / "graphs" / "petersen.txt"
    write_edge_list(graph, target)
    assert read_edge_list(target) == graph
    assert target.read_text(encoding="utf-8") == format_edge_list(graph)


def test_missing_file(tmp_path: Path) -> None:
    with pytest.raises(ParseError):
        read_edge_list(tmp_path / "absent.txt")


def test_coordinates_accept_rationals() -> None:
    graph = parse_edge_list("0 1\n")
    drawing = parse_coordinates("0 1/2 3\n1 -2 7/4\n", graph)
    assert drawing.point(0) == (Fraction(1, 2), Fraction(3))
    assert drawing.point(1) == (Fraction(-2), Fraction(7, 4))


@pytest.mark.parametrize("text", ["0 1 1\n", "0 1 1\n0 2 2\n1 0 0\n", "0 1\n1 0 0\n", "0 a 1\n"])
def test_bad_coordinates(text: str) -> None:
    with pytest.raises(ParseError):
        parse_coordinates(text, parse_edge_list("0 1\n"))


def test_coordinate_file_roundtrip(tmp_path: Path) -> None:
    graph, drawing = grid(3)
    target = tmp_path / "grid.coords"
    write_coordinates(drawing, target)
    assert read_coordinates(target, graph).coordinates == drawing.coordinates


def test_undecodable_files_are_parse_errors(tmp_path: Path) -> None:
    graph_path = tmp_path / "bad.txt"
    graph_path.write_bytes(b"0 1\n\xff\xfe 2\n")
    with pytest.raises(ParseError) as excinfo:
        read_edge_list(graph_path)
    assert excinfo.value.source == str(graph_path)

    coords_path = tmp_path / "bad.coords"
    coords_path.write_bytes(b"0 \xff 1\n")
    with pytest.raises(ParseError):
        read_coordinates(coords_path, petersen())
