"""Edge-list and coordinate file formats."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from ..core.graph import Graph, GraphError
from ..data.structures import Drawing

__all__ = [
    "ParseError",
    "format_edge_list",
    "parse_coordinates",
    "parse_edge_list",
    "read_coordinates",
    "read_edge_list",
    "write_coordinates",
    "write_edge_list",
]


class ParseError(RuntimeError):
    """Raised when a graph or coordinate file is malformed."""

    def __init__(self, source: str, line: int, message: str) -> None:
        super().__init__(f"{source}:{line}: {message}")
        self.source = source
        self.line = line


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((number, stripped.split()))
    return lines


def parse_edge_list(text: str, *, source: str = "<string>") -> Graph:
    """One edge per line as two ids; an optional ``n <count>`` header fixes the vertex count."""

    vertex_count: int | None = None
    pairs: list[tuple[int, int]] = []
    for number, fields in _content_lines(text):
        if fields[0] == "n":
            if vertex_count is not None or pairs or len(fields) != 2:
                raise ParseError(source, number, "'n <count>' must be a single leading header")
            try:
                vertex_count = int(fields[1])
            except ValueError as exc:
                raise ParseError(source, number, f"bad vertex count {fields[1]!r}") from exc
            continue
        if len(fields) != 2:
            raise ParseError(source, number, f"expected two vertex ids, got {len(fields)} fields")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError as exc:
            raise ParseError(source, number, f"non-integer vertex id in {fields}") from exc
        if u < 0 or v < 0:
            raise ParseError(source, number, "vertex ids must be nonnegative")
        pairs.append((u, v))
    try:
        return Graph.from_edge_list(pairs, vertex_count=vertex_count)
    except GraphError as exc:
        raise ParseError(source, 0, str(exc)) from exc


def read_edge_list(path: Path) -> Graph:
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(str(path), 0, f"cannot read file: {exc}") from exc
    return parse_edge_list(text, source=str(path))


def format_edge_list(graph: Graph) -> str:
    lines = [f"n {graph.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.edge_list())
    return "\n".join(lines) + "\n"


def write_edge_list(graph: Graph, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_edge_list(graph), encoding="utf-8")


def parse_coordinates(text: str, graph: Graph, *, source: str = "<string>") -> Drawing:
    """Lines ``id x y`` with rationals written as ``p/q`` or integers."""

    points: dict[int, tuple[Fraction, Fraction]] = {}
    for number, fields in _content_lines(text):
        if len(fields) != 3:
            raise ParseError(source, number, "expected 'id x y'")
        try:
            vertex = int(fields[0])
            point = (Fraction(fields[1]), Fraction(fields[2]))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(source, number, f"bad coordinate line {fields}") from exc
        if not 0 <= vertex < graph.vertex_count:
            raise ParseError(source, number, f"vertex {vertex} is not in the graph")
        if vertex in points:
            raise ParseError(source, number, f"vertex {vertex} placed twice")
        points[vertex] = point
    missing = [v for v in range(graph.vertex_count) if v not in points]
    if missing:
        raise ParseError(source, 0, f"no coordinates for vertices {missing[:10]}")
    return Drawing(host=graph, coordinates=tuple(points[v] for v in range(graph.vertex_count)))


def read_coordinates(path: Path, graph: Graph) -> Drawing:
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(str(path), 0, f"cannot read file: {exc}") from exc
    return parse_coordinates(text, graph, source=str(path))


def write_coordinates(drawing: Drawing, path: Path) -> None:
    lines = [f"{v} {x} {y}" for v, (x, y) in enumerate(drawing.coordinates)]
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
