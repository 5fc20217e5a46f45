"""Resolution of corpus entries: generator specs or edge-list files."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from ..algorithms.generators import (
    BlowupSpec,
    GeneratorError,
    blowup,
    classic,
    grid,
    random_graph,
)
from ..core.graph import Graph
from ..data.structures import Drawing
from .edgelist import read_coordinates, read_edge_list

__all__ = ["CorpusEntry", "resolve_source", "resolve_corpus"]

_CALL = re.compile(r"^(?P<name>[a-z_]+)\((?P<args>[^()]*(?:\([^()]*\)[^()]*)*)\)$")
_COMPLETE = re.compile(r"^k_?\{?(?P<s>\d+)(?:,(?P<t>\d+))?\}?$")
_SHORT = re.compile(r"^(?P<kind>[cp])(?P<n>\d+)$")


@dataclass(frozen=True)
class CorpusEntry:
    """A named graph plus, when known, a drawing and the grid size it came from."""

    name: str
    graph: Graph
    drawing: Drawing | None = None
    metadata: dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def grid_size(self) -> int | None:
        value = self.metadata.get("grid_n")
        return int(value) if value is not None else None


def _split_args(text: str) -> list[str]:
    parts, depth, current = [], 0, []
    for char in text:
        if char == "," and depth == 0:
            parts.append("".join(current).strip())
            current = []
            continue
        depth += (char == "(") - (char == ")")
        current.append(char)
    if current:
        parts.append("".join(current).strip())
    return [part for part in parts if part]


def _from_call(name: str, args: list[str], spec: str) -> CorpusEntry:
    if name == "grid":
        n = int(args[0])
        graph, drawing = grid(n)
        return CorpusEntry(spec, graph, drawing, {"grid_n": n})
    if name == "random":
        n, p = int(args[0]), float(args[1])
        seed = int(args[2]) if len(args) > 2 else 0
        return CorpusEntry(spec, random_graph(n, p, seed))
    if name == "blowup":
        base = resolve_source(args[0]).graph
        spec_value = BlowupSpec.first_edges(base, int(args[1]), int(args[2]))
        return CorpusEntry(spec, blowup(spec_value))
    return CorpusEntry(spec, classic(name, *(int(arg) for arg in args)))


def resolve_source(spec: str, *, base_dir: Path | None = None) -> CorpusEntry:
    """Turn ``grid(4)``, ``K5``, ``K3,3``, ``C6``, ``petersen``, ``random(20,0.3,7)``,
    ``blowup(grid(5),1,3)`` or an edge-list path into a graph."""

    text = spec.strip()
    lowered = text.lower().replace(" ", "")
    if match := _CALL.match(lowered):
        try:
            return _from_call(match["name"], _split_args(match["args"]), text)
        except (ValueError, IndexError) as exc:
            raise GeneratorError(f"Malformed generator spec '{spec}': {exc}") from exc
    if match := _COMPLETE.match(lowered):
        if match["t"] is None:
            return CorpusEntry(text, classic("complete", int(match["s"])))
        return CorpusEntry(text, classic("complete_bipartite", int(match["s"]), int(match["t"])))
    if match := _SHORT.match(lowered):
        kind = "cycle" if match["kind"] == "c" else "path"
        return CorpusEntry(text, classic(kind, int(match["n"])))
    if lowered == "petersen":
        return CorpusEntry(text, classic("petersen"))

    path = Path(text)
    if base_dir is not None and not path.is_absolute():
        path = base_dir / path
    if not path.exists():
        raise GeneratorError(f"'{spec}' is neither a generator spec nor an existing file")
    graph = read_edge_list(path)
    coords = path.with_suffix(".coords")
    drawing = read_coordinates(coords, graph) if coords.exists() else None
    return CorpusEntry(path.stem, graph, drawing, {"path": str(path)})


def resolve_corpus(specs: list[str], *, base_dir: Path | None = None) -> list[CorpusEntry]:
    return [resolve_source(spec, base_dir=base_dir) for spec in specs]
