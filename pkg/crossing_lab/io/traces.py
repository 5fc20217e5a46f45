"""JSON persistence for decomposition traces."""

from __future__ import annotations

import json
from collections.abc import Mapping
from fractions import Fraction
from pathlib import Path
from typing import Any

from ..algorithms.bisection import Exactness
from ..algorithms.bounds import BoundParams
from ..algorithms.decomposition import (
    BisectionRecord,
    BisectorPolicy,
    ComponentSummary,
    DecompositionTrace,
    LevelRecord,
    SplitResult,
)
from ..core.graph import Graph

__all__ = ["TraceError", "TraceSerializer"]


class TraceError(RuntimeError):
    """Raised when a trace file cannot be read or written."""


def _edges(payload: Any) -> list[tuple[int, int]]:
    return [(int(u), int(v)) for u, v in payload]


class TraceSerializer:
    VERSION = "1.0"

    @classmethod
    def to_json(cls, trace: DecompositionTrace) -> str:
        payload = {"version": cls.VERSION, **trace.to_dict()}
        return json.dumps(payload, indent=2)

    @classmethod
    def from_json(cls, data: str) -> DecompositionTrace:
        try:
            raw = json.loads(data)
            return cls._trace_from_dict(raw)
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise TraceError(f"Malformed trace: {exc}") from exc

    @classmethod
    def save(cls, trace: DecompositionTrace, path: Path) -> Path:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(cls.to_json(trace) + "\n", encoding="utf-8")
        except OSError as exc:
            raise TraceError(f"Cannot write trace to {path}: {exc}") from exc
        return path

    @classmethod
    def load(cls, path: Path) -> DecompositionTrace:
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise TraceError(f"Cannot read trace {path}: {exc}") from exc
        return cls.from_json(text)

    @staticmethod
    def _split_from_dict(payload: Mapping[str, Any]) -> SplitResult:
        groups = tuple(tuple(int(x) for x in group) for group in payload["groups"])
        owner = [0] * int(payload["N"])
        for v, ids in enumerate(groups):
            for x in ids:
                owner[x] = v
        return SplitResult(
            original=Graph.from_edge_list(_edges(payload["edges"]), vertex_count=int(payload["n"])),
            split_graph=Graph.from_edge_list(
                _edges(payload["split_edges"]), vertex_count=int(payload["N"])
            ),
            d_bar=Fraction(payload["d_bar"]),
            groups=groups,
            assignment=tuple(tuple(int(w) for w in items) for items in payload["assignment"]),
            owner=tuple(owner),
            neighbour_order=str(payload.get("neighbour_order", "id")),
        )

    @staticmethod
    def _level_from_dict(payload: Mapping[str, Any]) -> LevelRecord:
        return LevelRecord(
            level=int(payload["i"]),
            components=tuple(
                ComponentSummary(n=int(item["n"]), e=int(item["e"]), ids=tuple(item["ids"]))
                for item in payload["components"]
            ),
            m=int(payload["m_i"]),
            deleted=int(payload["deleted"]),
            bisections=tuple(
                BisectionRecord(
                    component=int(item["component"]),
                    exactness=Exactness(item["exactness"]),
                    part_one=tuple(item["part_one"]),
                    part_two=tuple(item["part_two"]),
                    cut_edges=tuple(_edges(item["cut"])),
                )
                for item in payload.get("bisections", [])
            ),
        )

    @classmethod
    def _trace_from_dict(cls, raw: Mapping[str, Any]) -> DecompositionTrace:
        version = raw.get("version", cls.VERSION)
        if version != cls.VERSION:
            raise TraceError(f"Unsupported trace version {version!r}")
        params = raw["params"]
        return DecompositionTrace(
            split=cls._split_from_dict(raw["split"]),
            params=BoundParams(
                A=float(params["A"]),
                alpha=float(params["alpha"]),
                c=float(params["c"]),
                c_prime=float(params["c_prime"]),
            ),
            levels=tuple(cls._level_from_dict(level) for level in raw["levels"]),
            k=int(raw["k"]),
            sigma=int(raw["sigma"]),
            final_edge_count=int(raw["final_edge_count"]),
            preimages=tuple(tuple(ids) for ids in raw["preimages"]),
            policy=BisectorPolicy(raw["policy"]),
            log_threshold=float(raw["log_threshold"]),
            diagnostics=tuple(raw.get("diagnostics", [])),
        )
