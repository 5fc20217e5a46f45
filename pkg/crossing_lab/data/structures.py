"""Geometric data structures used by crossing-lab."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from ..core.graph import Graph

__all__ = ["Drawing", "Point"]

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Drawing:
    """Straight-line drawing of ``host`` with exact rational coordinates."""

    host: Graph
    coordinates: tuple[Point, ...]
    metadata: dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if len(self.coordinates) != self.host.vertex_count:
            raise ValueError(
                f"Drawing needs {self.host.vertex_count} coordinates, "
                f"got {len(self.coordinates)}"
            )

    @classmethod
    def from_pairs(
        cls,
        host: Graph,
        pairs: Iterable[Sequence[int | str | Fraction]],
    ) -> Drawing:
        points = tuple((Fraction(x), Fraction(y)) for x, y in pairs)
        return cls(host=host, coordinates=points)

    def point(self, vertex: int) -> Point:
        return self.coordinates[vertex]

    def segment(self, u: int, v: int) -> tuple[Point, Point]:
        return self.coordinates[u], self.coordinates[v]

    def transformed(
        self,
        a: Fraction,
        b: Fraction,
        c: Fraction,
        d: Fraction,
        dx: Fraction = Fraction(0),
        dy: Fraction = Fraction(0),
    ) -> Drawing:
        """Apply ``(x, y) -> (a x + b y + dx, c x + d y + dy)``."""

        points = tuple((a * x + b * y + dx, c * x + d * y + dy) for x, y in self.coordinates)
        return Drawing(host=self.host, coordinates=points, metadata=dict(self.metadata))
