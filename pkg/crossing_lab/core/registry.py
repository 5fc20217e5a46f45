"""Registry for verification checks."""

from __future__ import annotations

from collections.abc import Iterable, Mapping, MutableMapping, Sequence
from dataclasses import asdict, dataclass
from typing import TYPE_CHECKING, Any, Protocol

if TYPE_CHECKING:
    from ..algorithms.bisection import Bisection
    from ..io.corpus import CorpusEntry
    from .configuration import SearchLimits
    from .graph import Graph

__all__ = [
    "CheckContext",
    "CheckDefinition",
    "CheckHandler",
    "CheckMetadata",
    "CheckOutcome",
    "CheckRegistry",
    "ParameterSpec",
    "RegistryError",
    "registry",
]


class RegistryError(RuntimeError):
    """Raised when check handlers cannot be resolved."""


class CheckContext(Protocol):
    @property
    def params(self) -> Mapping[str, Any]: ...

    @property
    def state(self) -> MutableMapping[str, Any]: ...

    @property
    def limits(self) -> SearchLimits: ...

    @property
    def seed(self) -> int: ...

    def crossing_number(self, graph: Graph) -> int | None: ...

    def exact_bisection(self, graph: Graph) -> Bisection | None: ...


@dataclass(frozen=True, slots=True)
class CheckOutcome:
    """One evaluated inequality; ``skipped`` outcomes carry a reason instead of values."""

    check: str
    lhs: float | None = None
    rhs: float | None = None
    holds: bool | None = None
    reason: str = ""

    @classmethod
    def skip(cls, check: str, reason: str) -> CheckOutcome:
        return cls(check=check, reason=reason)

    @classmethod
    def compare(cls, check: str, lhs: float, rhs: float, holds: bool | None = None) -> CheckOutcome:
        return cls(check=check, lhs=lhs, rhs=rhs, holds=lhs <= rhs if holds is None else holds)

    @property
    def skipped(self) -> bool:
        return self.holds is None


class CheckHandler(Protocol):
    def __call__(self, entry: CorpusEntry, context: CheckContext) -> Sequence[CheckOutcome]: ...


@dataclass(frozen=True)
class ParameterSpec:
    name: str
    param_type: str
    default: Any = None
    description: str = ""


@dataclass(frozen=True)
class CheckMetadata:
    name: str
    label: str
    module: str
    parameters: tuple[ParameterSpec, ...] = ()
    description: str = ""
    requires_exact: tuple[str, ...] = ()
    tags: tuple[str, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass
class CheckDefinition:
    handler: CheckHandler
    description: str = ""
    metadata: CheckMetadata | None = None


class CheckRegistry:
    def __init__(self) -> None:
        self._handlers: dict[str, CheckDefinition] = {}

    def register(
        self,
        name: str,
        handler: CheckHandler,
        *,
        description: str = "",
        metadata: CheckMetadata | None = None,
    ) -> None:
        key = name.lower()
        if key in self._handlers:
            raise RegistryError(f"Check already registered for '{name}'")
        self._handlers[key] = CheckDefinition(
            handler=handler,
            description=description,
            metadata=metadata,
        )

    def get(self, name: str) -> CheckDefinition:
        key = name.lower()
        if key not in self._handlers:
            raise RegistryError(f"No check registered for '{name}'")
        return self._handlers[key]

    def describe(self, name: str) -> CheckMetadata:
        definition = self.get(name)
        if definition.metadata is None:
            raise RegistryError(f"Metadata not available for '{name}'")
        return definition.metadata

    def metadata(self) -> Iterable[CheckMetadata]:
        for definition in self._handlers.values():
            if definition.metadata is not None:
                yield definition.metadata

    def names(self) -> list[str]:
        return sorted(self._handlers)

    def __contains__(self, name: str) -> bool:
        return name.lower() in self._handlers


registry = CheckRegistry()
