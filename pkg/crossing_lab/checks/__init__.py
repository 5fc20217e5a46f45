"""Verification checks evaluated by the suite runner."""

from __future__ import annotations

from ..core.registry import CheckRegistry, registry
from .bisection import register_bisection_checks
from .bounds import register_bound_checks
from .decomposition import register_decomposition_checks

__all__ = [
    "CHECK_NAMES",
    "register_all_checks",
    "register_bisection_checks",
    "register_bound_checks",
    "register_decomposition_checks",
]

CHECK_NAMES = ("pss", "jensen", "t3", "bs", "bounds", "trace", "split")


def register_all_checks(check_registry: CheckRegistry | None = None) -> CheckRegistry:
    """Register every built-in check the registry does not already hold."""

    target = check_registry or registry
    builtin = CheckRegistry()
    register_bisection_checks(builtin)
    register_bound_checks(builtin)
    register_decomposition_checks(builtin)
    for name in builtin.names():
        if name in target:
            continue
        definition = builtin.get(name)
        target.register(
            name,
            definition.handler,
            description=definition.description,
            metadata=definition.metadata,
        )
    return target
