"""Errors shared by several algorithm modules."""

from __future__ import annotations

__all__ = ["InvalidParameterError", "TooLargeError"]


class InvalidParameterError(ValueError):
    """Raised when a numeric parameter is outside its documented range."""


class TooLargeError(RuntimeError):
    """Raised when an exhaustive search is asked to exceed its size cap."""

    def __init__(self, what: str, size: int, cap: int) -> None:
        super().__init__(f"{what}: size {size} exceeds exhaustive cap {cap}")
        self.size = size
        self.cap = cap
