"""Shared exception types."""

from __future__ import annotations

__all__ = ["GuardExceededError", "PostconditionError"]


class GuardExceededError(ValueError):
    """An input exceeds the size guard of an exact exponential routine."""


class PostconditionError(RuntimeError):
    """An internally verified guarantee failed; indicates a bug, not bad input."""
