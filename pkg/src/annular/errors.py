"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "BudgetExceededError",
    "CodeParseError",
    "ReferenceMismatchError",
]


class CodeParseError(ValueError):
    """A matching code string does not follow the grammar."""


class BudgetExceededError(RuntimeError):
    """An enumeration was refused because it would exceed its budget."""


class ReferenceMismatchError(RuntimeError):
    """A fetched reference sequence disagrees with the bundled snapshot."""
