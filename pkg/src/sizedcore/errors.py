"""Exception types shared across the package."""

from __future__ import annotations


class GraphParseError(ValueError):
    """Raised when an edge-list line cannot be parsed.

    ``line`` is the 1-based line number of the offending input line.
    """

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line


class EmptyGraphError(ValueError):
    """Raised when an edge list yields a graph with no nodes."""


class BudgetExceededError(RuntimeError):
    """Raised when the exact solver would enumerate more subsets than allowed."""

    def __init__(self, message: str, required: int, budget: int):
        super().__init__(message)
        self.required = required
        self.budget = budget
