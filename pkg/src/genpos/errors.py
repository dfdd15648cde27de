"""Exception types shared across the package."""

from __future__ import annotations


class GenposError(Exception):
    """Base class for all package-specific errors."""


class ParseError(GenposError, ValueError):
    """Malformed textual input (edge lists, graph6, generator specs)."""


class DomainError(GenposError, ValueError):
    """A precondition on the input graph or parameters is violated."""


class ScaleError(GenposError, ValueError):
    """The instance is too large for a routine that only targets tiny scale."""


class ContractError(GenposError, RuntimeError):
    """An operation was invoked out of its documented call order."""


class BudgetExceededError(GenposError, RuntimeError):
    """An exact search ran out of its node or wall-clock budget.

    ``lower_bound`` is the best general position set size proven so far;
    it is only a lower bound, never the answer.
    """

    def __init__(self, message: str, lower_bound: int, witness=None):
        super().__init__(message)
        self.lower_bound = lower_bound
        self.witness = witness
