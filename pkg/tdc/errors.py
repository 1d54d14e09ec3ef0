"""Exception hierarchy for the tdc workbench.

Commands map these onto exit codes: input/domain errors exit 2, an exhausted
node budget exits 3, anything else exits 1.
"""

from __future__ import annotations


class TdcError(Exception):
    """Base class for every error raised by the tdc package."""


class InputError(TdcError, ValueError):
    """Malformed or out-of-range input."""


class ParseError(InputError):
    """A DIMACS, JSON or family-shorthand document could not be parsed."""

    def __init__(self, message: str, line: int | None = None, token: str | None = None) -> None:
        self.line = line
        self.token = token
        self.message = message
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class DomainError(TdcError, ValueError):
    """Well-formed input outside the mathematical domain of an operation."""


class BudgetExceeded(TdcError):
    """The exact search ran out of nodes before settling the value."""

    def __init__(self, nodes: int, lower: int | None = None, upper: int | None = None) -> None:
        self.nodes = nodes
        self.lower = lower
        self.upper = upper
        super().__init__(f"node budget exhausted after {nodes} nodes")


class ConstructionError(TdcError, RuntimeError):
    """A constructive bound produced a coloring that fails re-validation."""
