"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`EccxError`,
so callers (and the CLI) can separate bad input from bugs.
"""

from __future__ import annotations


class EccxError(Exception):
    """Base class for all package errors."""


class ParameterError(EccxError, ValueError):
    """Invalid parameters for a graph family or an operation."""


class ParseError(EccxError, ValueError):
    """Malformed graph6 or edge-list input."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)


class StructureError(EccxError, ValueError):
    """The operation is undefined for this graph shape (e.g. an edgeless operand)."""


class ConnectivityError(EccxError, ValueError):
    """A connected graph was required."""


class ContractError(EccxError, ValueError):
    """An input violated a documented precondition."""


class NumericError(EccxError, ArithmeticError):
    """An iterative numerical method did not converge."""


class PartitionError(ContractError):
    """The partition handed to ``quotient`` is not equitable."""


class HypothesisError(EccxError, ValueError):
    """Operands fall outside the hypotheses of a closed-form spectrum formula."""
