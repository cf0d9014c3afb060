"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class GeomGridError(Exception):
    """Base class for domain errors (CLI exit status 1)."""


class MatrixError(GeomGridError, ValueError):
    pass


class EmptyMatrix(MatrixError):
    pass


class RaggedRows(MatrixError):
    pass


class BadToken(MatrixError):
    def __init__(self, line: int, col: int, token: str):
        super().__init__(f"bad token {token!r} at line {line}, column {col}")
        self.line = line
        self.col = col
        self.token = token


class TooLarge(GeomGridError):
    pass


class OutOfBounds(MatrixError, IndexError):
    pass


class NegativeCycle(GeomGridError):
    """Raised when a figure has no consistent orientation.

    ``cycle`` is a closed vertex walk witnessing the negative cycle; the
    first vertex is not repeated at the end.
    """

    def __init__(self, cycle: list[str]):
        super().__init__("negative cycle: " + " - ".join(cycle))
        self.cycle = cycle


class InvalidOrientation(GeomGridError):
    pass


class NotAnEdge(GeomGridError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class EdgeNotOnCycle(GeomGridError):
    pass


class Disconnected(GeomGridError):
    pass


class ExpansionTooLarge(TooLarge):
    pass


class PreconditionViolated(GeomGridError):
    pass


class ZeroPolynomial(GeomGridError, ValueError):
    pass


class NoPositiveRoot(GeomGridError, ValueError):
    pass


class OddCycleLength(GeomGridError, ValueError):
    pass


class BudgetExceeded(GeomGridError):
    pass


class InsufficientData(GeomGridError, ValueError):
    pass


class GraphFormatError(GeomGridError, ValueError):
    pass
