"""Exception types shared across the library."""

from __future__ import annotations


class GraphError(Exception):
    """Base class for every error raised by this package."""


class OutOfRange(GraphError):
    """A vertex id is not in [0, n)."""


class SelfLoop(GraphError):
    """An arc with equal tail and head was supplied."""


class DuplicateArc(GraphError):
    """The same arc was supplied more than once."""


class NotPresent(GraphError):
    """A vertex or arc scheduled for deletion is absent."""


class ParseError(GraphError):
    """Malformed arc-list text. Carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotOnCycle(GraphError):
    """A vertex or arc was expected to lie on a given cycle but does not."""


class NoCycle(GraphError):
    """The digraph contains no cycle (within the requested length cap)."""


class CapExceeded(GraphError):
    """Cycle enumeration ran out of its node budget before finishing."""


class Unreachable(GraphError):
    """No directed path exists between the requested endpoints."""


class NoCutVertex(GraphError):
    """The two endpoints admit two internally disjoint paths already."""


class NoWindow(GraphError):
    """No cut vertex satisfies the distance thresholds for the window."""


class BudgetExceeded(GraphError):
    """The search ran out of its node-expansion budget."""


class BadParams(GraphError):
    """Parameters violate a documented precondition."""


class Infeasible(GraphError):
    """The generator could not realise the requested constraints."""


class NoMove(GraphError):
    """No legal mutation move exists for this digraph."""


class PreconditionFailed(GraphError):
    """A checked precondition of a probe operation does not hold."""
