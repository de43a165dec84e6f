"""Exception hierarchy shared by the whole package."""

from __future__ import annotations


class PathSheafError(Exception):
    """Base class for every error raised by pathsheaf."""


# -- graph construction ------------------------------------------------------


class GraphError(PathSheafError):
    """A graph failed validation.

    ``ident`` names the vertex or edge at fault when there is one, so that
    file parsers can map the failure back to a source line.
    """

    def __init__(self, message: str, ident: str | None = None):
        super().__init__(message)
        self.ident = ident


class DuplicateId(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class ParallelEdge(GraphError):
    pass


class NonPositiveWeight(GraphError):
    pass


class DegreeViolation(GraphError):
    pass


class SourceEqualsSink(GraphError):
    pass


class UnknownEndpoint(GraphError):
    pass


class UnknownVertex(GraphError):
    pass


# -- sheaves and sections ----------------------------------------------------


class SheafError(PathSheafError):
    pass


class StalkMismatch(SheafError):
    """A value is not a member of the stalk over the cell it was assigned to."""

    def __init__(self, cell, value):
        super().__init__(f"{value!s} is not in the stalk over {cell!s}")
        self.cell = cell
        self.value = value


class CellAlreadyAssigned(SheafError):
    pass


class NotIncident(SheafError):
    pass


class NotASection(SheafError):
    pass


class NotGlobalSection(SheafError):
    pass


class InvalidPath(SheafError):
    pass


class PathTouchesSourceOrSinkInteriorly(InvalidPath):
    pass


class NotSourceToSink(InvalidPath):
    pass


class PathDoesNotStartAtSource(InvalidPath):
    pass


class GraphMismatch(SheafError):
    pass


# -- oracles -----------------------------------------------------------------


class TooLarge(PathSheafError):
    """An exhaustive enumeration was refused because its search space is too big."""
