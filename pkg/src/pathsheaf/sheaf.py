"""Cellular sheaves on a graph: cells, stalk values, assignments, sections.

A sheaf here is anything implementing :class:`SheafDefinition`: a membership
test for each stalk plus the restriction maps from a vertex stalk to the
stalks of its incident edges. Stalks can be infinite, so nothing in this
module enumerates them.
"""

from __future__ import annotations

import abc
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, NamedTuple, Union

from .errors import CellAlreadyAssigned, NotIncident, StalkMismatch
from .graph import EdgeId, Graph, VertexId, to_rational


@dataclass(frozen=True)
class VertexCell:
    id: VertexId

    def __str__(self) -> str:
        return self.id


@dataclass(frozen=True)
class EdgeCell:
    id: EdgeId

    def __str__(self) -> str:
        return self.id


Cell = Union[VertexCell, EdgeCell]


# -- stalk values -------------------------------------------------------------
#
# One union serves both sheaves; each SheafDefinition decides which variants
# are legal over which cell. ``str()`` of every value is its section-document
# spelling.


@dataclass(frozen=True)
class Bottom:
    def __str__(self) -> str:
        return "bot"


@dataclass(frozen=True)
class Top:
    def __str__(self) -> str:
        return "top"


BOTTOM = Bottom()
TOP = Top()


@dataclass(frozen=True)
class ChosenEdge:
    edge: EdgeId

    def __str__(self) -> str:
        return self.edge


@dataclass(frozen=True, init=False)
class EdgePair:
    """An unordered pair of distinct edges, stored sorted."""

    first: EdgeId
    second: EdgeId

    def __init__(self, a: EdgeId, b: EdgeId):
        if a == b:
            raise ValueError(f"edge pair needs two distinct edges, got {a!r} twice")
        lo, hi = sorted((a, b))
        object.__setattr__(self, "first", lo)
        object.__setattr__(self, "second", hi)

    @property
    def edges(self) -> frozenset[EdgeId]:
        return frozenset((self.first, self.second))

    def other(self, edge: EdgeId) -> EdgeId:
        if edge == self.first:
            return self.second
        if edge == self.second:
            return self.first
        raise ValueError(f"{edge!r} not in {self}")

    def __str__(self) -> str:
        return f"[{self.first},{self.second}]"


@dataclass(frozen=True)
class ChosenEdgeWithDist:
    edge: EdgeId
    dist: Fraction

    def __post_init__(self):
        object.__setattr__(self, "dist", to_rational(self.dist))

    def __str__(self) -> str:
        return f"({self.edge},{self.dist})"


@dataclass(frozen=True)
class OrderedPairWithDist:
    incoming: EdgeId
    outgoing: EdgeId
    dist: Fraction

    def __post_init__(self):
        if self.incoming == self.outgoing:
            raise ValueError(f"incoming and outgoing edge are both {self.incoming!r}")
        object.__setattr__(self, "dist", to_rational(self.dist))

    def __str__(self) -> str:
        return f"({self.incoming},{self.outgoing},{self.dist})"


@dataclass(frozen=True)
class Dist:
    dist: Fraction

    def __post_init__(self):
        object.__setattr__(self, "dist", to_rational(self.dist))

    def __str__(self) -> str:
        return str(self.dist)


StalkValue = Union[
    Bottom, Top, ChosenEdge, EdgePair, ChosenEdgeWithDist, OrderedPairWithDist, Dist
]


def numeric_part(value: StalkValue) -> Fraction | None:
    """The distance carried by ``value``, or None for valueless variants."""
    return getattr(value, "dist", None)


# -- assignments ----------------------------------------------------------------


class Assignment(Mapping[Cell, StalkValue]):
    """An immutable partial map from cells to stalk values.

    Every "modification" returns a new assignment; the receiver is never
    touched, so callers can keep many tentative sections alive at once.
    """

    __slots__ = ("_data", "_hash")

    def __init__(self, data: Mapping[Cell, StalkValue] | None = None):
        self._data: dict[Cell, StalkValue] = dict(data or {})
        self._hash: int | None = None

    @classmethod
    def from_ids(cls, g: Graph, values: Mapping[str, StalkValue]) -> "Assignment":
        """Build an assignment keyed by plain vertex/edge ids of ``g``."""
        data = {}
        for ident, value in values.items():
            if g.has_vertex(ident):
                data[VertexCell(ident)] = value
            elif g.has_edge(ident):
                data[EdgeCell(ident)] = value
            else:
                raise KeyError(f"{ident!r} is neither a vertex nor an edge")
        return cls(data)

    def __getitem__(self, cell: Cell) -> StalkValue:
        return self._data[cell]

    def __iter__(self) -> Iterator[Cell]:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._data.items()))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{c}: {v}" for c, v in self._data.items())
        return f"Assignment({{{body}}})"

    @property
    def domain(self) -> frozenset[Cell]:
        return frozenset(self._data)

    def set(self, cell: Cell, value: StalkValue) -> "Assignment":
        """Copy with ``cell`` mapped to ``value`` (added or replaced)."""
        data = dict(self._data)
        data[cell] = value
        return Assignment(data)

    def restrict_to(self, cells) -> "Assignment":
        cells = set(cells)
        return Assignment({c: v for c, v in self._data.items() if c in cells})

    def vertex(self, v: VertexId) -> StalkValue | None:
        return self._data.get(VertexCell(v))

    def edge(self, e: EdgeId) -> StalkValue | None:
        return self._data.get(EdgeCell(e))


# -- sheaf definitions ---------------------------------------------------------------


class SheafDefinition(abc.ABC):
    """Stalk membership and restriction maps for one sheaf on one graph."""

    name: str = "sheaf"

    def __init__(self, graph: Graph):
        self.graph = graph

    @abc.abstractmethod
    def stalk_check(self, cell: Cell, value: StalkValue) -> bool:
        """Whether ``value`` lies in the stalk over ``cell``."""

    @abc.abstractmethod
    def _restrict(self, v: VertexId, e: EdgeId, value: StalkValue) -> StalkValue:
        ...

    def restrict(self, v: VertexId, e: EdgeId, value: StalkValue) -> StalkValue:
        """Apply the restriction map from the stalk over ``v`` to that over ``e``."""
        if not self.graph.has_edge(e) or v not in self.graph.edge(e).endpoints:
            raise NotIncident(f"{v!r} is not an endpoint of {e!r}")
        if not self.stalk_check(VertexCell(v), value):
            raise StalkMismatch(VertexCell(v), value)
        return self._restrict(v, e, value)

    def cells(self) -> list[Cell]:
        """All cells of the graph: vertices first, then edges, in graph order."""
        g = self.graph
        return [VertexCell(v) for v in g.vertices] + [EdgeCell(e.id) for e in g.edges]

    def __repr__(self) -> str:
        return f"{type(self).__name__}({len(self.graph.vertices)} vertices)"


def check_stalks(sh: SheafDefinition, a: Assignment) -> None:
    for cell, value in a.items():
        if not sh.stalk_check(cell, value):
            raise StalkMismatch(cell, value)


def inconsistent_pairs(sh: SheafDefinition, a: Assignment) -> list[tuple[VertexId, EdgeId]]:
    """Incident (vertex, edge) pairs in ``a``'s domain whose restriction disagrees."""
    check_stalks(sh, a)
    bad = []
    for v in sh.graph.vertices:
        vcell = VertexCell(v)
        if vcell not in a:
            continue
        for e in sh.graph.incident(v):
            ecell = EdgeCell(e)
            if ecell in a and sh.restrict(v, e, a[vcell]) != a[ecell]:
                bad.append((v, e))
    return bad


def is_section(sh: SheafDefinition, a: Assignment) -> bool:
    return not inconsistent_pairs(sh, a)


def is_global_section(sh: SheafDefinition, a: Assignment) -> bool:
    return len(a) == len(sh.cells()) and set(a) == set(sh.cells()) and is_section(sh, a)


class Extension(NamedTuple):
    assignment: Assignment
    consistent: bool


def extend(sh: SheafDefinition, a: Assignment, cell: Cell, value: StalkValue) -> Extension:
    """Add ``cell -> value`` to ``a``; report whether the result is still a section."""
    if cell in a:
        raise CellAlreadyAssigned(f"{cell} is already assigned {a[cell]}")
    if not sh.stalk_check(cell, value):
        raise StalkMismatch(cell, value)
    extended = a.set(cell, value)
    return Extension(extended, is_section(sh, extended))


def active_subgraph(a: Assignment) -> tuple[set[VertexId], set[EdgeId]]:
    """Vertices whose value is not bottom and edges whose value is not bottom."""
    vertices = {c.id for c, x in a.items() if isinstance(c, VertexCell) and x != BOTTOM}
    edges = {c.id for c, x in a.items() if isinstance(c, EdgeCell) and x != BOTTOM}
    return vertices, edges
