"""Weighted undirected graphs with a distinguished source and sink."""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    DegreeViolation,
    DuplicateId,
    NonPositiveWeight,
    ParallelEdge,
    SelfLoop,
    SourceEqualsSink,
    UnknownEndpoint,
    UnknownVertex,
)

VertexId = str
EdgeId = str
RationalLike = Union[int, str, Fraction, Decimal, float]


def to_rational(value: RationalLike) -> Fraction:
    """Convert ``value`` to an exact :class:`Fraction`.

    Strings may be integers, decimals (``"0.1"`` becomes ``1/10``) or
    ``"p/q"``. Floats go through their shortest repr so ``0.1`` also
    becomes ``1/10`` rather than the binary expansion.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not weights")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


@dataclass(frozen=True)
class Edge:
    id: EdgeId
    u: VertexId
    v: VertexId
    weight: Fraction

    @property
    def endpoints(self) -> frozenset[VertexId]:
        return frozenset((self.u, self.v))

    def other(self, vertex: VertexId) -> VertexId:
        if vertex == self.u:
            return self.v
        if vertex == self.v:
            return self.u
        raise ValueError(f"{vertex} is not an endpoint of {self.id}")


@dataclass(frozen=True)
class Path:
    """A walk given by its edges and the vertices they connect.

    A path with no edges is a single vertex. When the first and last vertex
    coincide the object describes a cycle.
    """

    edges: tuple[EdgeId, ...]
    vertices: tuple[VertexId, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(self, "vertices", tuple(self.vertices))

    @property
    def start(self) -> VertexId:
        return self.vertices[0]

    @property
    def end(self) -> VertexId:
        return self.vertices[-1]

    @property
    def is_cycle(self) -> bool:
        return len(self.edges) > 0 and self.vertices[0] == self.vertices[-1]

    def reversed(self) -> "Path":
        return Path(self.edges[::-1], self.vertices[::-1])

    def __str__(self) -> str:
        return " ".join(self.edges)


@dataclass(frozen=True)
class Graph:
    vertices: tuple[VertexId, ...]
    edges: tuple[Edge, ...]
    source: VertexId
    sink: VertexId
    _edge_index: Mapping[EdgeId, Edge] = field(init=False, repr=False, compare=False)
    _incidence: Mapping[VertexId, tuple[EdgeId, ...]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        incidence: dict[VertexId, list[EdgeId]] = {v: [] for v in self.vertices}
        for e in self.edges:
            incidence[e.u].append(e.id)
            incidence[e.v].append(e.id)
        object.__setattr__(self, "_edge_index", {e.id: e for e in self.edges})
        object.__setattr__(
            self, "_incidence", {v: tuple(sorted(es)) for v, es in incidence.items()}
        )

    def edge(self, edge_id: EdgeId) -> Edge:
        return self._edge_index[edge_id]

    def weight(self, edge_id: EdgeId) -> Fraction:
        return self._edge_index[edge_id].weight

    def has_vertex(self, v: VertexId) -> bool:
        return v in self._incidence

    def has_edge(self, e: EdgeId) -> bool:
        return e in self._edge_index

    @property
    def edge_ids(self) -> tuple[EdgeId, ...]:
        return tuple(e.id for e in self.edges)

    def incident(self, v: VertexId) -> tuple[EdgeId, ...]:
        """Edges containing ``v``, sorted by id."""
        try:
            return self._incidence[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}", v) from None

    def degree(self, v: VertexId) -> int:
        return len(self.incident(v))

    def is_terminal(self, v: VertexId) -> bool:
        return v == self.source or v == self.sink

    def edge_between(self, u: VertexId, v: VertexId) -> EdgeId | None:
        for e in self.incident(u):
            if self._edge_index[e].other(u) == v:
                return e
        return None

    def neighbors(self, v: VertexId) -> list[tuple[EdgeId, VertexId]]:
        return [(e, self._edge_index[e].other(v)) for e in self.incident(v)]


EdgeSpec = Union[Edge, Sequence]


def build_graph(
    vertices: Iterable[VertexId],
    edges: Iterable[EdgeSpec],
    source: VertexId,
    sink: VertexId,
) -> Graph:
    """Validate the inputs and return a frozen :class:`Graph`.

    ``edges`` holds :class:`Edge` objects or ``(id, u, v, weight)`` tuples.
    Every vertex other than the source and sink must have degree at least 2;
    the source and sink need degree at least 1.
    """
    vertices = tuple(vertices)
    seen: set[str] = set()
    for v in vertices:
        if v in seen:
            raise DuplicateId(f"duplicate vertex id {v!r}", v)
        seen.add(v)
    vertex_set = set(vertices)

    built: list[Edge] = []
    pairs: dict[frozenset, str] = {}
    for spec in edges:
        if isinstance(spec, Edge):
            eid, u, v, w = spec.id, spec.u, spec.v, spec.weight
        else:
            eid, u, v, w = spec
        if eid in seen:
            raise DuplicateId(f"duplicate id {eid!r}", eid)
        seen.add(eid)
        for end in (u, v):
            if end not in vertex_set:
                raise UnknownEndpoint(f"edge {eid!r} names unknown vertex {end!r}", eid)
        if u == v:
            raise SelfLoop(f"edge {eid!r} is a self-loop on {u!r}", eid)
        weight = to_rational(w)
        if weight <= 0:
            raise NonPositiveWeight(f"edge {eid!r} has weight {weight} <= 0", eid)
        pair = frozenset((u, v))
        if pair in pairs:
            raise ParallelEdge(
                f"edge {eid!r} duplicates {pairs[pair]!r} between {u!r} and {v!r}", eid
            )
        pairs[pair] = eid
        built.append(Edge(eid, u, v, weight))

    for end in (source, sink):
        if end not in vertex_set:
            raise UnknownVertex(f"unknown terminal vertex {end!r}", end)
    if source == sink:
        raise SourceEqualsSink(f"source and sink are both {source!r}", source)

    g = Graph(vertices, tuple(built), source, sink)
    for v in vertices:
        need = 1 if g.is_terminal(v) else 2
        if g.degree(v) < need:
            raise DegreeViolation(
                f"vertex {v!r} has degree {g.degree(v)}, needs at least {need}", v
            )
    return g


def incident_edges(g: Graph, v: VertexId) -> frozenset[EdgeId]:
    """The set E(v) of edges containing ``v``."""
    return frozenset(g.incident(v))


def path_from_edges(g: Graph, edges: Sequence[EdgeId], start: VertexId) -> Path:
    """Walk ``edges`` from ``start`` and record the vertex sequence.

    Raises ``ValueError`` if consecutive edges do not share the walked vertex.
    """
    vertices = [start]
    for eid in edges:
        if not g.has_edge(eid):
            raise ValueError(f"unknown edge {eid!r}")
        vertices.append(g.edge(eid).other(vertices[-1]))
    return Path(tuple(edges), tuple(vertices))


def validate_path(g: Graph, p: Path) -> bool:
    try:
        edges, vertices = tuple(p.edges), tuple(p.vertices)
    except (AttributeError, TypeError):
        return False
    if len(vertices) != len(edges) + 1:
        return False
    if not all(g.has_vertex(v) for v in vertices):
        return False
    for i, eid in enumerate(edges):
        if not g.has_edge(eid):
            return False
        if g.edge(eid).endpoints != {vertices[i], vertices[i + 1]}:
            return False
    if len(edges) >= 3 and vertices[0] == vertices[-1]:
        # cycle: only the closing vertex repeats
        return len(set(vertices[:-1])) == len(vertices) - 1
    return len(set(vertices)) == len(vertices)
