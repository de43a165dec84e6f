"""The distance path sheaf: paths that carry their distance from the source.

Vertex values are ordered ``(incoming, outgoing, x)`` triples where ``x`` is
the distance at which the path reaches the vertex. The source holds
``(e, 0)``, the sink ``(e, x)`` with ``x > 0``. Edge values are the distance
reached at the far end of the edge, or bottom.

Restriction maps, for an edge ``e`` at vertex ``v``:

* source ``(e_i, 0)``: ``w(e)`` on ``e_i``, bottom elsewhere
* sink ``(e_i, x)``: ``x`` on ``e_i``, bottom elsewhere
* interior ``(e_i, e_j, x)``: ``x`` on ``e_i``, ``x + w(e_j)`` on ``e_j``, bottom elsewhere
* bottom: bottom everywhere

Sections built from a path (:func:`directed_path_to_section`) carry true
distances and no cycles. The maps alone do not force that: two neighbours
may both list their shared edge as incoming (or both as outgoing) with equal
labels, which lets an active cycle close or a path carry a wrong label.
:func:`assert_no_active_cycle` detects the first case.
"""

from __future__ import annotations

from .errors import (
    InvalidPath,
    NotGlobalSection,
    NotSourceToSink,
    PathDoesNotStartAtSource,
    PathTouchesSourceOrSinkInteriorly,
)
from .graph import EdgeId, Graph, Path, VertexId, validate_path
from .sheaf import (
    BOTTOM,
    Assignment,
    Bottom,
    Cell,
    ChosenEdgeWithDist,
    Dist,
    EdgeCell,
    OrderedPairWithDist,
    SheafDefinition,
    StalkValue,
    VertexCell,
    active_subgraph,
    is_global_section,
)


class DistancePathSheaf(SheafDefinition):
    name = "distance"

    def stalk_check(self, cell: Cell, value: StalkValue) -> bool:
        g = self.graph
        if isinstance(cell, EdgeCell):
            if not g.has_edge(cell.id):
                return False
            return isinstance(value, Bottom) or (isinstance(value, Dist) and value.dist > 0)
        v = cell.id
        if not g.has_vertex(v):
            return False
        incident = g.incident(v)
        if v == g.source:
            return (
                isinstance(value, ChosenEdgeWithDist)
                and value.edge in incident
                and value.dist == 0
            )
        if v == g.sink:
            return (
                isinstance(value, ChosenEdgeWithDist)
                and value.edge in incident
                and value.dist > 0
            )
        if isinstance(value, Bottom):
            return True
        return (
            isinstance(value, OrderedPairWithDist)
            and value.incoming in incident
            and value.outgoing in incident
            and value.dist > 0
        )

    def _restrict(self, v: VertexId, e: EdgeId, value: StalkValue) -> StalkValue:
        g = self.graph
        if isinstance(value, ChosenEdgeWithDist):
            if e != value.edge:
                return BOTTOM
            return Dist(g.weight(e)) if v == g.source else Dist(value.dist)
        if isinstance(value, OrderedPairWithDist):
            if e == value.incoming:
                return Dist(value.dist)
            if e == value.outgoing:
                return Dist(value.dist + g.weight(e))
        return BOTTOM


def build_distance_path_sheaf(g: Graph) -> DistancePathSheaf:
    return DistancePathSheaf(g)


def directed_path_to_section(
    dps: DistancePathSheaf, p: Path, make_global: bool = False
) -> Assignment:
    """The section that walks ``p`` from the source, accumulating distance.

    If the last vertex of ``p`` is not the sink it still needs an outgoing
    edge; the smallest incident edge id other than the incoming one is used.
    """
    g = dps.graph
    if not validate_path(g, p) or p.is_cycle:
        raise InvalidPath(f"not a path of the graph: {p.vertices}")
    if p.start != g.source:
        raise PathDoesNotStartAtSource(f"path starts at {p.start}, not {g.source}")
    if any(g.is_terminal(v) for v in p.vertices[1:-1]):
        raise PathTouchesSourceOrSinkInteriorly(
            f"path {p.vertices} passes through source or sink"
        )
    if make_global and p.end != g.sink:
        raise NotSourceToSink(f"path ends at {p.end}, not the sink {g.sink}")

    data: dict[Cell, StalkValue] = {}
    first = p.edges[0] if p.edges else g.incident(g.source)[0]
    data[VertexCell(g.source)] = ChosenEdgeWithDist(first, 0)
    dist = 0
    for k, e in enumerate(p.edges):
        dist += g.weight(e)
        data[EdgeCell(e)] = Dist(dist)
        v = p.vertices[k + 1]
        if v == g.sink:
            data[VertexCell(v)] = ChosenEdgeWithDist(e, dist)
        elif k + 1 < len(p.edges):
            data[VertexCell(v)] = OrderedPairWithDist(e, p.edges[k + 1], dist)
        else:
            spare = min(f for f in g.incident(v) if f != e)
            data[VertexCell(v)] = OrderedPairWithDist(e, spare, dist)

    if make_global:
        data = {cell: data.get(cell, BOTTOM) for cell in dps.cells()}
    return Assignment(data)


def section_to_directed_path(dps: DistancePathSheaf, s: Assignment) -> Path:
    """Walk from the source until the walk leaves ``s``'s domain or reaches
    the sink, leaving each vertex by the pair member it did not arrive on.

    On sections built from a path that member is the outgoing edge. Works on
    local sections built from the source as well as on global sections.
    """
    g = dps.graph
    value = s[VertexCell(g.source)]
    edges: list[EdgeId] = []
    vertices: list[VertexId] = [g.source]
    edge = value.edge
    while EdgeCell(edge) in s:
        here = g.edge(edge).other(vertices[-1])
        if VertexCell(here) not in s:
            break
        edges.append(edge)
        vertices.append(here)
        if here == g.sink:
            break
        value = s[VertexCell(here)]
        if len(vertices) > len(g.vertices) or not isinstance(value, OrderedPairWithDist):
            raise InvalidPath("section does not describe a walk from the source")
        edge = value.outgoing if value.incoming == edge else value.incoming
    return Path(tuple(edges), tuple(vertices))


def assert_no_active_cycle(dps: DistancePathSheaf, s: Assignment) -> bool:
    """True when the active cells of a global section form a forest."""
    if not is_global_section(dps, s):
        raise NotGlobalSection("assert_no_active_cycle needs a global section")
    g = dps.graph
    _, edges = active_subgraph(s)
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in edges:
        a, b = (find(x) for x in g.edge(e).endpoints)
        if a == b:
            return False
        parent[a] = b
    return True
