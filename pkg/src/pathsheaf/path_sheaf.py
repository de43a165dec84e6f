"""The path sheaf: global sections are active source-to-sink paths.

Stalks:

* source / sink vertex ``v``: one :class:`ChosenEdge` per edge in E(v)
* any other vertex: one :class:`EdgePair` per two-element subset of E(v), plus bottom
* every edge: ``{bot, top}``

A vertex value restricts to ``top`` on the edges it names and ``bot`` on every
other incident edge.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .errors import (
    InvalidPath,
    NotASection,
    NotGlobalSection,
    NotSourceToSink,
    PathTouchesSourceOrSinkInteriorly,
)
from .graph import EdgeId, Graph, Path, VertexId, validate_path
from .sheaf import (
    BOTTOM,
    TOP,
    Assignment,
    Bottom,
    Cell,
    ChosenEdge,
    EdgeCell,
    EdgePair,
    SheafDefinition,
    StalkValue,
    Top,
    VertexCell,
    active_subgraph,
    is_global_section,
    is_section,
)


class PathSheaf(SheafDefinition):
    name = "path"

    def stalk_check(self, cell: Cell, value: StalkValue) -> bool:
        g = self.graph
        if isinstance(cell, EdgeCell):
            return g.has_edge(cell.id) and isinstance(value, (Bottom, Top))
        if not g.has_vertex(cell.id):
            return False
        incident = g.incident(cell.id)
        if g.is_terminal(cell.id):
            return isinstance(value, ChosenEdge) and value.edge in incident
        if isinstance(value, Bottom):
            return True
        return isinstance(value, EdgePair) and value.edges <= set(incident)

    def _restrict(self, v: VertexId, e: EdgeId, value: StalkValue) -> StalkValue:
        if isinstance(value, ChosenEdge):
            return TOP if e == value.edge else BOTTOM
        if isinstance(value, EdgePair):
            return TOP if e in value.edges else BOTTOM
        return BOTTOM

    def vertex_stalk(self, v: VertexId) -> list[StalkValue]:
        """Every value over vertex ``v`` (these stalks are finite)."""
        incident = self.graph.incident(v)
        if self.graph.is_terminal(v):
            return [ChosenEdge(e) for e in incident]
        return [BOTTOM] + [EdgePair(a, b) for a, b in combinations(incident, 2)]


def build_path_sheaf(g: Graph) -> PathSheaf:
    return PathSheaf(g)


def section_to_path(ps: PathSheaf, s: Assignment) -> Path:
    """Extract the source-to-sink path carried by a global section.

    Starts at the source, takes the edge it names, and at each interior
    vertex leaves by the other member of its edge pair. Active cycles that
    do not touch this path are ignored; see :func:`active_cycles`.
    """
    if not is_global_section(ps, s):
        raise NotGlobalSection("section_to_path needs a global section")
    g = ps.graph
    edges: list[EdgeId] = []
    vertices: list[VertexId] = [g.source]
    value = s[VertexCell(g.source)]
    edge = value.edge
    while True:
        edges.append(edge)
        here = g.edge(edge).other(vertices[-1])
        vertices.append(here)
        if here == g.sink:
            break
        value = s[VertexCell(here)]
        edge = value.other(edge)
    return Path(tuple(edges), tuple(vertices))


def _normalize_cycle(g: Graph, vertices: list[VertexId]) -> Path:
    """Rotate/reflect a closed vertex walk so it starts at its least vertex
    and heads towards the smaller of that vertex's two cycle neighbours."""
    ring = vertices[:-1]
    i = ring.index(min(ring))
    ring = ring[i:] + ring[:i]
    if ring[-1] < ring[1]:
        ring = [ring[0]] + ring[:0:-1]
    ring.append(ring[0])
    edges = tuple(g.edge_between(a, b) for a, b in zip(ring, ring[1:]))
    return Path(edges, tuple(ring))


def active_cycles(ps: PathSheaf, s: Assignment) -> list[Path]:
    """Active cycles of a global section that are disjoint from its path.

    Every active vertex has active degree 2 except the source and sink, so
    whatever is left after removing the source-to-sink path splits into
    disjoint cycles. Each is returned once, in normalized orientation.
    """
    path = section_to_path(ps, s)
    g = ps.graph
    vertices, edges = active_subgraph(s)
    remaining = vertices - set(path.vertices)
    cycles = []
    while remaining:
        start = min(remaining)
        walk = [start]
        came_by = None
        while True:
            here = walk[-1]
            step = min(
                e for e in g.incident(here) if e in edges and e != came_by
            )
            came_by = step
            nxt = g.edge(step).other(here)
            walk.append(nxt)
            if nxt == start:
                break
        remaining -= set(walk)
        cycles.append(_normalize_cycle(g, walk))
    return sorted(cycles, key=lambda c: c.vertices)


def endpoint_value(g: Graph, v: VertexId, path_edge: EdgeId) -> StalkValue:
    if g.is_terminal(v):
        return ChosenEdge(path_edge)
    spare = min(e for e in g.incident(v) if e != path_edge)
    return EdgePair(path_edge, spare)


def path_to_section(ps: PathSheaf, p: Path, make_global: bool = False) -> Assignment:
    """Build the section that activates exactly the edges of ``p``.

    ``p`` may be a path whose interior avoids the source and sink, or a cycle
    avoiding both. An endpoint that is not a terminal needs a second edge in
    its pair; the smallest other incident edge id is used. With
    ``make_global`` the path must join source and sink (either direction)
    and every other cell is set to bottom.
    """
    g = ps.graph
    if not validate_path(g, p):
        raise InvalidPath(f"not a path or cycle of the graph: {p.vertices}")
    if p.is_cycle:
        if any(g.is_terminal(v) for v in p.vertices):
            raise PathTouchesSourceOrSinkInteriorly("cycle passes through source or sink")
        if make_global:
            raise NotSourceToSink("a cycle cannot be extended to a global section")
    elif any(g.is_terminal(v) for v in p.vertices[1:-1]):
        raise PathTouchesSourceOrSinkInteriorly(
            f"path {p.vertices} passes through source or sink"
        )
    if make_global:
        if {p.start, p.end} != {g.source, g.sink}:
            raise NotSourceToSink(f"path runs {p.start} -> {p.end}, not source to sink")
        if p.start == g.sink:
            p = p.reversed()

    data: dict[Cell, StalkValue] = {}
    n = len(p.edges)
    if n == 0:
        v = p.start
        incident = g.incident(v)
        data[VertexCell(v)] = (
            ChosenEdge(incident[0]) if g.is_terminal(v) else EdgePair(*incident[:2])
        )
        return Assignment(data)

    for e in p.edges:
        data[EdgeCell(e)] = TOP
    for i in range(1, n):
        data[VertexCell(p.vertices[i])] = EdgePair(p.edges[i - 1], p.edges[i])
    if p.is_cycle:
        data[VertexCell(p.start)] = EdgePair(p.edges[-1], p.edges[0])
    else:
        data[VertexCell(p.start)] = endpoint_value(g, p.start, p.edges[0])
        data[VertexCell(p.end)] = endpoint_value(g, p.end, p.edges[-1])

    if make_global:
        for cell in ps.cells():
            data.setdefault(cell, BOTTOM)
        # keep graph order so documents print canonically
        data = {cell: data[cell] for cell in ps.cells()}
    return Assignment(data)


def cost(ps: PathSheaf, s: Assignment) -> Fraction:
    """Total weight of the active edges of a local section."""
    if not is_section(ps, s):
        raise NotASection("cost is only defined on sections")
    return sum(
        (ps.graph.weight(c.id) for c, x in s.items() if isinstance(c, EdgeCell) and x == TOP),
        Fraction(0),
    )
