"""Shortest paths by extending local sections to global ones.

:func:`dijkstra_dp` follows the four-step procedure over the distance path
sheaf: each vertex ``v`` owns a tentative section ``s_v`` describing the best
known route to it, and the route to a new vertex is the current vertex's
section extended along one more edge.

:func:`search_p` runs the same idea over the path sheaf, where the distance
is not stored in the section but computed by a cost function. Swapping in a
cost that adds a heuristic turns it into A*.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from types import MappingProxyType
from typing import Callable, Mapping, Union

from .distance_sheaf import DistancePathSheaf, section_to_directed_path
from .graph import EdgeId, Path, VertexId, to_rational
from .path_sheaf import PathSheaf, endpoint_value, cost, path_to_section
from .sheaf import (
    BOTTOM,
    TOP,
    Assignment,
    ChosenEdge,
    ChosenEdgeWithDist,
    Dist,
    EdgeCell,
    EdgePair,
    OrderedPairWithDist,
    VertexCell,
    extend,
)


@dataclass(frozen=True)
class TentativeState:
    """Snapshot of the distance-sheaf Dijkstra at one step-4 decision."""

    visited: frozenset[VertexId]
    tentative: Mapping[VertexId, Assignment]
    current: VertexId
    current_section: Assignment

    @property
    def open_vertices(self) -> frozenset[VertexId]:
        """Unvisited vertices whose tentative section is defined."""
        return frozenset(v for v in self.tentative if v not in self.visited)


@dataclass(frozen=True)
class ShortestPath:
    global_section: Assignment
    path: Path
    length: Fraction
    expanded: int = 0


@dataclass(frozen=True)
class NoPath:
    expanded: int = 0


SolveResult = Union[ShortestPath, NoPath]
CostFunction = Callable[[Assignment, VertexId], Fraction]


# -- Dijkstra over the distance path sheaf ----------------------------------------


def _reach(s: Assignment, v: VertexId) -> Fraction:
    return s[VertexCell(v)].dist


def _run_dijkstra(dps: DistancePathSheaf) -> tuple[SolveResult, list[TentativeState]]:
    g = dps.graph
    source, sink = g.source, g.sink
    trace: list[TentativeState] = []

    # step 1; the source's edge is a placeholder, rewritten in step 2
    visited: set[VertexId] = set()
    tentative = {
        source: Assignment({VertexCell(source): ChosenEdgeWithDist(g.incident(source)[0], 0)})
    }
    current, s_c = source, tentative[source]

    while True:
        # step 2
        for e, u in g.neighbors(current):
            if u in visited:
                continue
            head = s_c[VertexCell(current)]
            if current == source:
                head = ChosenEdgeWithDist(e, 0)
            else:
                head = OrderedPairWithDist(head.incoming, e, head.dist)
            reach = head.dist + g.weight(e)
            if u == sink:
                tail = ChosenEdgeWithDist(e, reach)
            else:
                f = min(x for x in g.incident(u) if x != e)
                tail = OrderedPairWithDist(e, f, reach)
            s_new = (
                s_c.set(VertexCell(current), head)
                .set(EdgeCell(e), Dist(reach))
                .set(VertexCell(u), tail)
            )
            if u not in tentative or reach < _reach(tentative[u], u):
                tentative[u] = s_new

        # step 3
        visited.add(current)

        # step 4
        trace.append(
            TentativeState(
                frozenset(visited), MappingProxyType(dict(tentative)), current, s_c
            )
        )
        open_ = [v for v in tentative if v not in visited]
        if not open_:
            return NoPath(len(visited)), trace
        if sink in tentative and all(
            _reach(tentative[sink], sink) <= _reach(tentative[v], v) for v in open_
        ):
            s_t = tentative[sink]
            glob = Assignment({c: s_t.get(c, BOTTOM) for c in dps.cells()})
            path = section_to_directed_path(dps, glob)
            return ShortestPath(glob, path, _reach(s_t, sink), len(visited)), trace
        current = min(open_, key=lambda v: (_reach(tentative[v], v), v))
        s_c = tentative[current]


def dijkstra_dp(dps: DistancePathSheaf) -> SolveResult:
    """Shortest source-to-sink path as a global section of the distance sheaf.

    ``expanded`` on the result counts visited vertices.
    """
    return _run_dijkstra(dps)[0]


def tentative_trace(dps: DistancePathSheaf) -> list[TentativeState]:
    """One snapshot per step-4 decision of :func:`dijkstra_dp`, in order."""
    return _run_dijkstra(dps)[1]


# -- cost-guided search over the path sheaf ---------------------------------------------


def plain_cost(ps: PathSheaf) -> CostFunction:
    return lambda s, vertex: cost(ps, s)


def astar_cost(ps: PathSheaf, heuristic) -> CostFunction:
    """Section cost plus a heuristic estimate of the distance left to the sink.

    ``heuristic`` is a mapping or a callable on vertex ids; vertices missing
    from a mapping, or mapped to None (cut off from the sink), get 0. The search is only guaranteed optimal when the
    heuristic never overestimates, which is the caller's responsibility.
    """
    if callable(heuristic):
        h = heuristic
    else:
        table = {v: to_rational(x) for v, x in heuristic.items() if x is not None}
        if any(x < 0 for x in table.values()):
            raise ValueError("heuristic values must be nonnegative")
        h = lambda v: table.get(v, Fraction(0))  # noqa: E731
    return lambda s, vertex: cost(ps, s) + to_rational(h(vertex))


def extend_along(ps: PathSheaf, s: Assignment, path: Path, e: EdgeId) -> Assignment:
    """Extend the section of ``path`` by edge ``e`` out of its last vertex.

    The last vertex's spare edge is rewritten to ``e``, then ``e`` (active)
    and the new end vertex are added. Gives the same section as building
    the longer path from scratch.
    """
    g = ps.graph
    end = path.end
    new_end = g.edge(e).other(end)
    if g.is_terminal(end):
        head = ChosenEdge(e)
    else:
        head = EdgePair(path.edges[-1], e)
    s = s.set(VertexCell(end), head)
    s, ok_edge = extend(ps, s, EdgeCell(e), TOP)
    s, ok_vertex = extend(ps, s, VertexCell(new_end), endpoint_value(g, new_end, e))
    assert ok_edge and ok_vertex
    return s


def search_p(ps: PathSheaf, cost_fn: CostFunction | None = None) -> SolveResult:
    """Best-first search over local sections of the path sheaf.

    Each frontier entry is the section of a simple path from the source,
    ordered by ``cost_fn`` (plain section cost by default), ties broken by
    end vertex id and then edge ids. A vertex is re-expanded whenever a
    strictly cheaper section reaching it turns up, so an admissible but
    inconsistent heuristic still yields a shortest path. ``expanded`` on the
    result counts expanded sections.
    """
    g = ps.graph
    cost_fn = cost_fn or plain_cost(ps)
    tick = count()

    start = Path((), (g.source,))
    s0 = path_to_section(ps, start)
    best: dict[VertexId, Fraction] = {g.source: Fraction(0)}
    frontier = [(cost_fn(s0, g.source), g.source, (), next(tick), Fraction(0), start, s0)]
    expanded = 0
    while frontier:
        _, v, _, _, g_val, path, s = heapq.heappop(frontier)
        if g_val > best[v]:
            continue
        expanded += 1
        if v == g.sink:
            glob = path_to_section(ps, path, make_global=True)
            return ShortestPath(glob, path, g_val, expanded)
        for e, u in g.neighbors(v):
            if u in path.vertices:
                continue
            new_g = g_val + g.weight(e)
            if u in best and new_g >= best[u]:
                continue
            best[u] = new_g
            new_path = Path(path.edges + (e,), path.vertices + (u,))
            new_s = extend_along(ps, s, path, e)
            heapq.heappush(
                frontier,
                (cost_fn(new_s, u), u, new_path.edges, next(tick), new_g, new_path, new_s),
            )
    return NoPath(expanded)
