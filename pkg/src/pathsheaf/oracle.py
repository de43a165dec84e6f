"""Brute-force ground truth used to check the sheaf constructions and solvers.

Nothing here is fast. Every enumerator refuses inputs past an explicit size
bound with :class:`TooLarge` instead of silently truncating.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import prod
from typing import NamedTuple

from .distance_sheaf import DistancePathSheaf, directed_path_to_section
from .errors import TooLarge
from .graph import EdgeId, Graph, Path, VertexId
from .path_sheaf import PathSheaf
from .sheaf import (
    BOTTOM,
    Assignment,
    ChosenEdge,
    ChosenEdgeWithDist,
    EdgeCell,
    OrderedPairWithDist,
    StalkValue,
    VertexCell,
)

MAX_PRODUCT = 10**7
MAX_VERTICES = 12


def _canonical_key(ps, s: Assignment) -> tuple[str, ...]:
    return tuple(str(s[c]) for c in ps.cells())


def enumerate_global_sections_p(ps: PathSheaf, limit: int = MAX_PRODUCT) -> list[Assignment]:
    """Every global section of the path sheaf.

    Vertex stalks are finite and a global section is determined by its vertex
    values (each edge value is forced by either endpoint), so this searches
    the product of vertex stalks, pruning a branch as soon as two endpoints
    of an edge disagree on its value.
    """
    g = ps.graph
    stalks = {v: ps.vertex_stalk(v) for v in g.vertices}
    size = prod(len(x) for x in stalks.values())
    if size > limit:
        raise TooLarge(f"{size} candidate vertex assignments exceeds {limit}")

    order = list(g.vertices)
    position = {v: i for i, v in enumerate(order)}
    chosen: dict[VertexId, StalkValue] = {}
    edge_values: dict[EdgeId, StalkValue] = {}
    found: list[Assignment] = []

    def assign(i: int) -> None:
        if i == len(order):
            data = {VertexCell(v): chosen[v] for v in order}
            data.update({EdgeCell(e.id): edge_values[e.id] for e in g.edges})
            found.append(Assignment(data))
            return
        v = order[i]
        for value in stalks[v]:
            restricted = {e: ps.restrict(v, e, value) for e in g.incident(v)}
            if all(
                restricted[e] == edge_values[e]
                for e in restricted
                if position[g.edge(e).other(v)] < i
            ):
                chosen[v] = value
                for e, x in restricted.items():
                    edge_values.setdefault(e, x)
                assign(i + 1)
                for e in restricted:
                    if position[g.edge(e).other(v)] > i:
                        del edge_values[e]

    assign(0)
    return sorted(found, key=lambda s: _canonical_key(ps, s))


def _guard(g: Graph, max_vertices: int) -> None:
    if len(g.vertices) > max_vertices:
        raise TooLarge(f"{len(g.vertices)} vertices exceeds {max_vertices}")


def enumerate_simple_paths(g: Graph, max_vertices: int = MAX_VERTICES) -> list[Path]:
    """All simple paths from the source to the sink, sorted by edge ids."""
    _guard(g, max_vertices)
    found = []

    def walk(edges: list[EdgeId], vertices: list[VertexId]) -> None:
        here = vertices[-1]
        if here == g.sink:
            found.append(Path(tuple(edges), tuple(vertices)))
            return
        for e, nxt in g.neighbors(here):
            if nxt not in vertices:
                walk(edges + [e], vertices + [nxt])

    walk([], [g.source])
    return sorted(found, key=lambda p: p.edges)


def enumerate_cycles(g: Graph, max_vertices: int = MAX_VERTICES) -> list[Path]:
    """All cycles avoiding the source and sink, each listed once.

    A cycle is reported starting from its least vertex, heading to the
    smaller of that vertex's two neighbours on the cycle.
    """
    _guard(g, max_vertices)
    inner = sorted(v for v in g.vertices if not g.is_terminal(v))
    found = []
    for start in inner:

        def walk(vertices: list[VertexId]) -> None:
            here = vertices[-1]
            for _, nxt in g.neighbors(here):
                if nxt == start and len(vertices) >= 3 and vertices[1] < vertices[-1]:
                    ring = vertices + [start]
                    edges = tuple(g.edge_between(a, b) for a, b in zip(ring, ring[1:]))
                    found.append(Path(edges, tuple(ring)))
                elif nxt > start and nxt not in vertices and not g.is_terminal(nxt):
                    walk(vertices + [nxt])

        walk([start])
    return sorted(found, key=lambda p: p.vertices)


def enumerate_global_sections_dp(
    dps: DistancePathSheaf, max_vertices: int = MAX_VERTICES
) -> list[Assignment]:
    """The global sections of the distance path sheaf that come from simple
    paths, one per path, in path order.

    This is not every global section: see :func:`enumerate_dp_patterns` for
    the exhaustive version.
    """
    return [
        directed_path_to_section(dps, p, make_global=True)
        for p in enumerate_simple_paths(dps.graph, max_vertices)
    ]


class DpPattern(NamedTuple):
    """One family of distance-sheaf global sections sharing their edge data.

    ``section`` is a representative. ``free_components`` counts the groups of
    active cells whose distances are not tied to the source; each one can be
    shifted by any amount that keeps its labels positive, so a nonzero count
    means the family is infinite.
    """

    section: Assignment
    free_components: int


_ANCHOR = object()


def _solve_differences(terms, pairs):
    # weighted union-find: offset[x] = value(x) - value(root(x))
    parent = {x: x for x in terms}
    offset = {x: Fraction(0) for x in terms}

    def find(x):
        if parent[x] is x:
            return x
        root = find(parent[x])
        offset[x] += offset[parent[x]]
        parent[x] = root
        return root

    for (a, ca), (b, cb) in pairs:
        # value(a) + ca == value(b) + cb
        ra, rb = find(a), find(b)
        gap = cb - ca
        if ra is rb:
            if offset[a] - offset[b] != gap:
                return None
            continue
        parent[ra] = rb
        offset[ra] = gap + offset[b] - offset[a]
    return {x: (find(x), offset[x]) for x in terms}


def _edge_term(dps: DistancePathSheaf, v: VertexId, value, e: EdgeId):
    g = dps.graph
    if value is BOTTOM or e not in _named_edges(value):
        return None
    if v == g.source:
        return _ANCHOR, g.weight(e)
    if v == g.sink or e == value.first:
        return v, Fraction(0)
    return v, g.weight(e)


def _named_edges(value) -> tuple[EdgeId, ...]:
    if isinstance(value, ChosenEdge):
        return (value.edge,)
    return (value.first, value.second)


def enumerate_dp_patterns(dps: DistancePathSheaf, limit: int = MAX_PRODUCT) -> list[DpPattern]:
    """Every global section of the distance path sheaf, grouped by edge data.

    Forgetting distances sends a global section to a global section of the
    path sheaf, so the candidates are the path-sheaf sections with each active
    interior pair given one of its two orders. For a fixed candidate every
    constraint reads ``x_u + c = x_v + c'``, which a weighted union-find
    settles exactly; the source's own distance is pinned to 0.
    """
    g = dps.graph
    ps = PathSheaf(g)
    found = []
    for base in enumerate_global_sections_p(ps, limit):
        active = [v for v in g.vertices if not g.is_terminal(v) and base.vertex(v) is not BOTTOM]
        for flips in product((False, True), repeat=len(active)):
            oriented = {v: base.vertex(v) for v in g.vertices}
            for v, flip in zip(active, flips):
                pair = oriented[v]
                oriented[v] = _Oriented(pair.second, pair.first) if flip else _Oriented(pair.first, pair.second)
            pattern = _solve_pattern(dps, oriented)
            if pattern is not None:
                found.append(pattern)
    return sorted(found, key=lambda p: _canonical_key(dps, p.section))


class _Oriented(NamedTuple):
    first: EdgeId
    second: EdgeId


def _solve_pattern(dps: DistancePathSheaf, oriented) -> DpPattern | None:
    g = dps.graph
    terms = [_ANCHOR] + [v for v in g.vertices if v != g.source and oriented[v] is not BOTTOM]
    pairs = []
    for e in g.edges:
        u, v = e.u, e.v
        tu = _edge_term(dps, u, oriented[u], e.id)
        tv = _edge_term(dps, v, oriented[v], e.id)
        if (tu is None) != (tv is None):
            return None
        if tu is not None:
            pairs.append((tu, tv))
    solved = _solve_differences(terms, pairs)
    if solved is None:
        return None

    anchor_root, anchor_offset = solved[_ANCHOR]
    lowest: dict[object, Fraction] = {}
    for x in terms[1:]:
        root, off = solved[x]
        lowest[root] = min(lowest.get(root, off), off)
    values = {}
    for x in terms[1:]:
        root, off = solved[x]
        if root is anchor_root:
            values[x] = off - anchor_offset
            if values[x] <= 0:
                return None
        else:
            values[x] = off - lowest[root] + 1

    data: dict = {}
    for v in g.vertices:
        value = oriented[v]
        if v == g.source:
            data[VertexCell(v)] = ChosenEdgeWithDist(value.edge, 0)
        elif value is BOTTOM:
            data[VertexCell(v)] = BOTTOM
        elif v == g.sink:
            data[VertexCell(v)] = ChosenEdgeWithDist(value.edge, values[v])
        else:
            data[VertexCell(v)] = OrderedPairWithDist(value.first, value.second, values[v])
    for e in g.edges:
        u = e.u
        data[EdgeCell(e.id)] = dps.restrict(u, e.id, data[VertexCell(u)])
    free = len({solved[x][0] for x in terms[1:]} - {anchor_root})
    return DpPattern(Assignment(data), free)


def _array_dijkstra(g: Graph, start: VertexId, stop: VertexId | None = None):
    # plain O(V^2) version: no heap, scan for the closest unvisited vertex
    dist: dict[VertexId, Fraction | None] = {v: None for v in g.vertices}
    pred: dict[VertexId, tuple[EdgeId, VertexId] | None] = {v: None for v in g.vertices}
    done: set[VertexId] = set()
    dist[start] = Fraction(0)
    while True:
        candidates = [v for v in g.vertices if v not in done and dist[v] is not None]
        if not candidates:
            break
        here = min(candidates, key=lambda v: (dist[v], v))
        if here == stop:
            break
        done.add(here)
        for e, nxt in g.neighbors(here):
            if nxt in done:
                continue
            alt = dist[here] + g.weight(e)
            if dist[nxt] is None or alt < dist[nxt]:
                dist[nxt] = alt
                pred[nxt] = (e, here)
    return dist, pred


def classical_dijkstra(g: Graph) -> tuple[Fraction | None, Path | None]:
    """Textbook Dijkstra from source to sink: ``(distance, path)``, or
    ``(None, None)`` when the sink is unreachable."""
    dist, pred = _array_dijkstra(g, g.source, stop=g.sink)
    if dist[g.sink] is None:
        return None, None
    edges, vertices = [], [g.sink]
    while vertices[-1] != g.source:
        e, back = pred[vertices[-1]]
        edges.append(e)
        vertices.append(back)
    return dist[g.sink], Path(tuple(reversed(edges)), tuple(reversed(vertices)))


def distances_to_sink(g: Graph) -> dict[VertexId, Fraction | None]:
    """Exact remaining distance from every vertex to the sink (None if cut off)."""
    return _array_dijkstra(g, g.sink)[0]
