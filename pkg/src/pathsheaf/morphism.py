"""The forgetful morphism from the distance path sheaf to the path sheaf."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterable

from .distance_sheaf import DistancePathSheaf
from .errors import GraphMismatch, NotASection, StalkMismatch
from .graph import EdgeId, VertexId, to_rational
from .path_sheaf import PathSheaf
from .sheaf import (
    BOTTOM,
    TOP,
    Assignment,
    Bottom,
    Cell,
    ChosenEdge,
    ChosenEdgeWithDist,
    Dist,
    EdgeCell,
    EdgePair,
    OrderedPairWithDist,
    StalkValue,
    VertexCell,
    check_stalks,
    is_section,
)

DEFAULT_PROBES = (Fraction(1), Fraction(1, 2), Fraction(7))


@dataclass(frozen=True)
class SheafMorphism:
    source_sheaf: DistancePathSheaf
    target_sheaf: PathSheaf
    component: Callable[[Cell, StalkValue], StalkValue]


def forget_distance(cell: Cell, value: StalkValue) -> StalkValue:
    """Drop the numeric part of a distance-sheaf value."""
    if isinstance(value, Bottom):
        return BOTTOM
    if isinstance(value, ChosenEdgeWithDist):
        return ChosenEdge(value.edge)
    if isinstance(value, OrderedPairWithDist):
        return EdgePair(value.incoming, value.outgoing)
    if isinstance(value, Dist):
        return TOP
    raise TypeError(f"{value!r} is not a distance-sheaf value")


def build_phi(dps: DistancePathSheaf, ps: PathSheaf) -> SheafMorphism:
    if dps.graph != ps.graph:
        raise GraphMismatch("both sheaves must live on the same graph")
    return SheafMorphism(dps, ps, forget_distance)


def probe_values(
    dps: DistancePathSheaf, v: VertexId, probes: Iterable[Fraction]
) -> list[StalkValue]:
    """A finite sample of the stalk over ``v``: every edge choice, combined
    with each probe distance where the stalk carries a free distance."""
    g = dps.graph
    incident = g.incident(v)
    if v == g.source:
        return [ChosenEdgeWithDist(e, 0) for e in incident]
    if v == g.sink:
        return [ChosenEdgeWithDist(e, x) for e in incident for x in probes]
    return [BOTTOM] + [
        OrderedPairWithDist(a, b, x) for a, b in permutations(incident, 2) for x in probes
    ]


def check_naturality(
    m: SheafMorphism, probes: Iterable = DEFAULT_PROBES
) -> list[tuple[VertexId, EdgeId, StalkValue]]:
    """Return every (v, e, x) at which the naturality square fails.

    Edge-choice structure is covered exhaustively. The distance coordinate is
    sampled, which is enough: for each fixed edge choice both composites are
    constant in the distance (the upper route forgets it immediately, the
    lower one forgets it after restriction), so one probe decides them all.
    """
    probes = [to_rational(x) for x in probes]
    dps, ps = m.source_sheaf, m.target_sheaf
    g = dps.graph
    violations = []
    for v in g.vertices:
        for x in probe_values(dps, v, probes):
            for e in g.incident(v):
                down_then_across = m.component(EdgeCell(e), dps.restrict(v, e, x))
                try:
                    across_then_down = ps.restrict(v, e, m.component(VertexCell(v), x))
                except StalkMismatch:
                    across_then_down = None
                if down_then_across != across_then_down:
                    violations.append((v, e, x))
    return violations


def push_section(m: SheafMorphism, s: Assignment) -> Assignment:
    """Apply the morphism cell by cell to a local section of the source sheaf."""
    check_stalks(m.source_sheaf, s)
    if not is_section(m.source_sheaf, s):
        raise NotASection("push_section needs a section of the source sheaf")
    return Assignment({cell: m.component(cell, value) for cell, value in s.items()})
