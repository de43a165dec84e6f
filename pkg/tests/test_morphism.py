from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathsheaf import (
    BOTTOM,
    TOP,
    Assignment,
    ChosenEdge,
    ChosenEdgeWithDist,
    Dist,
    DistancePathSheaf,
    EdgeCell,
    EdgePair,
    OrderedPairWithDist,
    Path,
    PathSheaf,
    SheafMorphism,
    VertexCell,
    build_graph,
    build_phi,
    check_naturality,
    directed_path_to_section,
    is_global_section,
    is_section,
    push_section,
    section_to_directed_path,
    section_to_path,
)
from pathsheaf.errors import GraphMismatch, NotASection
from pathsheaf.morphism import forget_distance, probe_values
from pathsheaf.oracle import enumerate_dp_patterns, enumerate_global_sections_dp

from graphs import graphs


@pytest.fixture
def phi(dps, ps):
    return build_phi(dps, ps)


def test_components(phi):
    c = phi.component
    assert c(VertexCell("v_3"), OrderedPairWithDist("e_2", "e_4", 1)) == EdgePair("e_2", "e_4")
    assert c(EdgeCell("e_4"), Dist(2)) == TOP
    assert c(VertexCell("v_4"), BOTTOM) == BOTTOM
    assert c(EdgeCell("e_4"), BOTTOM) == BOTTOM
    assert c(VertexCell("v_S"), ChosenEdgeWithDist("e_1", 0)) == ChosenEdge("e_1")
    assert c(VertexCell("v_T"), ChosenEdgeWithDist("e_3", 5)) == ChosenEdge("e_3")
    with pytest.raises(TypeError):
        forget_distance(EdgeCell("e_1"), TOP)


def test_graph_mismatch(dps, heavy_ladder):
    with pytest.raises(GraphMismatch):
        build_phi(dps, PathSheaf(heavy_ladder))


def test_naturality_on_ladder(phi):
    assert check_naturality(phi, [1, Fraction(1, 2), 7]) == []


def test_naturality_single_edge():
    g = build_graph(["v_S", "v_T"], [("e", "v_S", "v_T", 1)], "v_S", "v_T")
    assert check_naturality(build_phi(DistancePathSheaf(g), PathSheaf(g))) == []


def test_corrupted_morphism_reports_every_active_triple(dps, ps):
    def broken(cell, value):
        if isinstance(cell, EdgeCell):
            return BOTTOM
        return forget_distance(cell, value)

    probes = [Fraction(1), Fraction(1, 2), Fraction(7)]
    violations = check_naturality(SheafMorphism(dps, ps, broken), probes)
    expected = [
        (v, e, x)
        for v in dps.graph.vertices
        for x in probe_values(dps, v, probes)
        for e in dps.graph.incident(v)
        if dps.restrict(v, e, x) != BOTTOM
    ]
    assert violations == expected
    assert len(violations) > 0


def test_push_path_sections(phi, dps, ps, s1):
    route = Path(("e_2", "e_4", "e_3"), ("v_S", "v_3", "v_4", "v_T"))
    assert push_section(phi, directed_path_to_section(dps, route, make_global=True)) == s1
    direct = push_section(phi, directed_path_to_section(dps, Path(("e_1",), ("v_S", "v_T")), make_global=True))
    active = [c for c, v in direct.items() if isinstance(c, EdgeCell) and v == TOP]
    assert active == [EdgeCell("e_1")]
    assert is_global_section(ps, direct)
    assert push_section(phi, Assignment()) == Assignment()


def test_push_rejects_non_sections(phi, dps):
    s = directed_path_to_section(dps, Path(("e_1",), ("v_S", "v_T")), make_global=True)
    with pytest.raises(NotASection):
        push_section(phi, s.set(EdgeCell("e_1"), Dist(2)))


def test_some_distance_section_pushes_to_s2(phi, dps, s2):
    # the maps admit a labelled square, so s2 does have a preimage
    preimages = [p.section for p in enumerate_dp_patterns(dps) if push_section(phi, p.section) == s2]
    assert preimages
    assert all(p.free_components == 1 for p in enumerate_dp_patterns(dps) if p.section in preimages)


@settings(max_examples=50, deadline=None)
@given(
    graphs(max_vertices=8),
    st.lists(st.fractions(min_value=Fraction(1, 1000), max_value=1000), min_size=1, max_size=4),
)
def test_naturality_property(g, probes):
    assert check_naturality(build_phi(DistancePathSheaf(g), PathSheaf(g)), probes) == []


@settings(max_examples=50, deadline=None)
@given(graphs(max_vertices=8))
def test_push_preserves_global_sections(g):
    dps, ps = DistancePathSheaf(g), PathSheaf(g)
    phi = build_phi(dps, ps)
    for s in enumerate_global_sections_dp(dps):
        pushed = push_section(phi, s)
        assert is_global_section(ps, pushed)
        assert section_to_path(ps, pushed) == section_to_directed_path(dps, s)


@settings(max_examples=30, deadline=None)
@given(graphs(max_vertices=7))
def test_push_preserves_every_global_section(g):
    dps, ps = DistancePathSheaf(g), PathSheaf(g)
    phi = build_phi(dps, ps)
    for p in enumerate_dp_patterns(dps):
        pushed = push_section(phi, p.section)
        assert is_global_section(ps, pushed)
        assert section_to_path(ps, pushed) == section_to_directed_path(dps, p.section)


@settings(max_examples=30, deadline=None)
@given(graphs(max_vertices=8), st.randoms(use_true_random=False))
def test_push_preserves_local_sections(g, rng):
    dps, ps = DistancePathSheaf(g), PathSheaf(g)
    phi = build_phi(dps, ps)
    for s in enumerate_global_sections_dp(dps):
        part = s.restrict_to([c for c in s if rng.random() < 0.5])
        pushed = push_section(phi, part)
        assert is_section(ps, pushed) and pushed.domain == part.domain
