import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathsheaf import (
    BOTTOM,
    TOP,
    Assignment,
    ChosenEdge,
    EdgeCell,
    EdgePair,
    PathSheaf,
    VertexCell,
    extend,
    inconsistent_pairs,
    is_global_section,
    is_section,
)
from pathsheaf.errors import CellAlreadyAssigned, NotIncident, StalkMismatch
from pathsheaf.oracle import enumerate_global_sections_p

from graphs import graphs


def test_s1_is_global(ps, s1):
    assert is_section(ps, s1)
    assert is_global_section(ps, s1)
    assert inconsistent_pairs(ps, s1) == []


def test_flipping_an_edge_breaks_both_ends(ps, s1):
    broken = s1.set(EdgeCell("e_4"), BOTTOM)
    assert not is_section(ps, broken)
    # v_3 holds {e_2,e_4} and v_4 holds {e_3,e_4}; both restrict to top on e_4
    assert inconsistent_pairs(ps, broken) == [("v_3", "e_4"), ("v_4", "e_4")]


def test_empty_assignment_is_vacuous(ps):
    assert is_section(ps, Assignment())
    assert not is_global_section(ps, Assignment())
    assert inconsistent_pairs(ps, Assignment()) == []


def test_stalk_mismatch(ps, s1):
    with pytest.raises(StalkMismatch):
        is_section(ps, s1.set(VertexCell("v_S"), EdgePair("e_1", "e_2")))
    with pytest.raises(StalkMismatch):
        is_section(ps, Assignment({EdgeCell("nope"): TOP}))


def test_restrict_needs_incidence(ps):
    with pytest.raises(NotIncident):
        ps.restrict("v_5", "e_1", BOTTOM)


def test_extend_consistent(ps):
    local = Assignment.from_ids(ps.graph, {"v_S": ChosenEdge("e_2"), "e_2": TOP})
    assert is_section(ps, local)
    grown, ok = extend(ps, local, VertexCell("v_3"), EdgePair("e_2", "e_4"))
    assert ok and len(grown) == 3
    assert len(local) == 2  # input untouched


def test_extend_inconsistent_is_reported_not_raised(ps):
    local = Assignment.from_ids(ps.graph, {"v_S": ChosenEdge("e_2"), "e_2": TOP})
    grown, ok = extend(ps, local, VertexCell("v_3"), EdgePair("e_4", "e_5"))
    assert not ok
    assert grown[VertexCell("v_3")] == EdgePair("e_4", "e_5")
    assert is_section(ps, local)


def test_extend_empty(ps):
    grown, ok = extend(ps, Assignment(), EdgeCell("e_1"), TOP)
    assert ok and grown == Assignment({EdgeCell("e_1"): TOP})


def test_extend_errors(ps, s1):
    with pytest.raises(CellAlreadyAssigned):
        extend(ps, s1, EdgeCell("e_1"), TOP)
    with pytest.raises(StalkMismatch):
        extend(ps, Assignment(), EdgeCell("e_1"), EdgePair("e_1", "e_2"))


def test_assignment_is_immutable_value(s1):
    changed = s1.set(EdgeCell("e_1"), TOP)
    assert s1[EdgeCell("e_1")] == BOTTOM
    assert changed != s1
    assert hash(s1) == hash(Assignment(dict(s1)))
    with pytest.raises(TypeError):
        s1[EdgeCell("e_1")] = TOP


def _random_assignment(ps, rng):
    data = {}
    for cell in ps.cells():
        if rng.random() < 0.3:
            continue
        if isinstance(cell, VertexCell):
            data[cell] = rng.choice(ps.vertex_stalk(cell.id))
        else:
            data[cell] = rng.choice([TOP, BOTTOM])
    return Assignment(data)


@settings(max_examples=60)
@given(graphs(max_vertices=7), st.randoms(use_true_random=False))
def test_is_section_iff_no_inconsistent_pairs(g, rng):
    ps = PathSheaf(g)
    for _ in range(10):
        a = _random_assignment(ps, rng)
        assert is_section(ps, a) == (inconsistent_pairs(ps, a) == [])


@settings(max_examples=40)
@given(graphs(max_vertices=7), st.randoms(use_true_random=False))
def test_sections_restrict_to_sections(g, rng):
    ps = PathSheaf(g)
    for s in enumerate_global_sections_p(ps):
        keep = [c for c in s if rng.random() < 0.5]
        assert is_section(ps, s.restrict_to(keep))


def test_random_non_members_fail(ps):
    members = set(enumerate_global_sections_p(ps))
    rng = random.Random(7)
    seen = 0
    while seen < 200:
        data = {c: rng.choice(ps.vertex_stalk(c.id)) if isinstance(c, VertexCell)
                else rng.choice([TOP, BOTTOM]) for c in ps.cells()}
        a = Assignment(data)
        if a in members:
            continue
        seen += 1
        assert not is_global_section(ps, a)
