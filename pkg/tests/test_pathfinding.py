from fractions import Fraction

import pytest
from hypothesis import given, settings

from pathsheaf import (
    DistancePathSheaf,
    NoPath,
    Path,
    PathSheaf,
    ShortestPath,
    VertexCell,
    astar_cost,
    build_graph,
    build_phi,
    dijkstra_dp,
    is_global_section,
    is_section,
    path_to_section,
    push_section,
    search_p,
    section_to_path,
    tentative_trace,
    validate_path,
)
from pathsheaf.oracle import classical_dijkstra, distances_to_sink
from pathsheaf.pathfinding import extend_along, plain_cost

from graphs import graphs

ROUTE = Path(("e_2", "e_4", "e_3"), ("v_S", "v_3", "v_4", "v_T"))
SINGLE = build_graph(["v_S", "v_T"], [("e", "v_S", "v_T", 3)], "v_S", "v_T")


def test_dijkstra_unit_ladder(dps):
    result = dijkstra_dp(dps)
    assert isinstance(result, ShortestPath)
    assert result.path == Path(("e_1",), ("v_S", "v_T"))
    assert result.length == 1
    assert is_global_section(dps, result.global_section)


def test_dijkstra_heavy_ladder(heavy_ladder):
    dps = DistancePathSheaf(heavy_ladder)
    result = dijkstra_dp(dps)
    assert result.path == ROUTE and result.length == 3
    assert result.global_section.vertex("v_T").dist == result.length


def test_dijkstra_disconnected(disconnected):
    assert isinstance(dijkstra_dp(DistancePathSheaf(disconnected)), NoPath)


def test_trace_first_step(dps):
    first = tentative_trace(dps)[0]
    assert first.current == "v_S"
    assert first.visited == {"v_S"}
    assert first.open_vertices == {"v_T", "v_3"}
    assert "v_S" in first.tentative


def test_trace_single_edge():
    trace = tentative_trace(DistancePathSheaf(SINGLE))
    assert len(trace) == 1
    assert trace[0].tentative["v_T"][VertexCell("v_T")].dist == 3


def test_trace_no_path(disconnected):
    last = tentative_trace(DistancePathSheaf(disconnected))[-1]
    assert last.open_vertices == frozenset()
    assert "t" not in last.tentative


def test_trace_matches_result(heavy_ladder):
    dps = DistancePathSheaf(heavy_ladder)
    last = tentative_trace(dps)[-1]
    result = dijkstra_dp(dps)
    s_t = last.tentative["v_T"]
    assert all(result.global_section[c] == v for c, v in s_t.items())


def test_search_p_examples(ps, heavy_ladder):
    result = search_p(ps)
    assert result.path == Path(("e_1",), ("v_S", "v_T")) and result.length == 1
    heavy = PathSheaf(heavy_ladder)
    zero = search_p(heavy, astar_cost(heavy, {}))
    exact = search_p(heavy, astar_cost(heavy, distances_to_sink(heavy_ladder)))
    assert zero.length == exact.length == 3
    assert zero.path == exact.path == ROUTE
    assert zero.global_section == exact.global_section
    assert exact.expanded < zero.expanded


def test_search_p_no_path(disconnected):
    assert isinstance(search_p(PathSheaf(disconnected)), NoPath)


def test_astar_cost_rejects_negative(ps):
    with pytest.raises(ValueError):
        astar_cost(ps, {"v_3": -1})(path_to_section(ps, Path((), ("v_S",))), "v_3")


def test_astar_cost_callable(ps):
    s = path_to_section(ps, Path(("e_2",), ("v_S", "v_3")))
    assert astar_cost(ps, lambda v: Fraction(1, 2))(s, "v_3") == Fraction(3, 2)
    assert plain_cost(ps)(s, "v_3") == 1


def test_extend_along(ps):
    s = path_to_section(ps, Path(("e_2",), ("v_S", "v_3")))
    grown = extend_along(ps, s, Path(("e_2",), ("v_S", "v_3")), "e_4")
    assert grown == path_to_section(ps, Path(("e_2", "e_4"), ("v_S", "v_3", "v_4")))


@settings(max_examples=60, deadline=None)
@given(graphs(max_vertices=10))
def test_solvers_agree_with_classical(g):
    expected, _ = classical_dijkstra(g)
    dps, ps = DistancePathSheaf(g), PathSheaf(g)
    for result in (dijkstra_dp(dps), search_p(ps)):
        assert result.length == expected
        assert validate_path(g, result.path)
        assert sum(g.weight(e) for e in result.path.edges) == expected


@settings(max_examples=40, deadline=None)
@given(graphs(max_vertices=10, connected=False))
def test_solvers_report_no_path(g):
    assert classical_dijkstra(g) == (None, None)
    assert isinstance(dijkstra_dp(DistancePathSheaf(g)), NoPath)
    assert isinstance(search_p(PathSheaf(g)), NoPath)


@settings(max_examples=40, deadline=None)
@given(graphs(max_vertices=10))
def test_trace_sections_are_sections(g):
    dps = DistancePathSheaf(g)
    for state in tentative_trace(dps):
        assert state.current in state.visited
        assert is_section(dps, state.current_section)
        for s in state.tentative.values():
            assert is_section(dps, s)


@settings(max_examples=40, deadline=None)
@given(graphs(max_vertices=10))
def test_result_pushes_to_its_path(g):
    dps, ps = DistancePathSheaf(g), PathSheaf(g)
    result = dijkstra_dp(dps)
    pushed = push_section(build_phi(dps, ps), result.global_section)
    assert is_global_section(ps, pushed)
    assert section_to_path(ps, pushed) == result.path


@settings(max_examples=40, deadline=None)
@given(graphs(max_vertices=10))
def test_exact_heuristic_never_expands_more(g):
    ps = PathSheaf(g)
    plain = search_p(ps)
    exact = search_p(ps, astar_cost(ps, distances_to_sink(g)))
    assert exact.length == plain.length
    assert exact.expanded <= plain.expanded


@settings(max_examples=20, deadline=None)
@given(graphs(max_vertices=10, connected=False))
def test_exact_heuristic_with_unreachable_vertices(g):
    ps = PathSheaf(g)
    assert isinstance(search_p(ps, astar_cost(ps, distances_to_sink(g))), NoPath)
