"""Path sheaves on weighted graphs, with Dijkstra's algorithm and A* phrased
as the extension of local sections to global sections."""

from .distance_sheaf import (
    DistancePathSheaf,
    assert_no_active_cycle,
    build_distance_path_sheaf,
    directed_path_to_section,
    section_to_directed_path,
)
from .errors import PathSheafError
from .graph import Edge, Graph, Path, build_graph, incident_edges, path_from_edges, validate_path
from .morphism import SheafMorphism, build_phi, check_naturality, push_section
from .path_sheaf import (
    PathSheaf,
    active_cycles,
    build_path_sheaf,
    cost,
    path_to_section,
    section_to_path,
)
from .pathfinding import (
    NoPath,
    ShortestPath,
    TentativeState,
    astar_cost,
    dijkstra_dp,
    plain_cost,
    search_p,
    tentative_trace,
)
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
    inconsistent_pairs,
    is_global_section,
    is_section,
)

__all__ = [
    "Assignment",
    "BOTTOM",
    "ChosenEdge",
    "ChosenEdgeWithDist",
    "Dist",
    "DistancePathSheaf",
    "Edge",
    "EdgeCell",
    "EdgePair",
    "Graph",
    "NoPath",
    "OrderedPairWithDist",
    "Path",
    "PathSheaf",
    "PathSheafError",
    "SheafMorphism",
    "ShortestPath",
    "TOP",
    "TentativeState",
    "VertexCell",
    "active_cycles",
    "assert_no_active_cycle",
    "astar_cost",
    "build_distance_path_sheaf",
    "build_graph",
    "build_path_sheaf",
    "build_phi",
    "check_naturality",
    "cost",
    "dijkstra_dp",
    "directed_path_to_section",
    "extend",
    "incident_edges",
    "inconsistent_pairs",
    "is_global_section",
    "is_section",
    "path_from_edges",
    "path_to_section",
    "plain_cost",
    "push_section",
    "search_p",
    "section_to_directed_path",
    "section_to_path",
    "tentative_trace",
    "validate_path",
]
