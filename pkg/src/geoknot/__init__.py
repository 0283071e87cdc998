"""Geodesic distance estimation on neighborhood graphs of surface
samples, with optional curvature-constrained shortest paths and
empirical verification of the approximation bounds."""

from .geometry import (
    angle,
    chord_lower_bound,
    discrete_curvature,
    polyline_length,
    triangle_third_side,
    triangle_third_side_curv_deriv,
    wedge_norm,
)
from .graph import (
    NeighborhoodGraph,
    build_graph,
    build_index,
    connected_components,
    graph_stats,
    radius_query,
    read_graph_csv,
    write_graph_csv,
)
from .paths import (
    DistanceField,
    EdgeStateEngine,
    PathResult,
    brute_force_constrained,
    constrained_shortest,
    dijkstra,
    extract_path,
    path_from_predecessors,
    path_max_curvature,
    pseudo_metric,
    shortest_distances,
)
from .surfaces import (
    CoveringEstimate,
    SampleSet,
    SurfaceSpec,
    circle,
    constrained_oracle,
    covering_radius,
    curvature_bound,
    cylinder,
    directed_hausdorff,
    disk,
    geodesic_oracle,
    intrinsic_diameter,
    load_sample,
    read_points_csv,
    sample_surface,
    sphere,
    write_points_csv,
)
from .validation import (
    COMPARISON_CONSTANT,
    FLOAT_SLACK,
    REPORT_HEADER,
    BoundReport,
    GateError,
    HardFailure,
    PairCheck,
    perturb_graph_weights,
    select_pairs,
    summary_payload,
    surface_label,
    verify_chord_bound,
    verify_constrained_lower,
    verify_constrained_upper,
    verify_curvature_consistency,
    verify_unconstrained_lower,
    verify_unconstrained_upper,
    write_report_csv,
    write_summary_json,
)

__version__ = "0.1.0"

__all__ = [
    "angle",
    "wedge_norm",
    "discrete_curvature",
    "chord_lower_bound",
    "triangle_third_side",
    "triangle_third_side_curv_deriv",
    "polyline_length",
    "SurfaceSpec",
    "SampleSet",
    "CoveringEstimate",
    "sphere",
    "disk",
    "cylinder",
    "circle",
    "sample_surface",
    "geodesic_oracle",
    "constrained_oracle",
    "curvature_bound",
    "intrinsic_diameter",
    "covering_radius",
    "directed_hausdorff",
    "read_points_csv",
    "write_points_csv",
    "load_sample",
    "NeighborhoodGraph",
    "build_graph",
    "build_index",
    "radius_query",
    "graph_stats",
    "connected_components",
    "read_graph_csv",
    "write_graph_csv",
    "DistanceField",
    "PathResult",
    "dijkstra",
    "extract_path",
    "constrained_shortest",
    "brute_force_constrained",
    "pseudo_metric",
    "path_max_curvature",
    "path_from_predecessors",
    "shortest_distances",
    "EdgeStateEngine",
    "BoundReport",
    "PairCheck",
    "GateError",
    "HardFailure",
    "COMPARISON_CONSTANT",
    "FLOAT_SLACK",
    "REPORT_HEADER",
    "surface_label",
    "perturb_graph_weights",
    "select_pairs",
    "summary_payload",
    "verify_unconstrained_upper",
    "verify_unconstrained_lower",
    "verify_constrained_upper",
    "verify_constrained_lower",
    "verify_chord_bound",
    "verify_curvature_consistency",
    "write_report_csv",
    "write_summary_json",
    "__version__",
]
