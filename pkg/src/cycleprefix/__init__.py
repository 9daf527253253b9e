"""Cycle prefix digraphs: construction, metrics, routing, and automorphism
group certification."""

from .analytics import (
    UNREACHABLE,
    DistanceTable,
    Path,
    bfs_distances,
    diameter,
    distance,
    eccentricities,
    greedy_route,
    is_strongly_connected,
    path_containing_symbol,
    shortest_path,
)
from .automorphism import (
    CertificationReport,
    apply_alphabet,
    arc_type_preserved,
    brute_force_automorphisms,
    certify_theorem,
    compose_bijections,
    derived_permutation,
    identity_bijection,
    identity_permutation,
    induced_automorphism,
    invert_bijection,
    is_automorphism,
    is_compatible,
    propagate_compatibility,
)
from .core import (
    ArcLabel,
    Params,
    ResourceLimitError,
    Rotation,
    Shift,
    Vertex,
    classify_arc,
    falling_factorial,
    format_vertex,
    in_neighbors,
    initial_vertex,
    out_neighbors,
    parse_vertex,
    rank,
    rotate,
    rotate_any,
    shift,
    unrank,
    validate_params,
    vertices,
)
from .families import (
    check_cayley_correspondence,
    complete_to_sn,
    cycle_generator,
    kautz_out_neighbors,
)
from .kernel import BACKEND_NAME

__version__ = "0.1.0"

__all__ = [
    "ArcLabel",
    "BACKEND_NAME",
    "CertificationReport",
    "DistanceTable",
    "Params",
    "Path",
    "ResourceLimitError",
    "Rotation",
    "Shift",
    "UNREACHABLE",
    "Vertex",
    "apply_alphabet",
    "arc_type_preserved",
    "bfs_distances",
    "brute_force_automorphisms",
    "certify_theorem",
    "check_cayley_correspondence",
    "classify_arc",
    "complete_to_sn",
    "compose_bijections",
    "cycle_generator",
    "derived_permutation",
    "diameter",
    "distance",
    "eccentricities",
    "falling_factorial",
    "format_vertex",
    "greedy_route",
    "identity_bijection",
    "identity_permutation",
    "in_neighbors",
    "induced_automorphism",
    "initial_vertex",
    "invert_bijection",
    "is_automorphism",
    "is_compatible",
    "is_strongly_connected",
    "kautz_out_neighbors",
    "out_neighbors",
    "parse_vertex",
    "path_containing_symbol",
    "propagate_compatibility",
    "rank",
    "rotate",
    "rotate_any",
    "shift",
    "shortest_path",
    "unrank",
    "validate_params",
    "vertices",
]
