"""Partitions of complete geometric graphs into k-planar and k-quasi-planar parts.

Exact-arithmetic constructions and verifiers for edge partitions of the
complete geometric graph on a point set in general position, together with
bound evaluators and brute-force extremal oracles that certify them at
small scale.
"""

from .coloring import Coloring
from .geometry import (
    COORD_LIMIT,
    Edge,
    GenerationError,
    Point,
    PointSet,
    all_edges,
    gen_convex_polygon,
    gen_perfect_crossing_family_pointset,
    gen_random_pointset,
    orientation,
    segments_cross,
    validate_pointset,
)

__version__ = "0.1.0"

__all__ = [
    "COORD_LIMIT",
    "Coloring",
    "Edge",
    "GenerationError",
    "Point",
    "PointSet",
    "all_edges",
    "gen_convex_polygon",
    "gen_perfect_crossing_family_pointset",
    "gen_random_pointset",
    "orientation",
    "segments_cross",
    "validate_pointset",
    "__version__",
]
