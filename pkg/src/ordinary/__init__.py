"""Ordinary and monochromatic intersection points in arrangements of lines,
hyperplanes and pseudolines, computed with exact rational arithmetic."""

from .arrangement2d import (
    Bundle,
    OrdinaryResult2D,
    bundles_on_base,
    find_ordinary_point_2d,
    find_triple,
    lowest_candidate,
)
from .errors import (
    AllConcurrent,
    AllParallel,
    DegenerateLine,
    DimensionMismatch,
    DuplicateHyperplane,
    HypothesisError,
    HypothesisViolated,
    IdenticalLines,
    InvalidArrangement,
    MultipleCrossings,
    NoCrossing,
    NotAnArrangement,
    OrdinaryError,
    SpecInfeasible,
    WitnessOnLine,
)
from .flats import (
    Flat,
    HyperplaneD,
    canonical_hyperplane,
    flat_from_hyperplanes,
    intersect_flats,
    maximal_independent_subset,
    solve_point,
)
from .generators import GenSpec, SplitMix64, generate
from .geometry import (
    BLUE,
    RED,
    AffineMap2,
    Line2,
    Point2,
    Side,
    base_frame,
    canonical_line,
    intersect_lines,
    parse_scalar,
    side_of_line,
)
from .hyperplanes import (
    FamilyPartition,
    NoIntersectionPoint,
    OrdinaryResultND,
    find_ordinary_point_nd,
    partition_families,
)
from .pseudolines import (
    MonoResult,
    Pseudoline,
    TriangleState,
    embed_lines,
    eval_at_x,
    find_monochromatic,
    find_ordinary_pseudoline,
    intersect_pseudolines,
    pseudolines_through,
    validate_arrangement,
)

__version__ = "0.1.0"
