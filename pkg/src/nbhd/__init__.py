"""Neighborhood families for cellular automata: exact counts, enumeration,
sequence emission, and a totalistic simulation engine."""

from .counting import (
    binomial,
    closed_form_available,
    count,
    delannoy,
    diamond_count,
    diamond_sharp_count,
    k_count,
    k_radius_count,
    moore_radius_count,
    moore_radius_sharp_count,
    sharp_k_count,
)
from .engine import (
    Boundary,
    Grid,
    Rule,
    format_rule,
    live_cells,
    load_pattern,
    make_grid,
    parse_rule,
    population,
    render_snapshot,
    run,
    step,
)
from .errors import (
    BoundsError,
    CapacityError,
    DimensionError,
    DomainError,
    ParseError,
)
from .neighborhoods import (
    CHEBYSHEV,
    MANHATTAN,
    DistanceKind,
    Family,
    NeighborhoodSpec,
    Offset,
    brute_force_count,
    contains,
    diamond,
    distance,
    enumerate_offsets,
    format_offset,
    k_radius,
    minkowski,
    moore,
    narrow_von_neumann,
    parse_offset,
    von_neumann,
    within_distance,
)
from .sequences import (
    Mismatch,
    SequenceEntry,
    SequenceId,
    diff_against_reference,
    emit_bfile,
    generate,
    parse_bfile,
)
from .verification import CheckResult, run_verification

__version__ = "0.1.0"

__all__ = [
    "BoundsError",
    "Boundary",
    "CHEBYSHEV",
    "CapacityError",
    "CheckResult",
    "DimensionError",
    "DistanceKind",
    "DomainError",
    "Family",
    "Grid",
    "MANHATTAN",
    "Mismatch",
    "NeighborhoodSpec",
    "Offset",
    "ParseError",
    "Rule",
    "SequenceEntry",
    "SequenceId",
    "binomial",
    "brute_force_count",
    "closed_form_available",
    "contains",
    "count",
    "delannoy",
    "diamond",
    "diamond_count",
    "diamond_sharp_count",
    "diff_against_reference",
    "distance",
    "emit_bfile",
    "enumerate_offsets",
    "format_offset",
    "format_rule",
    "generate",
    "k_count",
    "k_radius",
    "k_radius_count",
    "live_cells",
    "load_pattern",
    "make_grid",
    "minkowski",
    "moore",
    "moore_radius_count",
    "moore_radius_sharp_count",
    "narrow_von_neumann",
    "parse_bfile",
    "parse_offset",
    "parse_rule",
    "population",
    "render_snapshot",
    "run",
    "run_verification",
    "sharp_k_count",
    "step",
    "von_neumann",
    "within_distance",
]
