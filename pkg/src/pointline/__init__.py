"""Exact rational point-line incidence structures and bound verification.

The package enumerates the lines determined by finite planar point sets
in exact rational arithmetic, verifies a family of classical incidence
inequalities on concrete configurations, and computes the bound
constants of the incidence and line-count lower bounds with rigorous
rational enclosures.
"""
from .arrangement import (
    Arrangement,
    IncidenceBreakdown,
    LineRecord,
    PointSet,
    build_arrangement,
    classify_pairs_incidences,
    compute_k,
    lines_with_at_most,
    max_lines_through_point,
    visibility_edge_count,
)
from .bounds import (
    BoundParamsFew,
    BoundParamsWD,
    CrossingConstants,
    DEFAULT_CONSTANTS,
    GraphSize,
    Interval,
    ScanResult,
    TheoremCheck,
    crossing_lower_bound,
    eps_few,
    f_wd,
    few_lines_lower_bound,
    few_params,
    hirzebruch_check,
    scan_constants_few,
    scan_constants_wd,
    st_bound_edges,
    st_bound_lines,
    tail_sum,
    verify_theorems,
    wd_params,
)
from .errors import (
    DomainError,
    DuplicatePoint,
    IdenticalPoints,
    InvalidCutoff,
    PointFormatError,
    PointLineError,
    PreconditionViolated,
    TooFewPoints,
    Unresolved,
)
from .generators import (
    GeneratorSpec,
    circle,
    collinear,
    dump_points,
    grid,
    load_points,
    load_points_file,
    near_pencil,
    random_points,
    save_points_file,
)
from .geometry import LineKey, Point, Rational, line_through, normalize_key, orient, point
from .oracle import brute_force_lines

__version__ = "0.1.0"
