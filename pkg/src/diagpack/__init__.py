"""Maximum packings of non-intersecting positive diagonals in square lattice arrays."""

from .bounds import (
    BoundsReport,
    closed_form_D,
    d1_exact,
    d2_upper,
    d3_upper,
    m_l_floor,
    report,
    upper_bound_sum,
)
from .construction import (
    ConstructionResult,
    DivisibilityError,
    build_l_arrangement,
    closed_form_L,
    telescoping_sum_L,
)
from .grid_core import (
    Arrangement,
    Diagonal,
    GridSpec,
    LatticePoint,
    OutOfBoundsError,
    PathDecomposition,
    decompose,
    enumerate_all,
    intersects,
    line_of,
    points_of,
    unit_diagonals,
    validate,
)
from .oracle import ConflictGraph, ExactResult, cross_validate, exact_mis, exact_per_line, path_dp
from .render import RenderStyle, render_ascii, render_svg

__version__ = "0.1.0"
