"""Exact growth rates of geometric grid classes of permutations."""

from .errors import GeomGridError
from .graph import (
    Orientation,
    ParityReport,
    SignedGraph,
    consistent_orientation,
    parity_report,
    refine_graph,
    row_column_graph,
)
from .growth import (
    GrowthRateResult,
    compare_classes,
    cycle_class_growth_rate,
    geom_growth_rate,
    monotone_growth_rate,
)
from .matching import (
    characteristic_polynomial,
    expand_at,
    fully_expand,
    matching_numbers,
    matching_polynomial,
    mu_via_cycle_sum,
    rook_numbers,
)
from .matrix import GridMatrix, double_refinement, parse_matrix, render_matrix, set_cell
from .oracle import empirical_growth_rate, enumerate_counts, trace_monoid_counts, word_to_gridded
from .polynomial import IntPolynomial, RootResult, largest_root

__version__ = "0.1.0"
