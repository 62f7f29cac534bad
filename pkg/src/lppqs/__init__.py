"""Exact combinatorics and simulation for planar last passage percolation.

The quarter-square passage-time law factors as the product of a half-space
law and a point-to-line law; this package verifies that identity exactly at
desk scale (growth bijections, character determinants, bounded sums) and
probes its KPZ-scale consequences by seeded Monte Carlo.
"""

from .characters import (
    LaurentPolynomial,
    bounded_schur_sum,
    box_partitions,
    character_jt,
    character_tab,
    complete_homogeneous,
    okada_product,
    product_of_variables,
)
from .growth import (
    GrowthGrid,
    col_rsk_local,
    greene_oracle,
    grow_grid,
    invert_local,
    row_rsk_local,
)
from .lpp import (
    EnumerationBudgetError,
    Filling,
    Geometry,
    OscillatingTableau,
    bz_map,
    generating_series,
    lpp_time,
    oscillating_tableau,
    p2l_map,
    weight_of,
)
from .partitions import (
    EMPTY,
    GTPattern,
    Partition,
    SpGTPattern,
    Tableau,
    enumerate_patterns,
    gt_type,
    interlaces,
    pattern_to_tableau,
    tableau_to_pattern,
)
from .probability import (
    GeometricSpec,
    ScalingConstants,
    SimulationReport,
    exact_cdf,
    factorization_report,
    sample_lpp,
    sample_passage_times,
    scaling_constants,
)

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "EnumerationBudgetError",
    "Filling",
    "GTPattern",
    "Geometry",
    "GeometricSpec",
    "GrowthGrid",
    "LaurentPolynomial",
    "OscillatingTableau",
    "Partition",
    "ScalingConstants",
    "SimulationReport",
    "SpGTPattern",
    "Tableau",
    "bounded_schur_sum",
    "box_partitions",
    "bz_map",
    "character_jt",
    "character_tab",
    "col_rsk_local",
    "complete_homogeneous",
    "enumerate_patterns",
    "exact_cdf",
    "factorization_report",
    "generating_series",
    "greene_oracle",
    "grow_grid",
    "gt_type",
    "interlaces",
    "invert_local",
    "lpp_time",
    "okada_product",
    "oscillating_tableau",
    "p2l_map",
    "pattern_to_tableau",
    "product_of_variables",
    "row_rsk_local",
    "sample_lpp",
    "sample_passage_times",
    "scaling_constants",
    "tableau_to_pattern",
    "weight_of",
]
