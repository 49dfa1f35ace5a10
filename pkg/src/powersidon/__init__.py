"""Empirical toolkit for generalized Sidon sets of perfect powers.

Representation counting over k-th powers, seeded random subset
construction with exact expectations, disjoint-representation packing and
sunflower extraction, B_h[g] verification, density and concentration
experiments, and classical counting oracles.
"""

from .density import (
    ConcentrationReport,
    DensityFit,
    TrialRow,
    concentration_trial,
    count_up_to,
    fit_density_exponent,
    geometric_grid,
)
from .errors import ResourceLimitError, UndefinedFitError, WidthOverflowError
from .oracles import (
    DivisorBoundResult,
    DivisorScanReport,
    HypothesisKReport,
    TwoSquaresCount,
    count_two_squares_by_square_test,
    divisor_bound_check,
    divisor_bound_scan,
    divisor_count,
    hypothesis_k_scan,
    sum_two_squares_sieve,
    taxicab_scan,
)
from .powersums import (
    MAX_VALUE,
    FullPowers,
    PowerSet,
    RepCountProfile,
    Representation,
    count_representations,
    count_solutions_in_box,
    enumerate_representations,
    integer_kth_root,
    read_power_set,
    representation_profile,
    write_power_set,
)
from .randomsets import (
    DENSITY_H,
    DENSITY_K,
    TABLE,
    DecayFit,
    ExpectedCount,
    RandomModel,
    expectation_decay_fit,
    expected_count,
    expected_representation_count,
    membership_probability,
    sample_set,
)
from .structure import (
    BhgViolation,
    BoundednessReport,
    GreedyResult,
    PackingResult,
    SunflowerFamily,
    WindowStats,
    boundedness_scan,
    find_delta_system,
    greedy_bounded_subset,
    is_delta_system,
    max_disjoint_representations,
    sidon_counting_bound,
    verify_bhg,
)

__version__ = "0.1.0"

__all__ = [
    "BhgViolation",
    "BoundednessReport",
    "ConcentrationReport",
    "DecayFit",
    "DensityFit",
    "DivisorBoundResult",
    "DivisorScanReport",
    "ExpectedCount",
    "FullPowers",
    "GreedyResult",
    "HypothesisKReport",
    "MAX_VALUE",
    "PackingResult",
    "PowerSet",
    "RandomModel",
    "RepCountProfile",
    "Representation",
    "ResourceLimitError",
    "SunflowerFamily",
    "TrialRow",
    "TwoSquaresCount",
    "UndefinedFitError",
    "WidthOverflowError",
    "WindowStats",
    "boundedness_scan",
    "concentration_trial",
    "count_representations",
    "count_solutions_in_box",
    "count_two_squares_by_square_test",
    "count_up_to",
    "divisor_bound_check",
    "divisor_bound_scan",
    "divisor_count",
    "enumerate_representations",
    "expectation_decay_fit",
    "expected_count",
    "expected_representation_count",
    "find_delta_system",
    "fit_density_exponent",
    "geometric_grid",
    "greedy_bounded_subset",
    "hypothesis_k_scan",
    "integer_kth_root",
    "is_delta_system",
    "max_disjoint_representations",
    "membership_probability",
    "read_power_set",
    "representation_profile",
    "sample_set",
    "sidon_counting_bound",
    "sum_two_squares_sieve",
    "taxicab_scan",
    "verify_bhg",
    "write_power_set",
    "DENSITY_H",
    "DENSITY_K",
    "TABLE",
]
