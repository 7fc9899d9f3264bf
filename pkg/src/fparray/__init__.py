"""Frequency permutation arrays: constructions, verification, and bounds.

A frequency permutation array is a set of words of length n over m
symbols, each symbol appearing exactly lambda times per word, with every
pair of words at Hamming distance at least d.  This package constructs
such arrays from finite-field and design-theoretic ingredients, verifies
every claimed parameter from the raw rows, and computes counting
formulas, volume bounds, and exact maximum sizes on desk-scale instances.
"""

from .bounds import (
    BoundsReport,
    ExactResult,
    PartitionTerm,
    RationalPolynomial,
    bounds_report,
    exact_max_size,
    gv_lower,
    hamming_upper,
    laguerre,
    mofs_max,
    multiset_derangements,
    partition_terms,
    plotkin_upper,
    sphere_volume,
    trivial_upper,
)
from .combinators import (
    SeparableArray,
    compose_columns,
    direct_product,
    expand_to_pa,
    juxtapose,
    pad,
    reduce_mod,
    refine,
    sep_product,
    separable_from_mols,
)
from .constructions import (
    FrequencySquare,
    HadamardMatrix,
    OrthogonalArray,
    ResolvableDesign,
    affine_classes_from_mols,
    are_orthogonal,
    fpa_from_ard,
    fpa_from_hadamard,
    fpa_from_linearized,
    fpa_from_mds,
    fpa_from_mofs,
    fpa_from_monomial,
    fpa_from_oa,
    fpa_from_subfield_kernel,
    fpa_from_trace,
    fpa_steiner_848,
    hadamard_matrix,
    mofs_complete,
    mols_from_field,
    oa_from_mols,
    reed_solomon_generator,
)
from .core import (
    FrequencyPermutationArray,
    MultiPermutation,
    VerificationReport,
    WorkLimitExceeded,
    all_lambda_permutations,
    canonical_max_distance_fpa,
    count_all,
    hamming_distance,
    is_lambda_permutation,
    min_distance,
    verify,
)
from .gf import (
    FieldElement,
    FiniteField,
    LinearizedPolynomial,
    PermPolyCensus,
    Polynomial,
    associate_matrix,
    census_permutation_polynomials,
    eval_poly,
    field_of_order,
    is_permutation_polynomial,
    linearized_monomial,
    linearized_subfield_kernel,
    linearized_trace,
    make_field,
    matrix_det,
    matrix_rank,
    relative_trace,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "ExactResult",
    "FieldElement",
    "FiniteField",
    "FrequencyPermutationArray",
    "FrequencySquare",
    "HadamardMatrix",
    "LinearizedPolynomial",
    "MultiPermutation",
    "OrthogonalArray",
    "PartitionTerm",
    "PermPolyCensus",
    "Polynomial",
    "RationalPolynomial",
    "ResolvableDesign",
    "SeparableArray",
    "VerificationReport",
    "WorkLimitExceeded",
    "affine_classes_from_mols",
    "all_lambda_permutations",
    "are_orthogonal",
    "associate_matrix",
    "bounds_report",
    "canonical_max_distance_fpa",
    "census_permutation_polynomials",
    "compose_columns",
    "count_all",
    "direct_product",
    "eval_poly",
    "exact_max_size",
    "expand_to_pa",
    "field_of_order",
    "fpa_from_ard",
    "fpa_from_hadamard",
    "fpa_from_linearized",
    "fpa_from_mds",
    "fpa_from_mofs",
    "fpa_from_monomial",
    "fpa_from_oa",
    "fpa_from_subfield_kernel",
    "fpa_from_trace",
    "fpa_steiner_848",
    "gv_lower",
    "hadamard_matrix",
    "hamming_distance",
    "hamming_upper",
    "is_lambda_permutation",
    "is_permutation_polynomial",
    "juxtapose",
    "laguerre",
    "linearized_monomial",
    "linearized_subfield_kernel",
    "linearized_trace",
    "make_field",
    "matrix_det",
    "matrix_rank",
    "min_distance",
    "mofs_complete",
    "mofs_max",
    "mols_from_field",
    "multiset_derangements",
    "oa_from_mols",
    "pad",
    "partition_terms",
    "plotkin_upper",
    "reduce_mod",
    "reed_solomon_generator",
    "refine",
    "relative_trace",
    "sep_product",
    "separable_from_mols",
    "sphere_volume",
    "trivial_upper",
    "verify",
]
