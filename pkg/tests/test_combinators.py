"""Array-to-array transforms: padding, splitting, products, class products."""

import pytest

from fparray import (
    FrequencyPermutationArray,
    SeparableArray,
    all_lambda_permutations,
    canonical_max_distance_fpa,
    compose_columns,
    count_all,
    direct_product,
    expand_to_pa,
    fpa_from_hadamard,
    fpa_from_oa,
    hadamard_matrix,
    juxtapose,
    mols_from_field,
    oa_from_mols,
    pad,
    reduce_mod,
    refine,
    sep_product,
    separable_from_mols,
    verify,
)
from fixtures import (
    CLASS_PRODUCT_FIRST8,
    DOUBLED_12_FIRST4,
    FULL_SPLIT_DISPLAY,
    HALF_SPLIT_DISPLAY,
    THREE_ROUTE_9_6,
)


def _nine_column_array() -> FrequencyPermutationArray:
    return FrequencyPermutationArray.from_rows(THREE_ROUTE_9_6, 3, 3, 6)


def _four_doubled_rows() -> FrequencyPermutationArray:
    return FrequencyPermutationArray.from_rows(DOUBLED_12_FIRST4, 2, 6, 6)


# ---------------------------------------------------------------------------
# pad / juxtapose


def test_pad_appends_a_fresh_symbol():
    out = pad(_nine_column_array())
    assert (out.n, out.m, out.lam, out.min_distance_claim, out.size) == (12, 4, 3, 6, 4)
    assert all(row[9:] == (3, 3, 3) for row in out.row_symbols())
    assert verify(out).valid


def test_juxtapose_adds_lengths_and_claims():
    a = _nine_column_array()
    out = juxtapose(a, a)
    assert (out.n, out.m, out.lam, out.min_distance_claim, out.size) == (18, 3, 6, 12, 4)
    assert verify(out).valid


def test_juxtapose_rejects_symbol_mismatch():
    a = _nine_column_array()
    b = fpa_from_hadamard(hadamard_matrix(4))
    with pytest.raises(ValueError):
        juxtapose(a, b)


# ---------------------------------------------------------------------------
# symbol splitting: refine and expand_to_pa


def test_refine_reproduces_the_half_split_display():
    out = refine(_four_doubled_rows(), 3)
    assert (out.n, out.m, out.lam, out.min_distance_claim, out.size) == (12, 4, 3, 6, 8)
    assert verify(out).valid
    # the displayed rows are the unshifted substitution of each source row,
    # printed 1-based; each source row contributes lam/l = 2 output rows
    unshifted = out.row_symbols()[0::2]
    expected = tuple(tuple(e - 1 for e in row) for row in HALF_SPLIT_DISPLAY)
    assert unshifted == expected


def test_expand_reproduces_the_full_split_display():
    out = expand_to_pa(_four_doubled_rows())
    assert (out.n, out.m, out.lam, out.min_distance_claim, out.size) == (12, 12, 1, 6, 24)
    assert verify(out).valid
    unshifted = out.row_symbols()[0::6]
    expected = tuple(tuple(e - 1 for e in row) for row in FULL_SPLIT_DISPLAY)
    assert unshifted == expected


def test_refine_identity_and_expand_agreement():
    a = _nine_column_array()
    assert refine(a, a.lam).row_symbols() == a.row_symbols()
    assert set(refine(a, 1).row_symbols()) == set(expand_to_pa(a).row_symbols())


def test_refine_requires_a_divisor_frequency():
    with pytest.raises(ValueError):
        refine(_four_doubled_rows(), 4)


def test_split_pipeline_scales_22_to_44_to_132():
    doubled = fpa_from_hadamard(hadamard_matrix(12))
    assert doubled.size == 22
    half = refine(doubled, 3)
    assert (half.n, half.m, half.lam, half.size) == (12, 4, 3, 44)
    full = expand_to_pa(half)
    assert (full.n, full.m, full.lam, full.size) == (12, 12, 1, 132)
    for stage in (doubled, half, full):
        report = verify(stage)
        assert report.valid and report.actual_min_distance >= 6


# ---------------------------------------------------------------------------
# symbol merging: reduce_mod


def test_reduce_mod_on_a_strength_two_derived_array():
    a = fpa_from_oa(oa_from_mols(mols_from_field(4)))
    assert (a.n, a.m, a.lam, a.min_distance_claim, a.size) == (16, 4, 4, 12, 5)
    out = reduce_mod(a, 2)
    assert (out.n, out.m, out.lam, out.min_distance_claim, out.size) == (16, 2, 8, 8, 5)
    report = verify(out)
    assert report.valid and report.equidistant
    assert report.actual_min_distance == 8


def test_reduce_mod_preconditions():
    a = fpa_from_oa(oa_from_mols(mols_from_field(4)))
    with pytest.raises(ValueError):
        reduce_mod(a, 3)  # 3 does not divide m = 4
    with pytest.raises(ValueError):
        reduce_mod(a, 1)  # all rows would collapse
    uneven = fpa_from_hadamard(hadamard_matrix(12))
    with pytest.raises(ValueError):
        reduce_mod(uneven, 2)  # no constant pair profile


# ---------------------------------------------------------------------------
# column composition and direct products


def test_compose_columns_on_canonical_ingredients():
    ingredient = canonical_max_distance_fpa(2, 2)  # 2 rows, distance 4
    coarse = canonical_max_distance_fpa(3, 4)  # 3 rows, distance 12
    out = compose_columns([ingredient] * 3, coarse)
    assert (out.n, out.m, out.lam, out.min_distance_claim, out.size) == (12, 6, 2, 12, 6)
    report = verify(out)
    assert report.valid and report.actual_min_distance == 12


def test_compose_columns_preconditions():
    ingredient = canonical_max_distance_fpa(2, 2)
    coarse = canonical_max_distance_fpa(3, 4)
    with pytest.raises(ValueError):
        compose_columns([], coarse)
    with pytest.raises(ValueError):
        compose_columns([ingredient, canonical_max_distance_fpa(2, 3)], coarse)
    with pytest.raises(ValueError):
        compose_columns([ingredient] * 2, coarse)  # coarse uses 3 symbols, not 2
    weak = FrequencyPermutationArray.from_rows(coarse.row_symbols(), 3, 4, 11)
    with pytest.raises(ValueError):
        compose_columns([ingredient] * 3, weak)  # claim 11 < b * d = 12


def test_direct_product_small():
    a = canonical_max_distance_fpa(2, 2)
    b = fpa_from_hadamard(hadamard_matrix(4))
    out = direct_product(a, b)
    assert (out.n, out.m, out.lam, out.min_distance_claim, out.size) == (8, 4, 2, 2, 12)
    assert verify(out).valid
    with pytest.raises(ValueError):
        direct_product(a, _nine_column_array())  # frequencies differ


def test_direct_product_squares_the_doubling_route():
    h = fpa_from_hadamard(hadamard_matrix(12))
    out = direct_product(h, h)
    assert (out.n, out.m, out.lam, out.min_distance_claim) == (24, 4, 6, 6)
    assert out.size == 22 * 22 == 484
    report = verify(out)
    assert report.valid and report.actual_min_distance == 6


# ---------------------------------------------------------------------------
# separable arrays and their class-wise product


def test_separable_split_of_an_equidistant_array():
    sep = SeparableArray.from_fpa(_nine_column_array(), 2)
    assert sep.num_classes == 2
    assert (sep.n, sep.m, sep.lam, sep.delta, sep.d) == (9, 3, 3, 6, 6)
    with pytest.raises(ValueError):
        SeparableArray.from_fpa(_nine_column_array(), 3)  # 3 does not split 4 rows


def test_separable_rejects_an_overstated_class_distance():
    a = _nine_column_array()
    with pytest.raises(ValueError):
        SeparableArray(9, 3, 3, (a,), 7, 6)  # rows are at distance 6, not 7


def test_class_product_reproduces_the_48_row_listing():
    sep = separable_from_mols(mols_from_field(4))
    assert (sep.n, sep.m, sep.lam, sep.num_classes) == (4, 4, 1, 3)
    assert (sep.delta, sep.d) == (4, 3)
    out = sep_product([sep, sep])
    assert (out.n, out.m, out.lam, out.min_distance_claim, out.size) == (8, 4, 2, 4, 48)
    assert out.row_symbols()[:8] == CLASS_PRODUCT_FIRST8
    report = verify(out)
    assert report.valid and report.actual_min_distance == 4


def test_class_product_preconditions():
    full = FrequencyPermutationArray.from_rows(
        sorted(all_lambda_permutations(2, 2)), 2, 2, 2
    )
    assert full.size == count_all(4, 2)
    singletons = SeparableArray.from_fpa(full, full.size)
    # one input with across-class distance 2 < vacuous within-class delta 4
    with pytest.raises(ValueError):
        sep_product([singletons])
    sep4 = separable_from_mols(mols_from_field(4))
    sep5 = separable_from_mols(mols_from_field(5))
    with pytest.raises(ValueError):
        sep_product([sep4, sep5])  # mismatched (n, m, lam)
    with pytest.raises(ValueError):
        sep_product([])
