import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pi_cocharacters.errors import NegativeMultiplicityError, TruncationError, TruncationMismatchError
from pi_cocharacters.partitions import Partition
from pi_cocharacters.schur_ring import (
    CharacterDecomposition,
    SchurSeries,
    decomposition_from_json,
    decomposition_to_json,
    degree_slice,
    geometric_factor,
    s1_minus_1,
    series_add,
    series_from_terms,
    series_monomials,
    series_multiply,
    series_negate,
    series_scale,
    series_to_json,
    truncate,
)
from pi_cocharacters.tableaux import LRCache, monomials_to_poly, schur_monomials
from tests.strategies import partitions


def P(*parts):
    return Partition(parts)


def test_series_drops_zero_terms_and_orders_canonically():
    series = SchurSeries(truncation=3, terms={P(1, 1): 1, P(2): 2, P(): 0, P(3): 1})
    assert list(series.terms) == [P(2), P(1, 1), P(3)]
    assert series.coefficient((2,)) == 2
    assert series.coefficient(()) == 0


def test_series_rejects_terms_above_truncation():
    with pytest.raises(TruncationError):
        SchurSeries(truncation=1, terms={P(2): 1})


def test_series_from_terms_cuts_at_truncation():
    series = series_from_terms(2, {(2,): 1, (3,): 4, (): 1})
    assert series.terms == {P(): 1, P(2): 1}


def test_add_and_mismatch():
    a = series_from_terms(2, {(): 1, (1,): 1})
    b = series_from_terms(2, {(1,): -1, (2,): 3})
    assert series_add(a, b).terms == {P(): 1, P(2): 3}
    with pytest.raises(TruncationMismatchError):
        series_add(a, geometric_factor(3))


def test_scale_and_negate():
    a = series_from_terms(2, {(1,): 2, (1, 1): -1})
    assert series_scale(a, 3).terms == {P(1): 6, P(1, 1): -3}
    assert series_add(a, series_negate(a)).terms == {}


def test_multiply_truncates():
    product = series_multiply(s1_minus_1(2), series_from_terms(2, {(1,): 1}))
    assert product.terms == {P(2): 1, P(1, 1): 1, P(1): -1}


def test_multiply_truncation_mismatch():
    with pytest.raises(TruncationMismatchError):
        series_multiply(geometric_factor(2), geometric_factor(3))


def test_geometric_factor_square():
    square = series_multiply(geometric_factor(4), geometric_factor(4))
    # coefficient of (k1,k2) is k1 - k2 + 1
    assert square.coefficient((4,)) == 5
    assert square.coefficient((3, 1)) == 3
    assert square.coefficient((2, 2)) == 1
    assert square.coefficient((2, 1, 1)) == 0


@pytest.mark.parametrize("k", range(2, 7))
def test_box_times_geometric_factor(k):
    product = series_multiply(series_from_terms(6, {(1,): 1}), geometric_factor(6))
    assert degree_slice(product, k).terms == {P(k): 1, P(k - 1, 1): 1}


def test_column_times_geometric_factor():
    product = series_multiply(geometric_factor(4), series_from_terms(4, {(1, 1): 1}))
    assert product.coefficient((3, 1)) == 1
    assert product.coefficient((1, 1, 1)) == 1
    assert product.coefficient((2, 2)) == 0


def test_s1_minus_1_needs_positive_truncation():
    assert s1_minus_1(1).terms == {P(): -1, P(1): 1}
    with pytest.raises(TruncationError):
        s1_minus_1(0)


def test_parallel_multiply_is_deterministic():
    a = series_from_terms(6, {(k,) + (1,) * l: 1 for k in range(1, 7) for l in range(7 - k)})
    serial = series_multiply(a, a, parallelism=1)
    parallel = series_multiply(a, a, parallelism=8)
    assert serial == parallel
    assert list(serial.terms) == list(parallel.terms)


def test_general_rule_and_cache_settings_agree():
    a = series_from_terms(6, {(): 1, (2,): 1, (2, 1): 2, (1, 1, 1): -1})
    b = geometric_factor(6)
    reference = series_multiply(a, b)
    assert series_multiply(a, b, use_pieri=False) == reference
    assert series_multiply(a, b, cache=LRCache(enabled=False), use_pieri=False) == reference


def test_truncate():
    series = geometric_factor(5)
    assert truncate(series, 2) == geometric_factor(2)
    with pytest.raises(TruncationError):
        truncate(series, 6)


small_terms = st.dictionaries(partitions(max_weight=5), st.integers(min_value=-3, max_value=3), max_size=4)


@settings(max_examples=30, deadline=None)
@given(small_terms, small_terms, small_terms)
def test_ring_laws(x_terms, y_terms, z_terms):
    x, y, z = (series_from_terms(5, terms) for terms in (x_terms, y_terms, z_terms))
    assert series_multiply(x, y) == series_multiply(y, x)
    assert series_multiply(series_multiply(x, y), z) == series_multiply(x, series_multiply(y, z))
    assert series_multiply(x, series_add(y, z)) == series_add(
        series_multiply(x, y), series_multiply(x, z)
    )


@settings(max_examples=40, deadline=None)
@given(small_terms, small_terms, st.integers(min_value=0, max_value=5))
def test_truncate_commutes_with_multiply(x_terms, y_terms, degree):
    x, y = series_from_terms(5, x_terms), series_from_terms(5, y_terms)
    assert truncate(series_multiply(x, y), degree) == series_multiply(
        truncate(x, degree), truncate(y, degree)
    )


def test_degree_slice():
    series = series_from_terms(3, {(): 1, (2,): 1, (1, 1): 2, (3,): 1})
    assert degree_slice(series, 2).terms == {P(2): 1, P(1, 1): 2}
    assert degree_slice(series, 1).terms == {}
    with pytest.raises(TruncationError):
        degree_slice(series, 4)
    with pytest.raises(NegativeMultiplicityError):
        degree_slice(s1_minus_1(1), 0)


def test_character_decomposition_validation():
    with pytest.raises(ValueError):
        CharacterDecomposition(degree=2, terms={P(3): 1})
    with pytest.raises(NegativeMultiplicityError):
        CharacterDecomposition(degree=2, terms={P(2): -1})
    assert CharacterDecomposition(degree=2, terms={P(2): 0}).terms == {}
    assert CharacterDecomposition(degree=2, terms={(1, 1): 1}).multiplicity((1, 1)) == 1


@st.composite
def oracle_factors(draw):
    """Two series whose supports stay in degree <= truncation / 2, so their product is exact."""
    truncation = draw(st.integers(min_value=2, max_value=8))
    terms = st.dictionaries(
        partitions(max_weight=truncation // 2), st.integers(min_value=-2, max_value=2), max_size=3
    )
    return series_from_terms(truncation, draw(terms)), series_from_terms(truncation, draw(terms))


@settings(max_examples=10, deadline=None)
@given(oracle_factors())
def test_series_monomials_match_product_of_polynomials(factors):
    a, b = factors
    letters = a.truncation
    assert series_monomials(series_multiply(a, b), letters) == series_monomials(
        a, letters
    ) * series_monomials(b, letters)


def test_series_monomials_of_small_series():
    b = series_from_terms(4, {(2,): 1, (): -1})
    assert series_monomials(b, 2) == monomials_to_poly(schur_monomials(P(2), 2), 2) - 1


def test_json_shapes():
    series = series_from_terms(2, {(): 1, (1, 1): -2})
    assert series_to_json(series) == {
        "truncation": 2,
        "terms": [{"partition": [], "mult": 1}, {"partition": [1, 1], "mult": -2}],
    }
    character = CharacterDecomposition(degree=3, terms={P(3): 1, P(2, 1): 2, P(1, 1, 1): 1})
    encoded = json.loads(json.dumps(decomposition_to_json(character)))
    assert decomposition_from_json(encoded) == character
