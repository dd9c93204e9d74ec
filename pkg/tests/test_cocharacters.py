import math

import pytest

from pi_cocharacters.cocharacters import (
    AlgebraId,
    character_codimension,
    cocharacter,
    codimension,
    geometric_proper_square_E,
    hilbert_series,
    lewin_hilbert,
    lewin_proper,
    product_E_E0,
    proper_cocharacter,
    proper_series,
    proper_series_E,
    proper_series_UT2E,
    proper_square_E,
    proper_to_ordinary_interlace,
    proper_to_ordinary_series,
    series_E,
    series_E0,
    series_UT2F,
    shifted_geometric_proper_square_E,
)
from pi_cocharacters.errors import MissingSliceError, TruncationError, TruncationMismatchError
from pi_cocharacters.partitions import Partition, generate_partitions
from pi_cocharacters.schur_ring import (
    CharacterDecomposition,
    SchurSeries,
    degree_slice,
    geometric_factor,
    series_add,
)


def P(*parts):
    return Partition(parts)


CHI_G = {
    1: {P(1): 1},
    2: {P(2): 1, P(1, 1): 1},
    3: {P(3): 1, P(2, 1): 2, P(1, 1, 1): 1},
    4: {P(4): 1, P(3, 1): 3, P(2, 2): 2, P(2, 1, 1): 3, P(1, 1, 1, 1): 1},
    5: {
        P(5): 1,
        P(4, 1): 4,
        P(3, 2): 4,
        P(3, 1, 1): 5,
        P(2, 2, 1): 4,
        P(2, 1, 1, 1): 3,
        P(1, 1, 1, 1, 1): 1,
    },
    6: {
        P(6): 1,
        P(5, 1): 5,
        P(4, 2): 6,
        P(4, 1, 1): 7,
        P(3, 2, 1): 8,
        P(3, 3): 2,
        P(3, 1, 1, 1): 5,
        P(2, 2, 2): 2,
        P(2, 2, 1, 1): 4,
        P(2, 1, 1, 1, 1): 3,
        P(1, 1, 1, 1, 1, 1): 1,
    },
}

# (2,2,2) in degree 6 has multiplicity 4; the tabulated 1 contradicts c_6 = 640.
CHI_UT2E = {
    1: {P(1): 1},
    2: {P(2): 1, P(1, 1): 1},
    3: {P(3): 1, P(2, 1): 2, P(1, 1, 1): 1},
    4: {P(4): 1, P(3, 1): 3, P(2, 2): 2, P(2, 1, 1): 3, P(1, 1, 1, 1): 1},
    5: {
        P(5): 1,
        P(4, 1): 4,
        P(3, 2): 5,
        P(3, 1, 1): 6,
        P(2, 2, 1): 5,
        P(2, 1, 1, 1): 4,
        P(1, 1, 1, 1, 1): 1,
    },
    6: {
        P(6): 1,
        P(5, 1): 5,
        P(4, 2): 8,
        P(4, 1, 1): 9,
        P(3, 2, 1): 14,
        P(3, 3): 4,
        P(3, 1, 1, 1): 9,
        P(2, 2, 2): 4,
        P(2, 2, 1, 1): 8,
        P(2, 1, 1, 1, 1): 5,
        P(1, 1, 1, 1, 1, 1): 1,
    },
}


def lewin_codimension(a, b, n):
    """c_n(R) from c(A), c(B) via the codimension form of the product formula."""
    return (
        a[n]
        + b[n]
        + n * sum(math.comb(n - 1, k) * a[k] * b[n - 1 - k] for k in range(n))
        - sum(math.comb(n, k) * a[k] * b[n - k] for k in range(n + 1))
    )


def test_series_E():
    assert series_E(1).terms == {P(): 1, P(1): 1}
    assert degree_slice(series_E(4), 4).terms == {
        P(4): 1,
        P(3, 1): 1,
        P(2, 1, 1): 1,
        P(1, 1, 1, 1): 1,
    }


def test_series_E0():
    assert series_E0(0).terms == {P(): 1}
    assert degree_slice(series_E0(4), 3).terms == {P(3): 1}
    assert series_E0(6) == geometric_factor(6)


def test_proper_series_E():
    assert proper_series_E(1).terms == {P(): 1}
    assert degree_slice(proper_series_E(4), 2).terms == {P(1, 1): 1}


def test_proper_to_ordinary_series_on_E():
    assert proper_to_ordinary_series(proper_series_E(8)) == series_E(8)
    unit = SchurSeries(truncation=5, terms={P(): 1})
    assert proper_to_ordinary_series(unit) == geometric_factor(5)


def test_lewin_hilbert_units():
    unit = SchurSeries(truncation=3, terms={P(): 1})
    assert lewin_hilbert(unit, unit).terms == {P(): 1, P(1): 1}
    with pytest.raises(TruncationMismatchError):
        lewin_hilbert(series_E(3), series_E(4))


def test_lewin_proper_units():
    unit = SchurSeries(truncation=1, terms={P(): 1})
    assert lewin_proper(unit, unit).terms == {P(): 1}
    unit4 = SchurSeries(truncation=4, terms={P(): 1})
    assert lewin_proper(unit4, unit4).terms == {P(): 1, P(1, 1): 1, P(2, 1): 1, P(3, 1): 1}


@pytest.mark.parametrize("degree", range(1, 7))
def test_cocharacters_of_G(degree):
    assert cocharacter(AlgebraId.G, degree).terms == CHI_G[degree]


@pytest.mark.parametrize("degree", range(1, 7))
def test_cocharacters_of_UT2E(degree):
    assert cocharacter(AlgebraId.UT2E, degree).terms == CHI_UT2E[degree]


def test_G_in_degree_three_from_lewin():
    series = lewin_hilbert(series_E(6), series_E0(6))
    assert degree_slice(series, 3).terms == CHI_G[3]
    assert degree_slice(lewin_hilbert(series_E(6), series_E(6)), 6).multiplicity((3, 2, 1)) == 14


def test_cocharacter_does_not_depend_on_truncation():
    assert cocharacter(AlgebraId.UT2E, 4, truncation=4) == cocharacter(AlgebraId.UT2E, 4, truncation=9)


def test_UT2E_proper_route_matches_ordinary():
    proper = proper_series_UT2E(7)
    assert proper_to_ordinary_series(proper) == hilbert_series(AlgebraId.UT2E, 7)
    assert degree_slice(proper_to_ordinary_series(proper), 5).terms == CHI_UT2E[5]


def test_UT2F_cocharacters():
    assert cocharacter(AlgebraId.UT2F, 0).terms == {P(): 1}
    assert cocharacter(AlgebraId.UT2F, 3).terms == {P(3): 1, P(2, 1): 2, P(1, 1, 1): 1}
    assert cocharacter(AlgebraId.UT2F, 4).terms == {P(4): 1, P(3, 1): 3, P(2, 2): 1, P(2, 1, 1): 2}


def test_cocharacter_truncation_bounds():
    assert cocharacter(AlgebraId.G, 0, truncation=0).terms == {P(): 1}
    assert cocharacter(AlgebraId.UT2E, 3, truncation=3) == cocharacter(AlgebraId.UT2E, 3)
    with pytest.raises(TruncationError):
        cocharacter(AlgebraId.G, 4, truncation=3)


def test_UT2F_formula_matches_product_over_F():
    lewin = lewin_hilbert(geometric_factor(8), geometric_factor(8))
    assert lewin == series_UT2F(8)


def test_lewin_proper_UT2E_coefficients():
    proper = lewin_proper(proper_series_E(8), proper_series_E(8))
    assert proper.coefficient((4, 3, 2, 1)) == 2
    assert proper.coefficient((1, 1)) == 1
    assert proper.coefficient((2, 2, 1)) == 2


def test_proper_cocharacter_UT2E_low_degrees():
    assert proper_cocharacter(AlgebraId.UT2E, 0).terms == {P(): 1}
    assert proper_cocharacter(AlgebraId.UT2E, 1).terms == {}
    assert proper_cocharacter(AlgebraId.UT2E, 2).terms == {P(1, 1): 1}
    assert proper_cocharacter(AlgebraId.UT2E, 3).terms == {P(2, 1): 1}
    assert proper_cocharacter(AlgebraId.UT2E, 4).terms == {
        P(3, 1): 1,
        P(2, 2): 1,
        P(2, 1, 1): 1,
        P(1, 1, 1, 1): 1,
    }


@pytest.mark.parametrize("algebra", [AlgebraId.E, AlgebraId.G, AlgebraId.UT2E])
def test_two_transform_routes_agree(algebra):
    truncation = 8
    proper = proper_series(algebra, truncation)
    slices = [degree_slice(proper, degree) for degree in range(truncation + 1)]
    ordinary = proper_to_ordinary_series(proper)
    for degree in range(truncation + 1):
        assert proper_to_ordinary_interlace(slices, degree) == degree_slice(ordinary, degree)


def test_interlace_of_unit_gives_single_row():
    slices = [CharacterDecomposition(degree=0, terms={P(): 1})] + [
        CharacterDecomposition(degree=degree) for degree in range(1, 5)
    ]
    assert proper_to_ordinary_interlace(slices, 4).terms == {P(4): 1}


def test_interlace_of_E_gives_hooks():
    proper = proper_series_E(8)
    slices = [degree_slice(proper, degree) for degree in range(9)]
    for degree in range(9):
        character = proper_to_ordinary_interlace(slices, degree)
        hooks = {lam for lam in generate_partitions(degree) if len(lam) <= 1 or lam[1] <= 1}
        assert set(character.terms) == hooks
        assert set(character.terms.values()) <= {1}


def test_interlace_missing_slice():
    slices = [CharacterDecomposition(degree=0, terms={P(): 1})]
    with pytest.raises(MissingSliceError):
        proper_to_ordinary_interlace(slices, 2)


@pytest.mark.parametrize("degree", range(1, 9))
def test_codimension_of_E_and_E0(degree):
    assert codimension(AlgebraId.E, degree) == 2 ** (degree - 1)
    assert codimension(AlgebraId.E0, degree) == 1


def test_codimension_of_UT2F_and_UT2E():
    assert codimension(AlgebraId.UT2F, 3) == 6
    assert codimension(AlgebraId.UT2F, 4) == 18
    assert codimension(AlgebraId.UT2E, 5) == 120
    assert codimension(AlgebraId.UT2E, 6) == 640


def test_codimensions_follow_product_formula():
    e = {n: 2 ** (n - 1) if n else 1 for n in range(8)}
    e0 = {n: 1 for n in range(8)}
    for n in range(1, 8):
        assert codimension(AlgebraId.UT2E, n) == lewin_codimension(e, e, n)
        assert codimension(AlgebraId.G, n) == lewin_codimension(e, e0, n)
        assert codimension(AlgebraId.UT2F, n) == lewin_codimension(e0, e0, n)


def test_character_codimension():
    assert character_codimension(CharacterDecomposition(degree=6, terms=CHI_G[6])) == 400


@pytest.mark.parametrize(
    "algebra", [AlgebraId.E, AlgebraId.E0, AlgebraId.G, AlgebraId.UT2E]
)
def test_slices_are_nonnegative(algebra):
    series = hilbert_series(algebra, 10)
    for degree in range(11):
        degree_slice(series, degree)


def test_proper_slices_of_UT2E_are_nonnegative():
    proper = proper_series_UT2E(10)
    for degree in range(11):
        degree_slice(proper, degree)


def test_support_shapes():
    for lam in hilbert_series(AlgebraId.UT2E, 10).terms:
        assert lam.part(2) <= 3 and lam.part(3) <= 2
    for lam in hilbert_series(AlgebraId.G, 10).terms:
        assert lam.part(2) <= 2 and lam.part(3) <= 1


def test_intermediate_series_values():
    assert product_E_E0(5).coefficient((3, 2)) == 4
    assert product_E_E0(5).coefficient((3, 1, 1)) == 6
    square = proper_square_E(8)
    assert square.coefficient((2, 2, 1, 1)) == 2
    assert square.coefficient((1, 1, 1, 1)) == 3
    assert square.coefficient((2, 2, 2)) == 0
    assert geometric_proper_square_E(6).coefficient((2,)) == 1
    assert shifted_geometric_proper_square_E(6).coefficient(()) == -1


def test_hilbert_series_E_plus_E0():
    combined = series_add(series_E(2), series_E0(2))
    assert combined.terms == {P(): 2, P(1): 2, P(2): 2, P(1, 1): 1}
