"""
Hilbert series and cocharacters of the Grassmann algebra E, its even part E0, the upper
triangular algebras UT2(F) and UT2(E), and the block triangular algebra G = (E E; 0 E0).

Ordinary series are built from the generator series of E and E0 with the block triangular
product formula H(R) = H(A) + H(B) + (S_(1) - 1) H(A) H(B). Proper series follow the same
formula with an extra geometric factor, and are carried back to ordinary series either by
multiplying with the geometric factor or by the interlacing sum over horizontal strips.
"""

import enum
from typing import Dict, Optional, Sequence

import aws_lambda_powertools

from .config import config
from .errors import ArithmeticOverflowError, MissingSliceError, TruncationError, checked
from .partitions import Partition, generate_partitions, hook_dimension, horizontal_strip_removals
from .schur_ring import (
    CharacterDecomposition,
    SchurSeries,
    degree_slice,
    geometric_factor,
    s1_minus_1,
    series_add,
    series_multiply,
)

logger = aws_lambda_powertools.Logger(
    service=config["CONFIG"]["powertools_service_name"], child=True
)


class AlgebraId(str, enum.Enum):
    """The five algebras with a known series construction. Values are the CLI spellings."""

    E = "e"
    E0 = "e0"
    G = "g"
    UT2F = "ut2f"
    UT2E = "ut2e"


def series_E(truncation: int) -> SchurSeries:
    """Hilbert series of E: every hook (k,1^l), k >= 1, plus the unit term."""
    terms: Dict[Partition, int] = {Partition(): 1}
    for k in range(1, truncation + 1):
        for legs in range(truncation - k + 1):
            terms[Partition((k,) + (1,) * legs)] = 1
    return SchurSeries(truncation=truncation, terms=terms)


def series_E0(truncation: int) -> SchurSeries:
    """Hilbert series of the commutative even part: one row per degree."""
    return geometric_factor(truncation)


def proper_series_E(truncation: int) -> SchurSeries:
    """Proper Hilbert series of E: the even columns (1^2k)."""
    return SchurSeries(
        truncation=truncation,
        terms={Partition((1,) * length): 1 for length in range(0, truncation + 1, 2)},
    )


def s1_series(truncation: int) -> SchurSeries:
    return SchurSeries(truncation=truncation, terms={Partition((1,)): 1})


def lewin_hilbert(ha: SchurSeries, hb: SchurSeries, parallelism: int = 1) -> SchurSeries:
    """
    Hilbert series of a block triangular algebra R whose T-ideal is T(A)T(B).

    Parameters:
    -----------
    ha, hb : SchurSeries
        H(A) and H(B) at a common truncation D >= 1.
    parallelism : int
        Passed through to series_multiply.

    Returns:
    --------
    SchurSeries
        H(A) + H(B) + (S_(1) - 1) H(A) H(B), truncated at D.
    """
    shift = s1_minus_1(ha.truncation)
    product = series_multiply(ha, hb, parallelism=parallelism)
    return series_add(
        series_add(ha, hb), series_multiply(shift, product, parallelism=parallelism)
    )


def lewin_proper(hba: SchurSeries, hbb: SchurSeries, parallelism: int = 1) -> SchurSeries:
    """
    Proper analogue of lewin_hilbert:
    H^B(A) + H^B(B) + (S_(1) - 1) * geometric * H^B(A) H^B(B).
    """
    shift = s1_minus_1(hba.truncation)
    product = series_multiply(hba, hbb, parallelism=parallelism)
    product = series_multiply(geometric_factor(hba.truncation), product, parallelism=parallelism)
    return series_add(
        series_add(hba, hbb), series_multiply(shift, product, parallelism=parallelism)
    )


def proper_to_ordinary_series(xi: SchurSeries, parallelism: int = 1) -> SchurSeries:
    """Multiply a proper series by the geometric factor."""
    return series_multiply(geometric_factor(xi.truncation), xi, parallelism=parallelism)


def proper_to_ordinary_interlace(
    xi_slices: Sequence[CharacterDecomposition], degree: int
) -> CharacterDecomposition:
    """
    Ordinary multiplicities from proper ones without series multiplication.

    m_lambda is the sum of k_nu over all nu interlacing lambda, i.e.
    lambda_1 >= nu_1 >= lambda_2 >= nu_2 >= ...

    Parameters:
    -----------
    xi_slices : Sequence[CharacterDecomposition]
        Proper slices indexed by degree; entry d must be the degree-d slice for every
        d <= degree.
    degree : int
        The degree n of the ordinary cocharacter to produce.

    Returns:
    --------
    CharacterDecomposition
        The ordinary cocharacter at degree n.
    """
    for needed in range(degree + 1):
        if needed >= len(xi_slices) or xi_slices[needed].degree != needed:
            raise MissingSliceError(
                f"Proper slice of degree {needed} is required for degree {degree}"
            )
    terms: Dict[Partition, int] = {}
    for lam in generate_partitions(degree):
        terms[lam] = sum(
            xi_slices[nu.weight].multiplicity(nu) for nu in horizontal_strip_removals(lam)
        )
    return CharacterDecomposition(degree=degree, terms=terms)


# Intermediate series whose coefficients have closed forms of their own.


def product_E_E0(truncation: int, parallelism: int = 1) -> SchurSeries:
    """H(E) H(E0)."""
    return series_multiply(
        series_E(truncation), series_E0(truncation), parallelism=parallelism
    )


def s1_product_E_E0(truncation: int, parallelism: int = 1) -> SchurSeries:
    """S_(1) H(E) H(E0)."""
    return series_multiply(
        s1_series(truncation), product_E_E0(truncation, parallelism), parallelism=parallelism
    )


def shifted_product_E_E0(truncation: int, parallelism: int = 1) -> SchurSeries:
    """(S_(1) - 1) H(E) H(E0)."""
    return series_multiply(
        s1_minus_1(truncation), product_E_E0(truncation, parallelism), parallelism=parallelism
    )


def proper_square_E(truncation: int, parallelism: int = 1) -> SchurSeries:
    """(H^B(E))^2."""
    proper = proper_series_E(truncation)
    return series_multiply(proper, proper, parallelism=parallelism)


def geometric_proper_square_E(truncation: int, parallelism: int = 1) -> SchurSeries:
    return series_multiply(
        geometric_factor(truncation),
        proper_square_E(truncation, parallelism),
        parallelism=parallelism,
    )


def s1_geometric_proper_square_E(truncation: int, parallelism: int = 1) -> SchurSeries:
    return series_multiply(
        s1_series(truncation),
        geometric_proper_square_E(truncation, parallelism),
        parallelism=parallelism,
    )


def shifted_geometric_proper_square_E(truncation: int, parallelism: int = 1) -> SchurSeries:
    return series_multiply(
        s1_minus_1(truncation),
        geometric_proper_square_E(truncation, parallelism),
        parallelism=parallelism,
    )


def proper_series_UT2E(truncation: int, parallelism: int = 1) -> SchurSeries:
    """H^B(UT2(E)) = 2 H^B(E) + (S_(1) - 1) * geometric * (H^B(E))^2."""
    proper = proper_series_E(truncation)
    return lewin_proper(proper, proper, parallelism=parallelism)


def ut2f_multiplicity(partition: Partition) -> int:
    """
    Cocharacter multiplicity of UT2(F): 1 for one row, k1 - k2 + 1 for (k1,k2) with
    k2 >= 1 and for (k1,k2,1), zero otherwise.
    """
    if len(partition) <= 1:
        return 1
    if len(partition) == 2 or (len(partition) == 3 and partition[2] == 1):
        return partition[0] - partition[1] + 1
    return 0


def series_UT2F(truncation: int) -> SchurSeries:
    return SchurSeries(
        truncation=truncation,
        terms={
            lam: ut2f_multiplicity(lam)
            for degree in range(truncation + 1)
            for lam in generate_partitions(degree)
        },
    )


def hilbert_series(
    algebra: AlgebraId, truncation: int, parallelism: int = 1
) -> SchurSeries:
    """
    The ordinary Hilbert series of an algebra.

    G and UT2(E) need truncation >= 1 because the product formula uses S_(1).
    """
    algebra = AlgebraId(algebra)
    if algebra is AlgebraId.E:
        return series_E(truncation)
    if algebra is AlgebraId.E0:
        return series_E0(truncation)
    if algebra is AlgebraId.G:
        return lewin_hilbert(
            series_E(truncation), series_E0(truncation), parallelism=parallelism
        )
    if algebra is AlgebraId.UT2E:
        return lewin_hilbert(
            series_E(truncation), series_E(truncation), parallelism=parallelism
        )
    return series_UT2F(truncation)


def proper_series(
    algebra: AlgebraId, truncation: int, parallelism: int = 1
) -> SchurSeries:
    """The proper Hilbert series; E0 and F contribute the unit series."""
    algebra = AlgebraId(algebra)
    unit = SchurSeries(truncation=truncation, terms={Partition(): 1})
    if algebra is AlgebraId.E:
        return proper_series_E(truncation)
    if algebra is AlgebraId.E0:
        return unit
    if algebra is AlgebraId.G:
        return lewin_proper(proper_series_E(truncation), unit, parallelism=parallelism)
    if algebra is AlgebraId.UT2E:
        return proper_series_UT2E(truncation, parallelism=parallelism)
    return lewin_proper(unit, unit, parallelism=parallelism)


def _truncation_for(degree: int, truncation: Optional[int]) -> int:
    if degree < 0:
        raise ValueError(f"Expected a nonnegative degree. Instead got: {degree}")
    if truncation is None:
        return max(degree, 1)
    if truncation < degree:
        raise TruncationError(
            f"Truncation must be at least the degree {degree}. Instead got: {truncation}"
        )
    # the product formula needs S_(1), so series are never built below degree 1
    return max(truncation, 1)


def cocharacter(
    algebra: AlgebraId,
    degree: int,
    truncation: Optional[int] = None,
    parallelism: int = 1,
) -> CharacterDecomposition:
    """
    The degree-n cocharacter chi_n(A).

    Parameters:
    -----------
    algebra : AlgebraId
        Which algebra; UT2(F) comes straight from its multiplicity formula.
    degree : int
        n >= 0.
    truncation : int | None
        Series truncation D >= n; max(n, 1) when omitted. Lower degrees never depend on D.
    parallelism : int
        Worker threads for series products.

    Returns:
    --------
    CharacterDecomposition
        chi_n with nonnegative multiplicities.

    Raises:
    -------
    NegativeMultiplicityError
        If the engine produces a negative coefficient in degree n.
    """
    algebra = AlgebraId(algebra)
    if algebra is AlgebraId.UT2F:
        _truncation_for(degree, truncation)
        return CharacterDecomposition(
            degree=degree,
            terms={lam: ut2f_multiplicity(lam) for lam in generate_partitions(degree)},
        )
    series = hilbert_series(algebra, _truncation_for(degree, truncation), parallelism)
    character = degree_slice(series, degree)
    logger.debug(
        "chi_%d(%s) has %d irreducible components",
        degree,
        algebra.value,
        len(character.terms),
    )
    return character


def proper_cocharacter(
    algebra: AlgebraId,
    degree: int,
    truncation: Optional[int] = None,
    parallelism: int = 1,
) -> CharacterDecomposition:
    """The degree-n proper cocharacter xi_n(A)."""
    series = proper_series(algebra, _truncation_for(degree, truncation), parallelism)
    return degree_slice(series, degree)


def character_codimension(character: CharacterDecomposition) -> int:
    """c_n = sum of m_lambda f^lambda, with checked 64-bit accumulation."""
    total = 0
    for lam, multiplicity in character.terms.items():
        total = checked(total + checked(multiplicity * hook_dimension(lam)), "codimension")
    return total


def codimension(algebra: AlgebraId, degree: int, parallelism: int = 1) -> int:
    if degree < 1:
        raise ValueError(f"Codimension needs a positive degree. Instead got: {degree}")
    try:
        return character_codimension(cocharacter(algebra, degree, parallelism=parallelism))
    except ArithmeticOverflowError:
        logger.error("Codimension of %s overflows in degree %d", AlgebraId(algebra).value, degree)
        raise
