"""
Degree-truncated ring of integer combinations of Schur functions.

A SchurSeries is the Schur-basis form of a Hilbert series cut off at an explicit degree.
Products are expanded with the Littlewood-Richardson rule (Pieri for single rows) and
truncated again, so every identity is checked degree by degree.
"""

import concurrent.futures
import dataclasses
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple

import aws_lambda_powertools
import sympy

from .config import config
from .errors import NegativeMultiplicityError, TruncationError, TruncationMismatchError
from .partitions import Partition, sort_key
from .tableaux import LRCache, expand_product, monomials_to_poly, pieri_product, schur_monomials

logger = aws_lambda_powertools.Logger(
    service=config["CONFIG"]["powertools_service_name"], child=True
)


def _canonical(terms: Mapping[Partition, int]) -> Dict[Partition, int]:
    return {
        partition: terms[partition]
        for partition in sorted(terms, key=sort_key)
        if terms[partition] != 0
    }


@dataclasses.dataclass(frozen=True)
class SchurSeries:
    """
    Formal sum of m_lambda S_lambda over |lambda| <= truncation. Coefficients may be
    negative; zero coefficients are never stored.
    """

    truncation: int
    terms: Dict[Partition, int] = dataclasses.field(default_factory=dict, hash=False)

    def __post_init__(self) -> None:
        if self.truncation < 0:
            raise TruncationError(
                f"Truncation must be nonnegative. Instead got: {self.truncation}"
            )
        cleaned = _canonical({Partition(key): value for key, value in self.terms.items()})
        too_heavy = [key for key in cleaned if key.weight > self.truncation]
        if too_heavy:
            raise TruncationError(
                f"Terms above truncation {self.truncation}. Instead got: {too_heavy}"
            )
        object.__setattr__(self, "terms", cleaned)

    def coefficient(self, partition: Iterable[int]) -> int:
        return self.terms.get(Partition(partition), 0)

    def degree_terms(self, degree: int) -> Dict[Partition, int]:
        return {key: value for key, value in self.terms.items() if key.weight == degree}


@dataclasses.dataclass(frozen=True)
class CharacterDecomposition:
    """
    One degree-n layer chi_n = sum m_lambda chi_lambda with nonnegative multiplicities.
    """

    degree: int
    terms: Dict[Partition, int] = dataclasses.field(default_factory=dict, hash=False)

    def __post_init__(self) -> None:
        cleaned = _canonical({Partition(key): value for key, value in self.terms.items()})
        for partition, multiplicity in cleaned.items():
            if partition.weight != self.degree:
                raise ValueError(
                    f"Expected partitions of {self.degree}. Instead got: {partition}"
                )
            if multiplicity < 0:
                raise NegativeMultiplicityError(
                    f"Negative multiplicity {multiplicity} for {partition} in degree {self.degree}"
                )
        object.__setattr__(self, "terms", cleaned)

    def multiplicity(self, partition: Iterable[int]) -> int:
        return self.terms.get(Partition(partition), 0)


def _check_truncations(a: SchurSeries, b: SchurSeries) -> int:
    if a.truncation != b.truncation:
        raise TruncationMismatchError(
            f"Series truncations differ. Instead got: {a.truncation} and {b.truncation}"
        )
    return a.truncation


def series_from_terms(truncation: int, terms: Mapping[Iterable[int], int]) -> SchurSeries:
    """Build a series from plain tuples, dropping terms above the truncation."""
    kept: Dict[Partition, int] = {}
    for key, value in terms.items():
        partition = Partition(key)
        if partition.weight <= truncation:
            kept[partition] = kept.get(partition, 0) + value
    return SchurSeries(truncation=truncation, terms=kept)


def series_add(a: SchurSeries, b: SchurSeries) -> SchurSeries:
    """Termwise sum at the common truncation."""
    truncation = _check_truncations(a, b)
    terms = dict(a.terms)
    for partition, value in b.terms.items():
        terms[partition] = terms.get(partition, 0) + value
    return SchurSeries(truncation=truncation, terms=terms)


def series_scale(a: SchurSeries, factor: int) -> SchurSeries:
    return SchurSeries(
        truncation=a.truncation,
        terms={partition: factor * value for partition, value in a.terms.items()},
    )


def series_negate(a: SchurSeries) -> SchurSeries:
    return series_scale(a, -1)


def _pair_product(
    pair: Tuple[Partition, Partition], cache: Optional[LRCache]
) -> Dict[Partition, int]:
    lam, mu = pair
    if len(mu) <= 1:
        return pieri_product(lam, mu.weight)
    if len(lam) <= 1:
        return pieri_product(mu, lam.weight)
    return expand_product(lam, mu, cache=cache)


def series_multiply(
    a: SchurSeries,
    b: SchurSeries,
    parallelism: int = 1,
    cache: Optional[LRCache] = None,
    use_pieri: bool = True,
) -> SchurSeries:
    """
    LR-expanded product truncated to degree <= D.

    Parameters:
    -----------
    a, b : SchurSeries
        Factors with equal truncation D.
    parallelism : int
        Worker threads used to expand support pairs. Aggregation runs in the fixed pair
        order, so the result does not depend on this value.
    cache : LRCache | None
        LR memo; the module default when omitted.
    use_pieri : bool
        Route single-row factors through the Pieri rule. Disabling it forces the general
        LR path, which must give the same series.

    Returns:
    --------
    SchurSeries
        sum over nu of (sum a[lam] b[mu] c^nu_{lam mu}) S_nu for |nu| <= D.
    """
    truncation = _check_truncations(a, b)
    pairs: List[Tuple[Partition, Partition]] = [
        (lam, mu)
        for lam in a.terms
        for mu in b.terms
        if lam.weight + mu.weight <= truncation
    ]

    def expand(pair: Tuple[Partition, Partition]) -> Dict[Partition, int]:
        if use_pieri:
            return _pair_product(pair, cache)
        return expand_product(pair[0], pair[1], cache=cache)

    if parallelism > 1 and len(pairs) > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=parallelism) as executor:
            products = list(executor.map(expand, pairs))
    else:
        products = [expand(pair) for pair in pairs]

    terms: Dict[Partition, int] = {}
    for (lam, mu), product in zip(pairs, products):
        weight = a.terms[lam] * b.terms[mu]
        for nu, coefficient in product.items():
            terms[nu] = terms.get(nu, 0) + weight * coefficient
    logger.debug("Multiplied %d support pairs at truncation %d", len(pairs), truncation)
    return SchurSeries(truncation=truncation, terms=terms)


def geometric_factor(truncation: int) -> SchurSeries:
    """The product of 1/(1 - t_i) in Schur form: sum of S_(k) for k = 0..D."""
    return SchurSeries(
        truncation=truncation,
        terms={Partition((k,)): 1 for k in range(truncation + 1)},
    )


def s1_minus_1(truncation: int) -> SchurSeries:
    """The two-term series S_(1) - 1. Needs D >= 1, otherwise S_(1) would be cut away."""
    if truncation < 1:
        raise TruncationError(
            f"S_(1) - 1 needs truncation >= 1. Instead got: {truncation}"
        )
    return SchurSeries(truncation=truncation, terms={Partition((1,)): 1, Partition(): -1})


def truncate(a: SchurSeries, degree: int) -> SchurSeries:
    """Drop every term above degree and lower the truncation to it."""
    if degree < 0 or degree > a.truncation:
        raise TruncationError(
            f"Cannot truncate a degree-{a.truncation} series to {degree}"
        )
    return SchurSeries(
        truncation=degree,
        terms={key: value for key, value in a.terms.items() if key.weight <= degree},
    )


def degree_slice(a: SchurSeries, degree: int) -> CharacterDecomposition:
    """
    Extract chi_n from a Hilbert series.

    Raises:
    -------
    TruncationError
        If degree exceeds the truncation.
    NegativeMultiplicityError
        If a coefficient in that degree is negative.
    """
    if degree < 0 or degree > a.truncation:
        raise TruncationError(
            f"Degree {degree} is outside truncation {a.truncation}"
        )
    return CharacterDecomposition(degree=degree, terms=a.degree_terms(degree))


def series_monomials(a: SchurSeries, letters: int) -> sympy.Poly:
    """Monomial expansion of a series in t1..t_letters, through semistandard tableaux."""
    polynomial = monomials_to_poly({}, letters)
    for partition, value in a.terms.items():
        polynomial += value * monomials_to_poly(schur_monomials(partition, letters), letters)
    return polynomial


def _terms_to_json(terms: Mapping[Partition, int]) -> List[Dict[str, Any]]:
    return [{"partition": list(key), "mult": value} for key, value in terms.items()]


def series_to_json(a: SchurSeries) -> Dict[str, Any]:
    """{"truncation": D, "terms": [{"partition": [...], "mult": N}, ...]} in canonical order."""
    return {"truncation": a.truncation, "terms": _terms_to_json(a.terms)}


def decomposition_to_json(character: CharacterDecomposition) -> Dict[str, Any]:
    return {"truncation": character.degree, "terms": _terms_to_json(character.terms)}


def decomposition_from_json(data: Mapping[str, Any]) -> CharacterDecomposition:
    """Inverse of decomposition_to_json."""
    return CharacterDecomposition(
        degree=int(data["truncation"]),
        terms={Partition(term["partition"]): int(term["mult"]) for term in data["terms"]},
    )
