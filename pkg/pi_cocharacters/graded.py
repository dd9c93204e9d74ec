"""
Restriction of S_n-characters to S_k x S_l and the Z2-graded cocharacters of UT2(E).

By Frobenius reciprocity the multiplicity of lambda (x) mu in chi_nu restricted to
S_k x S_l is the Littlewood-Richardson coefficient c^nu_{lambda mu}. The graded
cocharacter of UT2(E) is the restricted cocharacter of UT2(F) with every second
partition conjugated.
"""

import collections
import concurrent.futures
import dataclasses
import datetime
import math
from typing import Any, Dict, List, Optional, Tuple

import aws_lambda_powertools

from . import __version__
from .cocharacters import AlgebraId, cocharacter
from .config import config
from .errors import NegativeMultiplicityError, UnsupportedAlgebraError, checked
from .partitions import Partition, conjugate, contains, generate_partitions, hook_dimension, sort_key
from .tableaux import LRCache, lr_coefficient
from .verification import MATCH, MISMATCH, FindingsReport

logger = aws_lambda_powertools.Logger(
    service=config["CONFIG"]["powertools_service_name"], child=True
)

RESTRICTION_TABLE = "restriction-table"
RESTRICTION_TABLE_STATEMENT = "prop-7.3"

PartitionPair = Tuple[Partition, Partition]


def _pair_key(pair: PartitionPair) -> Tuple[Any, Any]:
    return (sort_key(pair[0]), sort_key(pair[1]))


@dataclasses.dataclass(frozen=True)
class BiCharacter:
    """An S_k x S_l character: sum of m_{lambda,mu} lambda (x) mu."""

    k: int
    l: int  # noqa: E741
    terms: Dict[PartitionPair, int] = dataclasses.field(default_factory=dict, hash=False)

    def __post_init__(self) -> None:
        cleaned: Dict[PartitionPair, int] = {}
        for (lam, mu), multiplicity in sorted(self.terms.items(), key=lambda item: _pair_key(item[0])):
            lam, mu = Partition(lam), Partition(mu)
            if lam.weight != self.k or mu.weight != self.l:
                raise ValueError(
                    f"Expected a pair of weights ({self.k}, {self.l}). Instead got: {lam}, {mu}"
                )
            if multiplicity < 0:
                raise NegativeMultiplicityError(
                    f"Negative multiplicity {multiplicity} for {lam} (x) {mu}"
                )
            if multiplicity:
                cleaned[(lam, mu)] = multiplicity
        object.__setattr__(self, "terms", cleaned)

    def multiplicity(self, lam: Partition, mu: Partition) -> int:
        return self.terms.get((Partition(lam), Partition(mu)), 0)


@dataclasses.dataclass(frozen=True)
class GradedCocharacter:
    """Per-split layers of a Z2-graded cocharacter; layer k has l = degree - k."""

    degree: int
    layers: Dict[int, BiCharacter] = dataclasses.field(default_factory=dict, hash=False)

    def __post_init__(self) -> None:
        for split, layer in self.layers.items():
            if layer.k != split or layer.k + layer.l != self.degree:
                raise ValueError(
                    f"Layer {split} does not split degree {self.degree}. "
                    f"Instead got: k={layer.k}, l={layer.l}"
                )
        object.__setattr__(self, "layers", dict(sorted(self.layers.items(), reverse=True)))


def restrict(nu: Partition, k: int, cache: Optional[LRCache] = None) -> BiCharacter:
    """
    chi_nu restricted to S_k x S_(n-k).

    Parameters:
    -----------
    nu : Partition
        The S_n-character, n = |nu|.
    k : int
        Size of the first factor, 0 <= k <= n.

    Returns:
    --------
    BiCharacter
        {(lambda, mu): c^nu_{lambda mu}} over the nonzero coefficients.
    """
    n = nu.weight
    if k < 0 or k > n:
        raise ValueError(f"Expected 0 <= k <= {n}. Instead got: {k}")
    terms: Dict[PartitionPair, int] = {}
    firsts = [lam for lam in generate_partitions(k) if contains(nu, lam)]
    seconds = [mu for mu in generate_partitions(n - k) if contains(nu, mu)]
    for lam in firsts:
        for mu in seconds:
            coefficient = lr_coefficient(lam, mu, nu, cache=cache)
            if coefficient:
                terms[(lam, mu)] = coefficient
    return BiCharacter(k=k, l=n - k, terms=terms)


def cocharacter_restriction(algebra: AlgebraId, degree: int, k: int) -> BiCharacter:
    """chi_n(A) restricted to S_k x S_(n-k); only UT2(F) is supported."""
    if AlgebraId(algebra) is not AlgebraId.UT2F:
        raise UnsupportedAlgebraError(
            f"Restricted cocharacters are computed for ut2f only. Instead got: {AlgebraId(algebra).value}"
        )
    if k < 0 or k > degree:
        raise ValueError(f"Expected 0 <= k <= {degree}. Instead got: {k}")
    terms: Dict[PartitionPair, int] = collections.defaultdict(int)
    for nu, multiplicity in cocharacter(AlgebraId.UT2F, degree).terms.items():
        for pair, coefficient in restrict(nu, k).terms.items():
            terms[pair] += multiplicity * coefficient
    return BiCharacter(k=k, l=degree - k, terms=dict(terms))


def conjugate_second(character: BiCharacter) -> BiCharacter:
    """Replace every lambda (x) mu by lambda (x) mu'. Applying it twice is the identity."""
    terms: Dict[PartitionPair, int] = collections.defaultdict(int)
    for (lam, mu), multiplicity in character.terms.items():
        terms[(lam, conjugate(mu))] += multiplicity
    return BiCharacter(k=character.k, l=character.l, terms=dict(terms))


def graded_cocharacter_UT2E(degree: int) -> GradedCocharacter:
    """The Z2-graded cocharacter of UT2(E) in degree n, one layer per split k."""
    if degree < 0:
        raise ValueError(f"Expected a nonnegative degree. Instead got: {degree}")
    layers = {
        k: conjugate_second(cocharacter_restriction(AlgebraId.UT2F, degree, k))
        for k in range(degree, -1, -1)
    }
    return GradedCocharacter(degree=degree, layers=layers)


def graded_layer_dimension(character: BiCharacter) -> int:
    """Sum of m_{lambda,mu} f^lambda f^mu."""
    total = 0
    for (lam, mu), multiplicity in character.terms.items():
        term = checked(multiplicity * hook_dimension(lam) * hook_dimension(mu), "layer term")
        total = checked(total + term, "layer dimension")
    return total


def graded_dimension(graded: GradedCocharacter) -> int:
    """Graded codimension: sum over k of binomial(n, k) times the layer dimension."""
    total = 0
    for k, layer in graded.layers.items():
        term = checked(math.comb(graded.degree, k) * graded_layer_dimension(layer), "graded term")
        total = checked(total + term, "graded dimension")
    return total


def _shape_class(partition: Partition) -> str:
    if len(partition) <= 1:
        return "row"
    if len(partition) == 2:
        return "two"
    if len(partition) == 3 and partition[2] == 1:
        return "three"
    return "other"


def _nu_class(nu: Partition) -> str:
    return {"row": "(n)", "two": "(k1,k2)", "three": "(k1,k2,1)"}[_shape_class(nu)]


# The table prints 2 for every two (x) two component with mu1-1>=mu2; the engine gives 1
# for some of them.
PRINTED_TWO_ENGINE_ONE = "two (x) two, mu1-1>=mu2: printed 2, engine 1"

# Component classes listed for each restricted shape; mirrored pairs are accepted too.
LISTED_COMPONENTS: Dict[str, Tuple[Tuple[str, str], ...]] = {
    "(n)": (("row", "row"),),
    "(k1,k2)": (("row", "row"), ("two", "row"), ("two", "two")),
    "(k1,k2,1)": (("two", "row"), ("two", "two"), ("three", "row"), ("three", "two")),
}


def _check_component(
    nu_class: str, lam: Partition, mu: Partition, multiplicity: int
) -> Tuple[bool, str]:
    pair = (_shape_class(lam), _shape_class(mu))
    listed = LISTED_COMPONENTS[nu_class]
    if pair not in listed and pair[::-1] not in listed:
        return False, f"component {pair[0]} (x) {pair[1]} is not listed"
    if nu_class == "(k1,k2,1)" and pair == ("two", "two"):
        if mu[0] - 1 < mu[1]:
            return multiplicity == 1, "two (x) two, mu1-1<mu2: multiplicity 1"
        if multiplicity == 1:
            return True, PRINTED_TWO_ENGINE_ONE
        return multiplicity == 2, "two (x) two, mu1-1>=mu2: multiplicity 2"
    return multiplicity == 1, f"{pair[0]} (x) {pair[1]}: multiplicity 1"


def table_shapes(n_max: int) -> List[Partition]:
    """Every (n), (k1,k2) and (k1,k2,1) with 1 <= n <= n_max, in canonical order."""
    return [
        nu
        for n in range(1, n_max + 1)
        for nu in generate_partitions(n)
        if _shape_class(nu) != "other"
    ]


def _check_shape(nu: Partition) -> List[Dict[str, Any]]:
    nu_class = _nu_class(nu)
    findings = []
    for k in range(nu.weight + 1):
        for (lam, mu), multiplicity in restrict(nu, k).terms.items():
            ok, rule = _check_component(nu_class, lam, mu, multiplicity)
            if not ok:
                logger.warning(
                    "Restriction of %s to k=%d: %s (x) %s has multiplicity %d, expected %s",
                    list(nu),
                    k,
                    list(lam),
                    list(mu),
                    multiplicity,
                    rule,
                )
            elif rule == PRINTED_TWO_ENGINE_ONE:
                logger.debug(
                    "Restriction of %s to k=%d: %s (x) %s has multiplicity 1 where 2 is printed",
                    list(nu),
                    k,
                    list(lam),
                    list(mu),
                )
            findings.append(
                {
                    "formula": RESTRICTION_TABLE,
                    "statement": RESTRICTION_TABLE_STATEMENT,
                    "nu": list(nu),
                    "k": k,
                    "lambda": list(lam),
                    "mu": list(mu),
                    "multiplicity": multiplicity,
                    "rule": rule,
                    "status": MATCH if ok else MISMATCH,
                }
            )
    return findings


def verify_restriction_table(
    n_max: int = config["CONFIG"]["restriction_max_degree"], parallelism: int = 1
) -> FindingsReport:
    """
    Check every component of every restricted (n), (k1,k2), (k1,k2,1) against the table
    of listed components and multiplicities.

    Findings are ordered by (|nu|, nu, k) whatever the parallelism.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be at least 2. Instead got: {n_max}")
    shapes = table_shapes(n_max)
    if parallelism > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=parallelism) as executor:
            batches = list(executor.map(_check_shape, shapes))
    else:
        batches = [_check_shape(nu) for nu in shapes]
    findings = [finding for batch in batches for finding in batch]
    counts = collections.Counter(finding["status"] for finding in findings)
    summary = {MATCH: counts.get(MATCH, 0), MISMATCH: counts.get(MISMATCH, 0)}
    logger.info(
        "Restriction table up to degree %d: %d components match, %d mismatch",
        n_max,
        summary[MATCH],
        summary[MISMATCH],
    )
    return {
        "tool_version": __version__,
        "generated_at": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "config": {"n_max": n_max, "parallelism": parallelism},
        "findings": findings,
        "summary": summary,
        "resolutions": [
            {
                "formula": RESTRICTION_TABLE,
                "statement": RESTRICTION_TABLE_STATEMENT,
                "question": "The table lists component shapes without a complete multiplicity rule.",
                "resolution": "Multiplicity 2 only for two (x) two under (k1,k2,1), and only "
                "when mu1-1>=mu2; every other listed component has multiplicity 1.",
            }
        ],
    }


def bicharacter_to_json(character: BiCharacter) -> Dict[str, Any]:
    return {
        "k": character.k,
        "l": character.l,
        "terms": [
            {"lambda": list(lam), "mu": list(mu), "mult": multiplicity}
            for (lam, mu), multiplicity in character.terms.items()
        ],
    }


def graded_to_json(graded: GradedCocharacter) -> Dict[str, Any]:
    """{"degree": N, "layers": [{"k", "l", "terms"}, ...]} with k descending."""
    return {
        "degree": graded.degree,
        "layers": [bicharacter_to_json(layer) for layer in graded.layers.values()],
    }
