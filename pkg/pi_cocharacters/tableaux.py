"""
Littlewood-Richardson coefficients by enumeration of LR skew tableaux, the Pieri rule, and a
semistandard-tableau monomial oracle that checks Schur products independently.
"""

import collections
import dataclasses
import threading
from typing import Counter, Dict, Iterator, List, Optional, Tuple

import aws_lambda_powertools
import sympy

from .config import config
from .partitions import Partition, contains, generate_partitions, sort_key

logger = aws_lambda_powertools.Logger(
    service=config["CONFIG"]["powertools_service_name"], child=True
)

ExponentVector = Tuple[int, ...]
LRKey = Tuple[Partition, Partition, Partition]


@dataclasses.dataclass(frozen=True)
class SkewShape:
    """The cells of outer that are not in inner."""

    outer: Partition
    inner: Partition

    def __post_init__(self) -> None:
        if not contains(self.outer, self.inner):
            raise ValueError(
                f"Skew shape needs inner inside outer. Instead got: {self.outer}/{self.inner}"
            )

    @property
    def size(self) -> int:
        return self.outer.weight - self.inner.weight

    def reading_cells(self) -> List[Tuple[int, int]]:
        """Cells in reverse reading order: rows top to bottom, each row right to left."""
        return [
            (row, column)
            for row, row_length in enumerate(self.outer)
            for column in range(row_length - 1, self.inner.part(row) - 1, -1)
        ]


class LRCache:
    """
    Thread-safe memo of Littlewood-Richardson coefficients.

    Keys are canonicalized so that the lighter of lambda and mu comes first; the cache
    never changes a result, it only avoids recomputation.
    """

    def __init__(self, enabled: bool = True) -> None:
        self.enabled = enabled
        self._memo: Dict[LRKey, int] = {}
        self._lock = threading.Lock()

    @staticmethod
    def canonical_key(lam: Partition, mu: Partition, nu: Partition) -> LRKey:
        if sort_key(mu) < sort_key(lam):
            lam, mu = mu, lam
        return (lam, mu, nu)

    def lookup(self, key: LRKey) -> Optional[int]:
        if not self.enabled:
            return None
        with self._lock:
            return self._memo.get(key)

    def store(self, key: LRKey, value: int) -> None:
        if not self.enabled:
            return
        with self._lock:
            self._memo[key] = value

    def clear(self) -> None:
        with self._lock:
            self._memo.clear()

    def __len__(self) -> int:
        with self._lock:
            return len(self._memo)


DEFAULT_CACHE = LRCache()


def _count_lr_tableaux(shape: SkewShape, content: Partition) -> int:
    # Fill cells in reverse reading order; the lattice condition is checked on every prefix.
    if shape.size != content.weight:
        return 0
    cells = shape.reading_cells()
    filling: Dict[Tuple[int, int], int] = {}
    counts = [0] * (len(content) + 1)

    def extend(index: int) -> int:
        if index == len(cells):
            return 1
        row, column = cells[index]
        right = filling.get((row, column + 1))
        above = filling.get((row - 1, column))
        highest = min(len(content), row + 1, len(content) if right is None else right)
        lowest = 1 if above is None else above + 1
        total = 0
        for value in range(lowest, highest + 1):
            if counts[value] >= content[value - 1]:
                continue
            if value > 1 and counts[value] + 1 > counts[value - 1]:
                continue
            counts[value] += 1
            filling[(row, column)] = value
            total += extend(index + 1)
            del filling[(row, column)]
            counts[value] -= 1
        return total

    return extend(0)


def lr_coefficient(
    lam: Partition, mu: Partition, nu: Partition, cache: Optional[LRCache] = None
) -> int:
    """
    The Littlewood-Richardson coefficient c^nu_{lambda mu}.

    Parameters:
    -----------
    lam, mu, nu : Partition
        Degenerate triples (|lam| + |mu| != |nu|, or a factor not inside nu) give 0.
    cache : LRCache | None
        Memo to consult; DEFAULT_CACHE when omitted.

    Returns:
    --------
    int
        The number of LR skew tableaux of shape nu/lam and content mu.
    """
    if lam.weight + mu.weight != nu.weight:
        return 0
    if not contains(nu, lam) or not contains(nu, mu):
        return 0
    memo = DEFAULT_CACHE if cache is None else cache
    key = LRCache.canonical_key(lam, mu, nu)
    cached = memo.lookup(key)
    if cached is not None:
        return cached
    inner, content, outer = key
    value = _count_lr_tableaux(SkewShape(outer=outer, inner=inner), content)
    memo.store(key, value)
    return value


def expand_product(
    lam: Partition, mu: Partition, cache: Optional[LRCache] = None
) -> Dict[Partition, int]:
    """
    Full LR expansion S_lam * S_mu = sum c^nu_{lam mu} S_nu.

    Returns:
    --------
    Dict[Partition, int]
        The nu with positive coefficient, in canonical partition order.
    """
    n = lam.weight + mu.weight
    max_rows = len(lam) + len(mu)
    max_first = lam.part(0) + mu.part(0)
    result: Dict[Partition, int] = {}
    for nu in generate_partitions(n):
        if len(nu) > max_rows or nu.part(0) > max_first:
            continue
        coefficient = lr_coefficient(lam, mu, nu, cache=cache)
        if coefficient:
            result[nu] = coefficient
    return result


def _horizontal_strip_additions(
    partition: Partition, boxes: int
) -> Iterator[Partition]:
    bounds = [None] + list(partition)  # row i may grow up to the previous row's old length
    rows = len(partition) + 1

    def grow(row: int, remaining: int, parts: Tuple[int, ...]) -> Iterator[Partition]:
        if row == rows:
            if remaining == 0:
                yield Partition(parts)
            return
        current = partition.part(row)
        limit = remaining if bounds[row] is None else min(remaining, bounds[row] - current)
        for added in range(limit, -1, -1):
            yield from grow(row + 1, remaining - added, parts + (current + added,))

    yield from grow(0, boxes, ())


def pieri_product(lam: Partition, boxes: int) -> Dict[Partition, int]:
    """
    S_lam * S_(boxes) by the Pieri rule: add boxes cells to lam, no two in one column.
    Every coefficient is 1.
    """
    shapes = sorted(_horizontal_strip_additions(lam, boxes), key=sort_key)
    return {shape: 1 for shape in shapes}


def _semistandard_fillings(partition: Partition, letters: int) -> Iterator[List[int]]:
    cells = [
        (row, column)
        for row, row_length in enumerate(partition)
        for column in range(row_length)
    ]
    filling: Dict[Tuple[int, int], int] = {}

    def extend(index: int) -> Iterator[List[int]]:
        if index == len(cells):
            yield list(filling.values())
            return
        row, column = cells[index]
        lowest = max(
            filling.get((row, column - 1), 1),
            filling.get((row - 1, column), 0) + 1,
        )
        for value in range(lowest, letters + 1):
            filling[(row, column)] = value
            yield from extend(index + 1)
            del filling[(row, column)]

    yield from extend(0)


def schur_monomials(partition: Partition, letters: int) -> Dict[ExponentVector, int]:
    """
    Monomial expansion of S_lambda(t_1, ..., t_letters).

    Each semistandard tableau with entries in 1..letters contributes its content vector;
    the aggregated counts are Kostka numbers. Empty when lambda has more than letters
    rows.
    """
    if letters < 1:
        raise ValueError(f"Expected at least one variable. Instead got: {letters}")
    monomials: Counter[ExponentVector] = collections.Counter()
    if len(partition) > letters:
        return {}
    for entries in _semistandard_fillings(partition, letters):
        exponents = [0] * letters
        for value in entries:
            exponents[value - 1] += 1
        monomials[tuple(exponents)] += 1
    return dict(monomials)


def monomials_to_poly(
    monomials: Dict[ExponentVector, int], letters: int
) -> sympy.Poly:
    """Dense exponent vectors to a sympy polynomial in t1..t_letters."""
    gens = sympy.symbols(f"t1:{letters + 1}")
    return sympy.Poly.from_dict(
        dict(monomials) or {(0,) * letters: 0},
        *gens,
    )


def oracle_product_check(lam: Partition, mu: Partition, letters: int) -> bool:
    """
    Compare the LR expansion of S_lam * S_mu with the product of the two Schur
    polynomials computed independently from semistandard tableaux.

    Parameters:
    -----------
    lam, mu : Partition
        The factors.
    letters : int
        Number of variables; |lam| + |mu| is always enough.

    Returns:
    --------
    bool
        True iff both monomial expansions agree.
    """
    left = monomials_to_poly(schur_monomials(lam, letters), letters) * monomials_to_poly(
        schur_monomials(mu, letters), letters
    )
    right = monomials_to_poly({}, letters)
    for nu, coefficient in expand_product(lam, mu).items():
        right += coefficient * monomials_to_poly(schur_monomials(nu, letters), letters)
    agrees = left == right
    if not agrees:
        logger.warning("Oracle disagrees with LR expansion for %s * %s", lam, mu)
    return agrees


def standard_tableaux_count(partition: Partition) -> int:
    """Brute-force count of standard Young tableaux, by removing outer corners."""
    if partition.weight == 0:
        return 1
    total = 0
    for row, row_length in enumerate(partition):
        if row_length > partition.part(row + 1):
            parts = list(partition)
            parts[row] -= 1
            total += standard_tableaux_count(Partition(parts))
    return total
