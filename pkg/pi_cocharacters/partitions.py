"""
Integer partitions: the canonical Partition type plus generation, conjugation, containment
and hook-length dimension. Every other module indexes characters and Schur functions by
Partition.
"""

import functools
import itertools
import math
from typing import Iterable, Iterator, List, Tuple

from .errors import InvalidPartitionError, checked


class Partition(tuple):
    """
    A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, anything else that is not weakly
    decreasing and nonnegative is rejected. Because a Partition is a tuple, equality
    and hashing are structural and Partition((2, 1)) == (2, 1).
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        values = [int(part) for part in parts]
        while values and values[-1] == 0:
            values.pop()
        if any(part < 0 for part in values) or any(
            left < right for left, right in zip(values, values[1:])
        ):
            raise InvalidPartitionError(
                f"Expected weakly decreasing positive parts. Instead got: {values}"
            )
        return super().__new__(cls, values)

    @property
    def weight(self) -> int:
        """The degree |lambda|, i.e. the sum of the parts."""
        return sum(self)

    def part(self, index: int) -> int:
        """Return the index-th part (0-based), reading missing parts as 0."""
        return self[index] if index < len(self) else 0

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """
        Parse the comma separated text syntax used on the command line.

        Parameters:
        -----------
        text : str
            Parts separated by commas, e.g. "3,2,1". The empty string and "[]" denote the
            empty partition. Exponent shorthand such as "2^3" is rejected.

        Returns:
        --------
        Partition
            The parsed partition.
        """
        stripped = text.strip()
        if stripped.startswith("[") and stripped.endswith("]"):
            stripped = stripped[1:-1].strip()
        if not stripped:
            return cls()
        if "^" in stripped:
            raise InvalidPartitionError(
                f"Exponent shorthand is not accepted on input. Instead got: {text!r}"
            )
        try:
            parts = [int(token) for token in stripped.split(",")]
        except ValueError as error:
            raise InvalidPartitionError(
                f"Expected comma separated integers. Instead got: {text!r}"
            ) from error
        if any(part <= 0 for part in parts):
            raise InvalidPartitionError(f"Parts must be positive. Instead got: {text!r}")
        return cls(parts)


def sort_key(partition: Partition) -> Tuple[int, Tuple[int, ...]]:
    """Canonical order: by degree, then reverse lexicographic within a degree."""
    return (sum(partition), tuple(-part for part in partition))


def format_partition(partition: Partition) -> str:
    """
    Render a partition the way the cocharacter tables are printed, with exponent
    shorthand for repeated parts, e.g. (2,1^4) or (2^2,1).
    """
    groups = []
    for part, run in itertools.groupby(partition):
        count = len(list(run))
        groups.append(str(part) if count == 1 else f"{part}^{count}")
    return "(" + ",".join(groups) + ")"


@functools.lru_cache(maxsize=None)
def _partition_tuples(n: int, largest: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    result = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partition_tuples(n - first, first):
            result.append((first,) + rest)
    return tuple(result)


def generate_partitions(n: int) -> List[Partition]:
    """
    Return every partition of n exactly once, in reverse lexicographic order.

    Parameters:
    -----------
    n : int
        A nonnegative integer. n = 0 yields the single empty partition.

    Returns:
    --------
    List[Partition]
        E.g. for n = 4: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
    """
    if n < 0:
        raise ValueError(f"Expected a nonnegative degree. Instead got: {n}")
    return [Partition(parts) for parts in _partition_tuples(n, n)]


def conjugate(partition: Partition) -> Partition:
    """Transpose of the Young diagram: the j-th part counts the rows of length >= j."""
    if not partition:
        return Partition()
    return Partition(
        sum(1 for part in partition if part >= column)
        for column in range(1, partition[0] + 1)
    )


def contains(outer: Partition, inner: Partition) -> bool:
    """True iff inner_i <= outer_i for all i, missing parts read as 0."""
    if len(inner) > len(outer):
        return False
    return all(small <= big for small, big in zip(inner, outer))


def is_hook(partition: Partition) -> bool:
    """True for shapes (k,1^l) with k >= 1."""
    return len(partition) > 0 and all(part == 1 for part in partition[1:])


def hook_dimension(partition: Partition) -> int:
    """
    Dimension f^lambda of the irreducible S_n-module, by the hook-length formula.

    Raises:
    -------
    ArithmeticOverflowError
        If an intermediate factorial leaves the signed 64-bit range.
    """
    columns = conjugate(partition)
    hooks = math.prod(
        row_length - column + columns[column] - row - 1
        for row, row_length in enumerate(partition)
        for column in range(row_length)
    )
    numerator = checked(math.factorial(partition.weight), "factorial")
    return checked(numerator // hooks, "dimension")


def horizontal_strip_removals(partition: Partition) -> Iterator[Partition]:
    """
    Yield every nu such that partition/nu is a horizontal strip, i.e. the nu interlacing
    partition as lambda_1 >= nu_1 >= lambda_2 >= nu_2 >= ... Includes nu = partition.
    """
    ranges = [
        range(partition.part(index + 1), partition[index] + 1)
        for index in range(len(partition))
    ]
    for parts in itertools.product(*ranges):
        yield Partition(parts)
