"""
Closed-form multiplicities for the cocharacter series, as predicates that can be checked
against the series engine.

Every formula decodes lambda into shape parameters and walks an ordered list of cases. The
first case whose condition holds gives the multiplicity. Shapes that decode but satisfy no
case, and shapes outside the grammar, are NOT_COVERED.
"""

import dataclasses
import enum
from typing import Callable, Dict, List, Optional, Tuple, Union

from .errors import UnknownFormulaError
from .partitions import Partition


class Coverage(enum.Enum):
    NOT_COVERED = "not-covered"


NOT_COVERED = Coverage.NOT_COVERED


@dataclasses.dataclass(frozen=True)
class ShapeParameters:
    """
    Decoded shape of a partition.

    family is "main" for (k1,k2,2^m,1^l), "three" for (k1,k2,3,2^m,1^l) and "columns"
    for the two-column shapes (2^mu2,1^(mu1-mu2)). The single-row-head grammars
    (k,2^m,1^l) store k in k1 and leave k2 = 0.
    """

    family: str
    k1: int = 0
    k2: int = 0
    m: int = 0
    l: int = 0

    def describe(self) -> str:
        return f"{self.family}(k1={self.k1},k2={self.k2},m={self.m},l={self.l})"


@dataclasses.dataclass(frozen=True)
class CaseRule:
    label: str
    applies: Callable[[ShapeParameters], bool]
    value: Callable[[ShapeParameters], int]


@dataclasses.dataclass(frozen=True)
class ClosedFormCase:
    """The case of a formula that matched lambda, with its decoded parameters."""

    formula_id: str
    label: str
    parameters: ShapeParameters
    value: int


@dataclasses.dataclass(frozen=True)
class ClosedForm:
    formula_id: str
    statement: str
    description: str
    decode: Callable[[Partition], Optional[ShapeParameters]]
    cases: Tuple[CaseRule, ...]


def _split_tail(rest: Tuple[int, ...]) -> Optional[Tuple[bool, int, int]]:
    # rest must read (3?)(2^m)(1^l)
    index = 0
    has_three = bool(rest) and rest[0] == 3
    if has_three:
        index = 1
    twos = 0
    while index < len(rest) and rest[index] == 2:
        twos += 1
        index += 1
    ones = len(rest) - index
    if any(part != 1 for part in rest[index:]):
        return None
    return has_three, twos, ones


def decode_natural_rows(lam: Partition) -> Optional[ShapeParameters]:
    """(k1,k2,1^l) with k2 = lambda_2 taken literally."""
    if any(part != 1 for part in lam[2:]):
        return None
    return ShapeParameters("main", lam.part(0), lam.part(1), 0, max(len(lam) - 2, 0))


def decode_two_rows(lam: Partition) -> Optional[ShapeParameters]:
    """
    (k1,k2,2^m,1^l) or (k1,k2,3,2^m,1^l), where k2 = lambda_2 when lambda_2 >= 2 and 0
    otherwise, so that trailing ones are always counted by l.
    """
    if lam.part(1) >= 2:
        k2, rest = lam[1], tuple(lam[2:])
    else:
        k2, rest = 0, tuple(lam[1:])
    tail = _split_tail(rest)
    if tail is None:
        return None
    has_three, twos, ones = tail
    return ShapeParameters("three" if has_three else "main", lam.part(0), k2, twos, ones)


def decode_hook_grammar(lam: Partition) -> Optional[ShapeParameters]:
    """(k1,k2,1^l) and (k1,k2,2,1^l) on top of decode_two_rows, the latter as family "two"."""
    shape = decode_two_rows(lam)
    if shape is None or shape.family != "main":
        return None
    if shape.m == 0:
        return shape
    if shape.m == 1 and shape.k2 >= 2:
        return dataclasses.replace(shape, family="two", m=0)
    return None


def decode_row_head(lam: Partition) -> Optional[ShapeParameters]:
    """(k,2^m,1^l) or (k,3,2^m,1^l), where k = lambda_1 when lambda_1 >= 2 and 0 otherwise."""
    if lam.part(0) >= 2:
        k, rest = lam[0], tuple(lam[1:])
    else:
        k, rest = 0, tuple(lam)
    tail = _split_tail(rest)
    if tail is None:
        return None
    has_three, twos, ones = tail
    if has_three and k < 3:
        return None
    return ShapeParameters("three" if has_three else "main", k1=k, m=twos, l=ones)


def decode_columns(lam: Partition) -> Optional[ShapeParameters]:
    """lambda = (2^mu2, 1^(mu1-mu2)) of even weight, stored as k1 = mu1, k2 = mu2."""
    if lam.part(0) > 2 or lam.weight % 2:
        return None
    twos = sum(1 for part in lam if part == 2)
    return ShapeParameters("columns", k1=len(lam), k2=twos)


def _rule(label: str, applies, value) -> CaseRule:
    return CaseRule(label=label, applies=applies, value=value)


def _main(shape: ShapeParameters) -> bool:
    return shape.family == "main"


def _even(number: int) -> bool:
    return number % 2 == 0


# Row-head families shared by the proper-square series and the proper series of UT2(E).
def _head_ge3_m_ge1(s: ShapeParameters) -> bool:
    return _main(s) and s.k1 >= 3 and s.m >= 1


def _head_ge3_m0(s: ShapeParameters) -> bool:
    return _main(s) and s.k1 >= 3 and s.m == 0


def _column_only(s: ShapeParameters) -> bool:
    return _main(s) and s.k1 == 0 and s.m == 0


def _head2_m0(s: ShapeParameters) -> bool:
    return _main(s) and s.k1 == 2 and s.m == 0


def _three(s: ShapeParameters) -> bool:
    return s.family == "three"


FORMULAS: Dict[str, ClosedForm] = {}
# statement identifier -> formula_id
STATEMENTS: Dict[str, str] = {}


def _register(formula: ClosedForm) -> None:
    FORMULAS[formula.formula_id] = formula
    STATEMENTS[formula.statement] = formula.formula_id


_register(
    ClosedForm(
        formula_id="product-e-e0",
        statement="lemma-5.1",
        description="H(E) H(E0)",
        decode=decode_natural_rows,
        cases=(
            _rule("k2>=1", lambda s: s.k2 >= 1, lambda s: 2 * (s.k1 - s.k2 + 1)),
            _rule("k2=l=0", lambda s: s.k2 == 0 and s.l == 0, lambda s: s.k1 + 1),
        ),
    )
)

_register(
    ClosedForm(
        formula_id="s1-product-e-e0",
        statement="lemma-5.2",
        description="S_(1) H(E) H(E0)",
        decode=decode_hook_grammar,
        cases=(
            _rule("k2=l=0", lambda s: _main(s) and s.k2 == 0 and s.l == 0, lambda s: s.k1),
            _rule(
                "k2>=2, l>=1",
                lambda s: _main(s) and s.k2 >= 2 and s.l >= 1,
                lambda s: 6 * (s.k1 - s.k2 + 1),
            ),
            _rule("k2=0, l>=2", lambda s: _main(s) and s.k2 == 0 and s.l >= 2, lambda s: 4 * s.k1 - 2),
            _rule("k2=0, l=1", lambda s: _main(s) and s.k2 == 0 and s.l == 1, lambda s: 3 * s.k1 - 1),
            _rule("l=0", lambda s: _main(s) and s.l == 0, lambda s: 4 * (s.k1 - s.k2 + 1)),
            _rule("(k1,k2,2,1^l)", lambda s: s.family == "two", lambda s: 2 * (s.k1 - s.k2 + 1)),
        ),
    )
)

_register(
    ClosedForm(
        formula_id="shifted-product-e-e0",
        statement="lemma-5.3",
        description="(S_(1) - 1) H(E) H(E0)",
        decode=decode_hook_grammar,
        cases=(
            _rule("k2=l=0", lambda s: _main(s) and s.k2 == 0 and s.l == 0, lambda s: -1),
            _rule(
                "k2>=2, l>=1",
                lambda s: _main(s) and s.k2 >= 2 and s.l >= 1,
                lambda s: 4 * (s.k1 - s.k2 + 1),
            ),
            _rule("k2=0, l>=2", lambda s: _main(s) and s.k2 == 0 and s.l >= 2, lambda s: 2 * s.k1 - 2),
            _rule("k2=0, l=1", lambda s: _main(s) and s.k2 == 0 and s.l == 1, lambda s: s.k1 - 1),
            _rule("l=0", lambda s: _main(s) and s.l == 0, lambda s: 2 * (s.k1 - s.k2 + 1)),
            _rule("(k1,k2,2,1^l)", lambda s: s.family == "two", lambda s: 2 * (s.k1 - s.k2 + 1)),
        ),
    )
)

_register(
    ClosedForm(
        formula_id="hilbert-g",
        statement="prop-5.4",
        description="H(G), G = (E E; 0 E0)",
        decode=decode_hook_grammar,
        cases=(
            _rule("k2=l=0", lambda s: _main(s) and s.k2 == 0 and s.l == 0, lambda s: 1),
            _rule(
                "k2>=2, l>=1",
                lambda s: _main(s) and s.k2 >= 2 and s.l >= 1,
                lambda s: 4 * (s.k1 - s.k2 + 1),
            ),
            _rule("k2=0, l>=2", lambda s: _main(s) and s.k2 == 0 and s.l >= 2, lambda s: 2 * s.k1 - 1),
            _rule("l=1", lambda s: _main(s) and s.l == 1, lambda s: s.k1),
            _rule("l=0", lambda s: _main(s) and s.l == 0, lambda s: 2 * (s.k1 - s.k2 + 1)),
            _rule("(k1,k2,2,1^l)", lambda s: s.family == "two", lambda s: 2 * (s.k1 - s.k2 + 1)),
        ),
    )
)

_register(
    ClosedForm(
        formula_id="proper-square-e",
        statement="lemma-6.1",
        description="(H^B(E))^2",
        decode=decode_columns,
        cases=(
            _rule("mu2 even", lambda s: _even(s.k2), lambda s: (s.k1 - s.k2) // 2 + 1),
            _rule("mu2 odd", lambda s: not _even(s.k2), lambda s: (s.k1 - s.k2) // 2),
        ),
    )
)

_register(
    ClosedForm(
        formula_id="geometric-proper-square-e",
        statement="lemma-6.2",
        description="geometric * (H^B(E))^2",
        decode=decode_row_head,
        cases=(
            _rule("k=m=0, l even", lambda s: _column_only(s) and _even(s.l), lambda s: s.l // 2 + 1),
            _rule(
                "k=m=0, l odd",
                lambda s: _column_only(s) and not _even(s.l),
                lambda s: (s.l - 1) // 2 + 1,
            ),
            _rule("otherwise", _main, lambda s: s.l + 1),
        ),
    )
)

_register(
    ClosedForm(
        formula_id="s1-geometric-proper-square-e",
        statement="lemma-6.3",
        description="S_(1) * geometric * (H^B(E))^2",
        decode=decode_row_head,
        cases=(
            _rule("k>=3, m>=1", _head_ge3_m_ge1, lambda s: 3 * (s.l + 1)),
            _rule("k=2, m>=1", lambda s: _main(s) and s.k1 == 2 and s.m >= 1, lambda s: 2 * (s.l + 1)),
            _rule("k>=3, m=0", _head_ge3_m0, lambda s: 2 * s.l + 1),
            _rule("k=m=0, l even", lambda s: _column_only(s) and _even(s.l), lambda s: s.l // 2),
            _rule(
                "k=m=0, l odd",
                lambda s: _column_only(s) and not _even(s.l),
                lambda s: (s.l - 1) // 2 + 1,
            ),
            _rule(
                "k=2, m=0, l even",
                lambda s: _head2_m0(s) and _even(s.l),
                lambda s: s.l + s.l // 2 + 1,
            ),
            _rule(
                "k=2, m=0, l odd",
                lambda s: _head2_m0(s) and not _even(s.l),
                lambda s: s.l + (s.l + 1) // 2 + 1,
            ),
            _rule("(k,3,2^m,1^l)", _three, lambda s: s.l + 1),
        ),
    )
)

_register(
    ClosedForm(
        formula_id="shifted-geometric-proper-square-e",
        statement="lemma-6.4",
        description="(S_(1) - 1) * geometric * (H^B(E))^2",
        decode=decode_row_head,
        cases=(
            _rule("k>=3, m>=1", _head_ge3_m_ge1, lambda s: 2 * (s.l + 1)),
            _rule("k=2, m>=2", lambda s: _main(s) and s.k1 == 2 and s.m >= 2, lambda s: s.l + 1),
            _rule("k>=3, m=0", _head_ge3_m0, lambda s: s.l),
            _rule("k=m=0, l even", lambda s: _column_only(s) and _even(s.l), lambda s: -1),
            _rule("k=m=0, l odd", lambda s: _column_only(s) and not _even(s.l), lambda s: 0),
            _rule("k=2, m=0, l even", lambda s: _head2_m0(s) and _even(s.l), lambda s: s.l // 2),
            _rule(
                "k=2, m=0, l odd",
                lambda s: _head2_m0(s) and not _even(s.l),
                lambda s: (s.l + 1) // 2,
            ),
            _rule("(k,3,2^m,1^l)", _three, lambda s: s.l + 1),
        ),
    )
)

_register(
    ClosedForm(
        formula_id="proper-hilbert-ut2e",
        statement="prop-6.1",
        description="H^B(UT2(E)) = 2 H^B(E) + (S_(1) - 1) * geometric * (H^B(E))^2",
        decode=decode_row_head,
        cases=(
            _rule("k>=3, m>=1", _head_ge3_m_ge1, lambda s: 2 * (s.l + 1)),
            # stated without a bound on k; k >= 3 is already taken above
            _rule("m>=2", lambda s: _main(s) and s.m >= 2, lambda s: s.l + 1),
            _rule("k>=3, m=0", _head_ge3_m0, lambda s: s.l),
            _rule("k=m=0, l even", lambda s: _column_only(s) and _even(s.l), lambda s: 1),
            _rule("k=m=0, l odd", lambda s: _column_only(s) and not _even(s.l), lambda s: 0),
            _rule("k=2, m=0, l even", lambda s: _head2_m0(s) and _even(s.l), lambda s: s.l // 2),
            _rule(
                "k=2, m=0, l odd",
                lambda s: _head2_m0(s) and not _even(s.l),
                lambda s: (s.l + 1) // 2,
            ),
            _rule("(k,3,2^m,1^l)", _three, lambda s: s.l + 1),
        ),
    )
)


def _single_row_or_column(s: ShapeParameters) -> bool:
    return _main(s) and s.k2 == 0 and s.m == 0 and (s.l == 0 or s.k1 <= 1)


def _k2_ge3(s: ShapeParameters) -> bool:
    return _main(s) and s.k2 >= 3


def _k2_eq2(s: ShapeParameters) -> bool:
    return _main(s) and s.k2 == 2


_register(
    ClosedForm(
        formula_id="hilbert-ut2e",
        statement="prop-6.2",
        description="H(UT2(E))",
        decode=decode_two_rows,
        cases=(
            _rule("(k) or (1^l)", _single_row_or_column, lambda s: 1),
            _rule(
                "k1>=k2>=3, m>=1",
                lambda s: _k2_ge3(s) and s.m >= 1,
                lambda s: 12 * (s.k1 - s.k2 + 1) * (s.l + 1),
            ),
            _rule(
                "k1>=k2>=3, m=0",
                lambda s: _k2_ge3(s) and s.m == 0,
                lambda s: 4 * (s.k1 - s.k2 + 1) * (2 * s.l + 1),
            ),
            _rule(
                "k1>=k2=2, m>=1",
                lambda s: _k2_eq2(s) and s.m >= 1,
                lambda s: 8 * (s.k1 - 2) * (s.l + 1) + 4 * (s.l + 1),
            ),
            _rule(
                "k1>=k2=2, m=0",
                lambda s: _k2_eq2(s) and s.m == 0,
                lambda s: 3 * (s.k1 - 2) * (2 * s.l + 1) + 3 * s.l + 2,
            ),
            _rule(
                "k1>=2, k2=0, m=0, l>=1",
                lambda s: _main(s) and s.k1 >= 2 and s.k2 == 0 and s.m == 0 and s.l >= 1,
                lambda s: (s.k1 - 2) * (2 * s.l - 1) + s.l + 1,
            ),
            _rule(
                "(k1,k2,3,2^m,1^l), k2>=3, m>=1",
                lambda s: _three(s) and s.k2 >= 3 and s.m >= 1,
                lambda s: 4 * (s.k1 - s.k2 + 1) * (s.l + 1),
            ),
        ),
    )
)


def _ut2f_decode(lam: Partition) -> Optional[ShapeParameters]:
    if len(lam) > 3 or (len(lam) == 3 and lam[2] != 1):
        return None
    return ShapeParameters("main", lam.part(0), lam.part(1), 0, max(len(lam) - 2, 0))


_register(
    ClosedForm(
        formula_id="hilbert-ut2f",
        statement="prop-7.1",
        description="H(UT2(F))",
        decode=_ut2f_decode,
        cases=(
            _rule("(n)", lambda s: s.k2 == 0, lambda s: 1),
            _rule("(k1,k2)", lambda s: s.k2 >= 1 and s.l == 0, lambda s: s.k1 - s.k2 + 1),
            _rule("(k1,k2,1)", lambda s: s.k2 >= 1 and s.l == 1, lambda s: s.k1 - s.k2 + 1),
        ),
    )
)


def formula_ids() -> List[str]:
    return list(FORMULAS)


def statement_ids() -> List[str]:
    """Statement identifiers (lemma-5.1, ..., prop-7.1), in registry order."""
    return list(STATEMENTS)


def get_formula(formula_id: str) -> ClosedForm:
    """
    Look up a closed form by its formula id or by its statement identifier.

    Raises:
    -------
    UnknownFormulaError
        If neither kind of identifier is registered.
    """
    key = STATEMENTS.get(formula_id, formula_id)
    try:
        return FORMULAS[key]
    except KeyError as error:
        raise UnknownFormulaError(
            f"Unknown formula. Expected one of {formula_ids() + statement_ids()}. "
            f"Instead got: {formula_id!r}"
        ) from error


def match_case(formula_id: str, lam: Partition) -> Optional[ClosedFormCase]:
    """First case of the formula whose condition holds for lambda, or None."""
    formula = get_formula(formula_id)
    shape = formula.decode(lam)
    if shape is None:
        return None
    for rule in formula.cases:
        if rule.applies(shape):
            return ClosedFormCase(
                formula_id=formula.formula_id,
                label=rule.label,
                parameters=shape,
                value=rule.value(shape),
            )
    return None


def closed_form_multiplicity(formula_id: str, lam: Partition) -> Union[int, Coverage]:
    """
    The closed-form multiplicity of lambda, or NOT_COVERED.

    Raises:
    -------
    UnknownFormulaError
        If formula_id is not registered.
    """
    case = match_case(formula_id, lam)
    return NOT_COVERED if case is None else case.value
