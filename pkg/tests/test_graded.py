import pytest
from hypothesis import given, settings

from pi_cocharacters.cocharacters import AlgebraId, codimension
from pi_cocharacters.errors import NegativeMultiplicityError, UnsupportedAlgebraError
from pi_cocharacters.graded import (
    PRINTED_TWO_ENGINE_ONE,
    BiCharacter,
    GradedCocharacter,
    bicharacter_to_json,
    cocharacter_restriction,
    conjugate_second,
    graded_cocharacter_UT2E,
    graded_dimension,
    graded_layer_dimension,
    graded_to_json,
    restrict,
    table_shapes,
    verify_restriction_table,
)
from pi_cocharacters.partitions import Partition, generate_partitions, hook_dimension
from tests.strategies import partitions


def P(*parts):
    return Partition(parts)


def test_restrict_single_row():
    for k in range(5):
        assert restrict(P(4), k).terms == {(P(k), P(4 - k)): 1}


def test_restrict_examples():
    assert restrict(P(2, 1), 2).terms == {(P(2), P(1)): 1, (P(1, 1), P(1)): 1}
    assert restrict(P(3, 2, 1), 3).multiplicity((2, 1), (2, 1)) == 2
    assert restrict(P(2, 2, 1), 3).multiplicity((2, 1), (1, 1)) == 1
    with pytest.raises(ValueError):
        restrict(P(2, 1), 4)


@settings(deadline=None)
@given(partitions(max_weight=8))
def test_restriction_preserves_dimension(nu):
    for k in range(nu.weight + 1):
        total = sum(
            multiplicity * hook_dimension(lam) * hook_dimension(mu)
            for (lam, mu), multiplicity in restrict(nu, k).terms.items()
        )
        assert total == hook_dimension(nu)


@settings(deadline=None)
@given(partitions(max_weight=8))
def test_restriction_layers_mirror(nu):
    n = nu.weight
    for k in range(n + 1):
        mirrored = {(mu, lam): m for (lam, mu), m in restrict(nu, n - k).terms.items()}
        assert restrict(nu, k).terms == mirrored


def test_restriction_multiplicities_of_table_shapes():
    for nu in table_shapes(8):
        for k in range(nu.weight + 1):
            for (lam, mu), multiplicity in restrict(nu, k).terms.items():
                assert multiplicity <= 2
                if multiplicity == 2:
                    assert len(nu) == 3 and len(lam) == 2 and len(mu) == 2
                    assert mu[0] - 1 >= mu[1]


def test_cocharacter_restriction_of_UT2F():
    assert cocharacter_restriction(AlgebraId.UT2F, 2, 1).terms == {(P(1), P(1)): 2}
    assert cocharacter_restriction(AlgebraId.UT2F, 3, 2).multiplicity((2,), (1,)) == 3
    assert cocharacter_restriction(AlgebraId.UT2F, 5, 2).multiplicity((2,), (3,)) >= 1
    with pytest.raises(UnsupportedAlgebraError):
        cocharacter_restriction(AlgebraId.G, 3, 1)


def test_conjugate_second_is_an_involution():
    for n in range(6):
        for k in range(n + 1):
            character = cocharacter_restriction(AlgebraId.UT2F, n, k)
            assert conjugate_second(conjugate_second(character)) == character


def test_graded_cocharacter_low_degrees():
    assert graded_cocharacter_UT2E(0).layers == {0: BiCharacter(k=0, l=0, terms={(P(), P()): 1})}
    one = graded_cocharacter_UT2E(1)
    assert one.layers[1].terms == {(P(1), P()): 1}
    assert one.layers[0].terms == {(P(), P(1)): 1}
    two = graded_cocharacter_UT2E(2)
    assert two.layers[2].terms == {(P(2), P()): 1, (P(1, 1), P()): 1}
    assert two.layers[1].terms == {(P(1), P(1)): 2}
    assert two.layers[0].terms == {(P(), P(2)): 1, (P(), P(1, 1)): 1}
    assert list(two.layers) == [2, 1, 0]


def test_graded_dimension():
    assert graded_dimension(graded_cocharacter_UT2E(0)) == 1
    assert graded_dimension(graded_cocharacter_UT2E(1)) == 2
    assert graded_dimension(graded_cocharacter_UT2E(2)) == 8
    for n in range(1, 7):
        assert graded_dimension(graded_cocharacter_UT2E(n)) == 2**n * codimension(AlgebraId.UT2F, n)


def test_graded_layer_dimension():
    layer = BiCharacter(k=2, l=1, terms={(P(1, 1), P(1)): 3})
    assert graded_layer_dimension(layer) == 3


def test_bicharacter_validation():
    with pytest.raises(ValueError):
        BiCharacter(k=1, l=1, terms={(P(2), P(1)): 1})
    with pytest.raises(NegativeMultiplicityError):
        BiCharacter(k=1, l=1, terms={(P(1), P(1)): -1})
    with pytest.raises(ValueError):
        GradedCocharacter(degree=3, layers={1: BiCharacter(k=1, l=1)})


def test_json_shapes():
    assert bicharacter_to_json(restrict(P(2, 1), 2)) == {
        "k": 2,
        "l": 1,
        "terms": [
            {"lambda": [2], "mu": [1], "mult": 1},
            {"lambda": [1, 1], "mu": [1], "mult": 1},
        ],
    }
    encoded = graded_to_json(graded_cocharacter_UT2E(1))
    assert encoded == {
        "degree": 1,
        "layers": [
            {"k": 1, "l": 0, "terms": [{"lambda": [1], "mu": [], "mult": 1}]},
            {"k": 0, "l": 1, "terms": [{"lambda": [], "mu": [1], "mult": 1}]},
        ],
    }


def test_verify_restriction_table():
    report = verify_restriction_table(8)
    assert report["summary"]["mismatch"] == 0
    assert report["summary"]["match"] > 0
    double = [
        finding
        for finding in report["findings"]
        if finding["nu"] == [3, 2, 1] and finding["lambda"] == [2, 1] and finding["mu"] == [2, 1]
    ]
    assert [finding["multiplicity"] for finding in double] == [2]
    with pytest.raises(ValueError):
        verify_restriction_table(1)


def _rule_of(report, nu, k, lam, mu):
    (rule,) = [
        finding["rule"]
        for finding in report["findings"]
        if (finding["nu"], finding["k"], finding["lambda"], finding["mu"]) == (nu, k, lam, mu)
    ]
    return rule


def test_restriction_table_labels_single_where_double_is_printed():
    report = verify_restriction_table(7)
    assert _rule_of(report, [3, 3, 1], 4, [2, 2], [2, 1]) == PRINTED_TWO_ENGINE_ONE
    assert _rule_of(report, [3, 2, 1], 3, [2, 1], [2, 1]) == "two (x) two, mu1-1>=mu2: multiplicity 2"
    labelled = [f for f in report["findings"] if f["rule"] == PRINTED_TWO_ENGINE_ONE]
    assert all(f["status"] == "match" and f["multiplicity"] == 1 for f in labelled)
    assert {f["statement"] for f in report["findings"]} == {"prop-7.3"}


def test_verify_restriction_table_parallel_order():
    serial = verify_restriction_table(6, parallelism=1)
    parallel = verify_restriction_table(6, parallelism=8)
    assert serial["findings"] == parallel["findings"]


def test_table_shapes():
    assert table_shapes(3) == [P(1), P(2), P(1, 1), P(3), P(2, 1), P(1, 1, 1)]
    assert all(nu in table_shapes(6) for nu in generate_partitions(6) if len(nu) <= 2)
