import pytest

from levelrank.branching import (
    branch,
    etale_necessary_conditions,
    etale_vacuum_algebra,
    mirror_transport,
    transport,
    verify_equivalence_fusion,
    verify_exhaustion,
    verify_trace_form,
)
from levelrank.partitions import Partition
from levelrank.qdim import qdim_weight
from levelrank.weights import LevelWeight, enumerate_graded, tau

GOLDEN_TEN = {
    ((), ()),
    ((2, 1), (2, 1, 1, 1, 1)),
    ((5, 4), (3, 2, 1)),
    ((4, 2), (2, 2, 1, 1)),
    ((3,), (3, 3, 2, 2, 2)),
    ((6, 3), (2, 2, 2)),
    ((5, 1), (3, 3, 3, 2, 1)),
    ((6,), (3, 3, 3, 3)),
    ((3, 3), (3, 1, 1, 1)),
    ((6, 6), (3, 3)),
}


def test_branch_three_six_zero_golden():
    table = branch(3, 6, 0)
    assert len(table) == 10
    assert {(a.parts, b.parts) for a, b in table.partition_pairs()} == GOLDEN_TEN


def test_branch_three_six_thirteen_contains_golden_pair():
    table = branch(3, 6, 13)
    assert (LevelWeight((3, 2, 1)), LevelWeight((1, 0, 0, 1, 1, 0))) in table


def test_branch_two_two_zero():
    table = branch(2, 2, 0)
    assert set(table.pairs) == {
        (LevelWeight((2, 0)), LevelWeight((2, 0))),
        (LevelWeight((0, 2)), LevelWeight((0, 2))),
    }


def test_branch_class_normalized_mod_nm():
    assert branch(3, 6, 13).pairs == branch(3, 6, 13 + 18).pairs


def test_branch_rejects_small_rank():
    with pytest.raises(ValueError):
        branch(1, 6, 0)
    with pytest.raises(ValueError):
        branch(3, 1, 0)


def test_etale_is_branch_zero():
    assert etale_vacuum_algebra(3, 6).pairs == branch(3, 6, 0).pairs


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_branch_structure(n, m):
    for i in range(n * m):
        table = branch(n, m, i)
        lefts = table.left_weights()
        rights = table.right_weights()
        # multiplicity-free in both factors
        assert len(set(lefts)) == len(lefts)
        assert len(set(rights)) == len(rights)
        assert set(lefts) == set(enumerate_graded(n, m, i))
        for b in rights:
            assert b.degree() == i % m
        for a, b in table.pairs:
            assert b == tau(a, i)


def test_branch_json_schema():
    payload = branch(2, 2, 0).to_json()
    assert payload == {
        "n": 2,
        "m": 2,
        "i": 0,
        "summands": [
            {"left": [2, 0], "right": [2, 0], "left_partition": [], "right_partition": []},
            {"left": [0, 2], "right": [0, 2], "left_partition": [2], "right_partition": [2]},
        ],
    }


def test_exhaustion_three_six_zero():
    v = verify_exhaustion(3, 6, 0)
    assert v.holds
    assert v.paired_sum == v.graded_total


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4)])
def test_exhaustion_sweep(n, m):
    for i in range(n * m):
        assert verify_exhaustion(n, m, i)


def test_exhaustion_verdict_reports_difference():
    v = verify_exhaustion(2, 3, 1)
    assert v.difference().is_zero()


def test_transport_golden():
    assert transport(LevelWeight.vacuum(3, 4)) == LevelWeight.vacuum(4, 3)
    a = LevelWeight((4, 6))
    assert transport(a) == LevelWeight((0, 0, 0, 1, 0, 0, 0, 1, 0, 0))


def test_transport_requires_degree_zero():
    with pytest.raises(ValueError):
        transport(LevelWeight((3, 2, 1)))  # degree 1


@pytest.mark.parametrize("n,m", [(3, 4), (2, 5), (4, 3)])
def test_transport_involution(n, m):
    for a in enumerate_graded(n, m, 0):
        image = transport(a)
        assert image.degree() == 0
        assert transport(image) == a
        assert qdim_weight(image) == qdim_weight(a)


@pytest.mark.parametrize("n,m", [(2, 3), (3, 2), (2, 4)])
def test_equivalence_on_fusion_coefficients(n, m):
    verdict = verify_equivalence_fusion(n, m)
    assert verdict, verdict
    assert verdict.checked == len(enumerate_graded(n, m, 0)) ** 3


def test_mirror_transport_golden():
    out = mirror_transport([LevelWeight.vacuum(2, 10), LevelWeight((4, 6))])
    assert out == [LevelWeight.vacuum(10, 2),
                   LevelWeight((0, 0, 0, 1, 0, 0, 0, 1, 0, 0))]
    conditions = etale_necessary_conditions(out)
    assert all(conditions.values()), conditions


def test_mirror_transport_trivial():
    assert mirror_transport([LevelWeight.vacuum(3, 2)]) == [LevelWeight.vacuum(2, 3)]


def test_mirror_left_factors_of_vacuum_table_transport_to_mirror_table():
    for (n, m) in ((2, 3), (3, 2), (2, 4), (4, 2), (3, 4)):
        lefts = list(branch(n, m, 0).left_weights())
        transported = mirror_transport(lefts)
        assert sorted(w.components for w in transported) == sorted(
            w.components for w in branch(m, n, 0).left_weights()
        )


def test_mirror_transport_validation():
    with pytest.raises(ValueError):
        mirror_transport([])
    with pytest.raises(ValueError):
        mirror_transport([LevelWeight((1, 1, 1))])  # no vacuum
    with pytest.raises(ValueError):
        mirror_transport([LevelWeight.vacuum(2, 10), LevelWeight((9, 1))])  # degree 1
    with pytest.raises(ValueError):
        mirror_transport([LevelWeight.vacuum(2, 2), LevelWeight.vacuum(2, 2)])


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_trace_form(n, m):
    verdict = verify_trace_form(n, m)
    assert verdict, verdict
    # two blocks of (n^2-1)^2 resp. (m^2-1)^2 pairs plus the cross terms
    expected = (n * n - 1) ** 2 + (m * m - 1) ** 2 + (n * n - 1) * (m * m - 1)
    assert verdict.checked == expected


def test_trace_form_validation():
    with pytest.raises(ValueError):
        verify_trace_form(1, 3)


def test_invertible_pair_classes():
    """The vacuum pairs with the height-n column class, and the width-m row
    class pairs with the vacuum, in the classes n and m respectively."""
    from levelrank.weights import from_partition

    for (n, m) in ((2, 3), (3, 2), (3, 4), (4, 3)):
        sigma_n = from_partition(Partition((n,)), m, n)
        assert (LevelWeight.vacuum(n, m), sigma_n) in branch(n, m, n)
        sigma_m = from_partition(Partition((m,)), n, m)
        assert (sigma_m, LevelWeight.vacuum(m, n)) in branch(n, m, m)
