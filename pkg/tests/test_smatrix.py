from fractions import Fraction

import mpmath
import pytest

from levelrank.qdim import qdim_weight
from levelrank.smatrix import (
    PrecisionError,
    SMatrixData,
    category_central_charge,
    central_charge,
    conformal_weight,
    s_matrix,
    twist_pairing_check,
)
from levelrank.weights import LevelWeight, enumerate_weights


def matmul(A, B):
    size = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(size)) for j in range(size)]
            for i in range(size)]


def test_smatrix_rank2_level1_golden():
    data = s_matrix(2, 1)
    with mpmath.workprec(128):
        r = 1 / mpmath.sqrt(2)
        expect = [[r, r], [r, -r]]
        for i in range(2):
            for j in range(2):
                assert abs(data.entries[i][j] - expect[i][j]) < mpmath.mpf(10) ** -30


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (2, 4), (4, 4)])
def test_unitarity(n, m):
    data = s_matrix(n, m)
    assert data.unitarity_residual() < 1e-10


def test_symmetry():
    data = s_matrix(3, 2)
    size = len(data.weights)
    with mpmath.workprec(128):
        for i in range(size):
            for j in range(size):
                assert abs(data.entries[i][j] - data.entries[j][i]) < 1e-30


def test_vacuum_row_gives_dimensions():
    data = s_matrix(2, 10)
    with mpmath.workprec(160):
        for idx, w in enumerate(data.weights):
            ratio = data.entries[0][idx] / data.entries[0][0]
            assert abs(ratio.real - qdim_weight(w).embed_real(40)) < mpmath.mpf(10) ** -10
            assert abs(ratio.imag) < mpmath.mpf(10) ** -20


@pytest.mark.parametrize("n,m", [(2, 3), (3, 2), (3, 3)])
def test_s_squared_is_charge_conjugation(n, m):
    data = s_matrix(n, m)
    size = len(data.weights)
    with mpmath.workprec(128):
        S2 = matmul(data.entries, data.entries)
        for i, a in enumerate(data.weights):
            for j, b in enumerate(data.weights):
                want = 1 if b == a.dual() else 0
                assert abs(S2[i][j] - want) < 1e-25


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_modular_relation(n, m):
    """(S T)^3 = S^2 once T carries the exp(-2 pi i c/24) prefactor."""
    data = s_matrix(n, m)
    size = len(data.weights)
    with mpmath.workprec(128):
        c = data.central_charge
        T = []
        for w in data.weights:
            t = conformal_weight(w) - c / 24
            T.append(mpmath.expjpi(2 * mpmath.mpf(t.numerator) / t.denominator))
        ST = [[data.entries[i][j] * T[j] for j in range(size)] for i in range(size)]
        lhs = matmul(matmul(ST, ST), ST)
        rhs = matmul(data.entries, data.entries)
        worst = max(abs(lhs[i][j] - rhs[i][j]) for i in range(size) for j in range(size))
        assert worst < 1e-20


@pytest.mark.parametrize("n,m", [(3, 3), (4, 2)])
def test_simple_current_row_symmetry(n, m):
    data = s_matrix(n, m)
    idx = {w: i for i, w in enumerate(data.weights)}
    with mpmath.workprec(128):
        for a in data.weights:
            for b in data.weights:
                lhs = abs(data.entries[idx[a.rotate(1)]][idx[b]])
                rhs = abs(data.entries[idx[a]][idx[b]])
                assert abs(lhs - rhs) < 1e-25


def test_determinant_path_matches_permutation_path():
    # rank 6 exercises the determinant evaluation; level 1 keeps it small
    data = s_matrix(6, 1)
    assert data.unitarity_residual() < 1e-10
    with mpmath.workprec(128):
        for idx in range(6):
            ratio = data.entries[0][idx] / data.entries[0][0]
            assert abs(ratio - 1) < 1e-25  # all level-1 objects are invertible


def test_precision_validation():
    with pytest.raises(ValueError):
        s_matrix(2, 2, precision_bits=16)


def test_central_charge_equality_level_one():
    for n in range(2, 51):
        for m in range(2, 51):
            ambient, pair = central_charge(n, m, 1)
            assert ambient == pair == n * m - 1


def test_central_charge_level_two_differs():
    ambient, pair = central_charge(2, 2, 2)
    assert ambient == 5
    assert pair == 4


def test_central_charge_validation():
    with pytest.raises(ValueError):
        central_charge(0, 2, 1)


def test_category_central_charge():
    assert category_central_charge(2, 2) == Fraction(3, 2)
    assert category_central_charge(4, 1) == Fraction(3)
    for n, m in ((2, 5), (3, 4)):
        assert category_central_charge(n * m, 1) == n * m - 1


def test_conformal_weight_goldens():
    assert conformal_weight(LevelWeight((0, 0, 0, 1, 0, 0, 0, 1, 0, 0))) == 2
    assert conformal_weight(LevelWeight.vacuum(5, 3)) == 0
    for N in range(2, 13):
        for i in range(N):
            h = conformal_weight(LevelWeight.fundamental(N, i))
            assert h == Fraction(i * (N - i), 2 * N)


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 2), (3, 3), (4, 3), (3, 4), (4, 4), (2, 4), (4, 2)])
def test_twist_pairing_exact(n, m):
    assert twist_pairing_check(n, m)


def test_json_payload():
    data = s_matrix(2, 2)
    payload = data.to_json()
    assert payload["weights"] == [[2, 0], [1, 1], [0, 2]]
    assert payload["central_charge"] == "3/2"
    assert len(payload["entries"]) == 3
