import random
from fractions import Fraction

import mpmath
import pytest

from levelrank.cyclotomic import (
    CyclotomicNumber,
    conductor_for,
    cyclotomic_polynomial,
    euler_phi,
    qint,
    qint_real,
)


def test_cyclotomic_polynomials_small():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert cyclotomic_polynomial(10) == (1, -1, 1, -1, 1)


def test_euler_phi_degrees():
    assert euler_phi(16) == 8
    assert euler_phi(18) == 6
    assert euler_phi(20) == 8
    assert euler_phi(22) == 10


def test_power_relation():
    # zeta_N has multiplicative order exactly N
    for N in (8, 12, 18):
        z = CyclotomicNumber.zeta(N)
        assert z ** N == 1
        assert all(z ** k != 1 for k in range(1, N))


def test_random_inverses():
    """Field axiom x * x^-1 = 1 on random nonzero elements, conductors <= 24."""
    rng = random.Random(20240817)
    for N in (4, 6, 8, 10, 12, 16, 18, 20, 22, 24):
        for _ in range(10):
            coeffs = [rng.randint(-5, 5) for _ in range(euler_phi(N))]
            if not any(coeffs):
                coeffs[0] = 1
            x = CyclotomicNumber(N, coeffs, rng.randint(1, 7))
            assert x * x.inverse() == 1


def test_zero_division():
    z = CyclotomicNumber.zero(12)
    with pytest.raises(ZeroDivisionError):
        z.inverse()
    with pytest.raises(ZeroDivisionError):
        CyclotomicNumber.one(12) / z


def test_conductor_mismatch_rejected():
    with pytest.raises(ValueError):
        CyclotomicNumber.one(8) + CyclotomicNumber.one(12)
    with pytest.raises(ValueError):
        CyclotomicNumber.one(8) * CyclotomicNumber.one(10)


def test_rational_coercion():
    x = CyclotomicNumber.from_rational(10, Fraction(3, 4))
    assert x + 1 == CyclotomicNumber.from_rational(10, Fraction(7, 4))
    assert (2 * x).as_rational() == Fraction(3, 2)


def test_qint_basics():
    for (n, m) in ((2, 3), (4, 4), (3, 7)):
        assert qint(1, n, m) == 1
        assert qint(0, n, m).is_zero()


def test_qint_defining_relation():
    # (zeta - zeta^-1) [i] = zeta^i - zeta^-i
    for (n, m) in ((2, 2), (3, 4)):
        N = conductor_for(n, m)
        z = CyclotomicNumber.zeta(N)
        zinv = CyclotomicNumber.zeta(N, -1)
        for i in range(0, N + 3):
            lhs = (z - zinv) * qint(i, n, m)
            rhs = CyclotomicNumber.zeta(N, i) - CyclotomicNumber.zeta(N, -i)
            assert lhs == rhs


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 3), (4, 5), (5, 6), (6, 6)])
def test_qint_mirror_symmetry(n, m):
    for i in range(0, n + m + 1):
        assert qint(i, n, m) == qint(n + m - i, n, m)


def test_qint_periodicity_and_oddness():
    for (n, m) in ((2, 3), (3, 4)):
        for i in range(-4, 9):
            assert qint(i + 2 * (n + m), n, m) == qint(i, n, m)
            assert qint(-i, n, m) == -qint(i, n, m)


def test_qint_product_to_sum():
    # [2]^2 = [1] + [3] whenever n+m = 5
    assert qint(2, 2, 3) * qint(2, 2, 3) == qint(1, 2, 3) + qint(3, 2, 3)


def test_embed_sqrt_two():
    value = qint(2, 2, 2).embed_real(20)
    assert abs(value - mpmath.mpf(2) ** mpmath.mpf("0.5")) < mpmath.mpf(10) ** -15


def test_embed_matches_sines():
    with mpmath.workdps(40):
        for (n, m) in ((2, 3), (4, 4), (3, 5)):
            for i in range(1, n + m):
                exact = qint(i, n, m).embed_real(35)
                trig = qint_real(i, n, m)
                assert abs(exact - trig) < mpmath.mpf(10) ** -30
                assert exact > 0


def test_embed_real_rejects_non_real():
    z = CyclotomicNumber.zeta(12)
    assert not z.is_real()
    with pytest.raises(ValueError):
        z.embed_real()
    assert (z + z.conjugate()).is_real()


def test_embed_one_exact():
    for (n, m) in ((2, 2), (5, 3)):
        assert qint(1, n, m).embed_real(15) == 1


def test_conjugation_is_involution():
    rng = random.Random(7)
    for N in (8, 18, 20):
        coeffs = [rng.randint(-3, 3) for _ in range(euler_phi(N))]
        x = CyclotomicNumber(N, coeffs, 3)
        assert x.conjugate().conjugate() == x


def test_json_serialization_round_trip():
    from math import gcd

    x = CyclotomicNumber(12, (1, -2, 0, 3), 6)
    data = x.to_json()
    assert data["conductor"] == 12
    assert data["coefficients"] == ["1/6", "-1/3", "0", "1/2"]
    fracs = [Fraction(c) for c in data["coefficients"]]
    den = 1
    for q in fracs:
        den = den * q.denominator // gcd(den, q.denominator)
    rebuilt = CyclotomicNumber(data["conductor"], [int(q * den) for q in fracs], den)
    assert rebuilt == x


def test_concurrent_cache_fills():
    """Quantum-integer and polynomial caches accept concurrent first writers."""
    from concurrent.futures import ThreadPoolExecutor

    import levelrank.cyclotomic as cyc

    cyc._phi_cache.clear()
    cyc._qint_cache.clear()
    with ThreadPoolExecutor(max_workers=8) as pool:
        values = list(pool.map(lambda i: qint(i % 9, 4, 5), range(64)))
    for i, v in enumerate(values):
        assert v == qint(i % 9, 4, 5)
