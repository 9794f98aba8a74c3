"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are polynomials in zeta_N reduced modulo the N-th cyclotomic
polynomial, stored as an integer coefficient vector over a common positive
denominator. The reduced form is unique, so equality is coefficient equality
and no numerics are ever needed to decide identities.

The field houses the quantum integers for a rank/level pair (n, m): with
N = 2(n + m) and zeta = zeta_N (so zeta plays the role of e^{i pi/(n+m)}),

    qint(i) = (zeta^i - zeta^{-i}) / (zeta - zeta^{-1})
            = sin(pi i/(n+m)) / sin(pi/(n+m))  under the real embedding.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import gcd
from typing import Iterable

import mpmath

# The mpmath working precision is a process-global setting, so every
# floating-point evaluation in the package serializes on this lock; the
# exact arithmetic never needs it.
MPMATH_LOCK = threading.RLock()

# first-writer-wins cache of cyclotomic polynomials, safe for concurrent fills
_phi_cache: dict[int, tuple[int, ...]] = {}


def _poly_trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    """Quotient of integer polynomials known to divide exactly (den monic)."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert not any(num), "division was not exact"
    return q


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending, monic."""
    poly = _phi_cache.get(n)
    if poly is not None:
        return poly
    if n == 1:
        computed = (-1, 1)
    else:
        # (x^n - 1) / product of all lower cyclotomic polynomials at divisors
        acc = [-1] + [0] * (n - 1) + [1]
        for d in range(1, n):
            if n % d == 0:
                acc = _poly_div_exact(acc, list(cyclotomic_polynomial(d)))
        computed = tuple(acc)
    return _phi_cache.setdefault(n, computed)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce_mod_phi(coeffs: list[int], n: int) -> list[int]:
    """Reduce an integer coefficient vector modulo the n-th cyclotomic
    polynomial, folding exponents mod n first (zeta^n = 1)."""
    folded = [0] * n
    for e, c in enumerate(coeffs):
        if c:
            folded[e % n] += c
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    for i in range(n - 1, deg - 1, -1):
        c = folded[i]
        if c:
            folded[i] = 0
            for j in range(deg):
                folded[i - deg + j] -= c * phi[j]
    return folded[:deg]


class CyclotomicNumber:
    """An element of Q(zeta_N) in reduced canonical form."""

    __slots__ = ("_conductor", "_num", "_den")

    def __init__(self, conductor: int, num: Iterable[int], den: int = 1):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        deg = euler_phi(conductor)
        num = list(num)
        if len(num) > deg:
            num = _reduce_mod_phi(num, conductor)
        num += [0] * (deg - len(num))
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den, num = -den, [-c for c in num]
        g = den
        for c in num:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            den //= g
            num = [c // g for c in num]
        self._conductor = conductor
        self._num = tuple(num)
        self._den = den

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, conductor: int) -> "CyclotomicNumber":
        return cls(conductor, ())

    @classmethod
    def one(cls, conductor: int) -> "CyclotomicNumber":
        return cls(conductor, (1,))

    @classmethod
    def from_rational(cls, conductor: int, value) -> "CyclotomicNumber":
        q = Fraction(value)
        return cls(conductor, (q.numerator,), q.denominator)

    @classmethod
    def zeta(cls, conductor: int, power: int = 1) -> "CyclotomicNumber":
        coeffs = [0] * conductor
        coeffs[power % conductor] = 1
        return cls(conductor, coeffs)

    # -- attributes --------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._conductor

    def coefficients(self) -> tuple[Fraction, ...]:
        """Coefficients of 1, zeta, zeta^2, ... as exact rationals."""
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._num[0], self._den)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "CyclotomicNumber") -> None:
        if self._conductor != other._conductor:
            raise ValueError(
                f"conductor mismatch: {self._conductor} vs {other._conductor}"
            )

    def __add__(self, other) -> "CyclotomicNumber":
        other = self._coerce(other)
        self._check(other)
        d1, d2 = self._den, other._den
        num = [a * d2 + b * d1 for a, b in zip(self._num, other._num)]
        return CyclotomicNumber(self._conductor, num, d1 * d2)

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber(self._conductor, [-c for c in self._num], self._den)

    def __sub__(self, other) -> "CyclotomicNumber":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "CyclotomicNumber":
        other = self._coerce(other)
        self._check(other)
        a, b = self._num, other._num
        prod = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        num = _reduce_mod_phi(prod, self._conductor)
        return CyclotomicNumber(self._conductor, num, self._den * other._den)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other) -> "CyclotomicNumber":
        return self._coerce(other) - self

    def inverse(self) -> "CyclotomicNumber":
        """Multiplicative inverse, via the extended Euclidean algorithm
        against the cyclotomic polynomial."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        n = self._conductor
        phi = [Fraction(c) for c in cyclotomic_polynomial(n)]
        f = [Fraction(c, self._den) for c in self._num]
        while f and f[-1] == 0:
            f.pop()
        # invariants: r0 = s0*f mod phi, r1 = s1*f mod phi
        r0, r1 = phi, f
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_poly_sub(s0, _frac_poly_mul(q, s1))
        if not r1 or r1[0] == 0:
            raise ZeroDivisionError("element is not invertible")
        c = r1[0]
        inv = [s / c for s in s1]
        den = 1
        for q in inv:
            den = den * q.denominator // gcd(den, q.denominator)
        return CyclotomicNumber(n, [int(q * den) for q in inv], den)

    def __truediv__(self, other) -> "CyclotomicNumber":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "CyclotomicNumber":
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "CyclotomicNumber":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CyclotomicNumber.one(self._conductor)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def _coerce(self, other) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(self._conductor, other)
        raise TypeError(f"cannot combine CyclotomicNumber with {type(other)!r}")

    # -- Galois / embedding ------------------------------------------------

    def conjugate(self) -> "CyclotomicNumber":
        """Image under zeta -> zeta^{-1} (complex conjugation)."""
        n = self._conductor
        coeffs = [0] * n
        for e, c in enumerate(self._num):
            coeffs[(n - e) % n] += c
        return CyclotomicNumber(n, _reduce_mod_phi(coeffs, n), self._den)

    def is_real(self) -> bool:
        """True when fixed by complex conjugation."""
        return self == self.conjugate()

    def embed(self, digits: int = 30):
        """Numeric value under zeta -> exp(2 pi i/N): an mpmath real when the
        element is fixed by conjugation, an mpmath complex otherwise.

        Computed with guard digits, so the result is accurate to roughly the
        requested number of decimal digits.
        """
        with MPMATH_LOCK, mpmath.workdps(digits + 10):
            n = self._conductor
            total = mpmath.mpc(0)
            for e, c in enumerate(self._num):
                if c:
                    total += c * mpmath.expjpi(mpmath.mpf(2 * e) / n)
            total = total / self._den
            if self.is_real():
                return total.real
        return total

    def embed_real(self, digits: int = 30):
        """Real embedding; rejects elements not fixed by conjugation."""
        if not self.is_real():
            raise ValueError("element is not fixed by conjugation")
        return self.embed(digits)

    # -- misc ----------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "conductor": self._conductor,
            "coefficients": [str(Fraction(c, self._den)) for c in self._num],
        }

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.from_rational(self._conductor, other)
        return (
            isinstance(other, CyclotomicNumber)
            and self._conductor == other._conductor
            and self._den == other._den
            and self._num == other._num
        )

    def __hash__(self) -> int:
        return hash((self._conductor, self._den, self._num))

    def __repr__(self) -> str:
        terms = []
        for e, c in enumerate(self._num):
            if c:
                q = Fraction(c, self._den)
                terms.append(f"{q}*z^{e}" if e else f"{q}")
        body = " + ".join(terms) if terms else "0"
        return f"Cyclotomic({self._conductor}; {body})"


def _frac_poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / lead
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _frac_poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _frac_poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


# -- quantum integers --------------------------------------------------------

_qint_cache: dict[tuple[int, int], CyclotomicNumber] = {}


def conductor_for(n: int, m: int) -> int:
    """Conductor 2(n+m) of the field housing the (n, m) quantum integers."""
    return 2 * (n + m)


def qint(i: int, n: int, m: int) -> CyclotomicNumber:
    """The quantum integer (zeta^i - zeta^{-i})/(zeta - zeta^{-1}) for the
    rank/level pair (n, m), with zeta a primitive 2(n+m)-th root of unity.

    Expanded as the geometric sum zeta^{i-1} + zeta^{i-3} + ... + zeta^{1-i},
    which avoids any division. Periodic in i with period 2(n+m), and odd:
    qint(-i) = -qint(i).
    """
    if n + m < 2:
        raise ValueError("n + m must be at least 2")
    N = conductor_for(n, m)
    i = i % N
    key = (N, i)
    cached = _qint_cache.get(key)
    if cached is not None:
        return cached
    coeffs = [0] * N
    for j in range(i):
        coeffs[(i - 1 - 2 * j) % N] += 1
    value = CyclotomicNumber(N, coeffs)
    return _qint_cache.setdefault(key, value)


def qint_real(i: int, n: int, m: int):
    """Floating-point quantum integer sin(pi i/(n+m))/sin(pi/(n+m)) at the
    current mpmath working precision."""
    k = n + m
    return mpmath.sinpi(mpmath.mpf(i) / k) / mpmath.sinpi(mpmath.mpf(1) / k)
