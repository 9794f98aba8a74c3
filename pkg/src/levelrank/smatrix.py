"""Modular S-matrix, central charges, and conformal weights.

Weights are embedded in orthogonal coordinates as their partition plus the
staircase (n-1, ..., 1, 0), with the inner product of two coordinate vectors
taken after subtracting the mean (this matches the trace-form normalization
in which roots have squared length 2). The unnormalized matrix is

    M_ab = sum over permutations w of sign(w) exp(-2 pi i <w(y_a), y_b> / (n+m))

which is proportional to the unitary S-matrix; the scalar is fixed by making
rows unit norm and the vacuum-vacuum entry real positive. For ranks above 5
the permutation sum is evaluated as a determinant instead.

Central charges and conformal weights are exact rationals; only the matrix
itself is floating point, at a configurable binary precision.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

import mpmath

from .cyclotomic import MPMATH_LOCK
from .weights import LevelWeight, enumerate_weights


class PrecisionError(ArithmeticError):
    """Raised when the requested precision cannot certify unitarity."""


def central_charge(n: int, m: int, k: int = 1) -> tuple[Fraction, Fraction]:
    """Virasoro central charges at level k: the ambient algebra of rank n*m,
    and the embedded rank-n level-mk plus rank-m level-nk pair. Both exact."""
    if n < 1 or m < 1 or k < 1:
        raise ValueError("arguments must be positive")
    ambient = Fraction((n * n * m * m - 1) * k, n * m + k)
    pair = Fraction((n * n - 1) * m * k, n + m * k) + Fraction((m * m - 1) * n * k, m + n * k)
    return ambient, pair


def category_central_charge(n: int, m: int) -> Fraction:
    """Central charge (n^2 - 1) m / (n + m) of rank n at level m, exact."""
    return Fraction((n * n - 1) * m, n + m)


def _mean_free_inner(u: tuple[int, ...], v: tuple[int, ...]) -> Fraction:
    n = len(u)
    return Fraction(sum(a * b for a, b in zip(u, v))) - Fraction(sum(u) * sum(v), n)


def _coordinates(a: LevelWeight) -> tuple[int, ...]:
    n = a.rank
    lam = a.to_partition().padded(n)
    return tuple(lam[i] + (n - 1 - i) for i in range(n))


def conformal_weight(a: LevelWeight) -> Fraction:
    """Sugawara conformal weight (lam, lam + 2 rho) / (2 (n + m)), exact."""
    n, m = a.rank, a.level
    lam = a.to_partition().padded(n)
    rho = tuple(n - 1 - i for i in range(n))
    value = _mean_free_inner(lam, lam) + 2 * _mean_free_inner(lam, rho)
    return value / (2 * (n + m))


@dataclass
class SMatrixData:
    """S-matrix with its index order, exact central charge and twists."""

    n: int
    m: int
    weights: tuple[LevelWeight, ...]
    entries: list  # list of rows of mpmath mpc
    precision_bits: int
    central_charge: Fraction
    conformal_weights: dict = field(repr=False, default_factory=dict)

    def index(self, a: LevelWeight) -> int:
        return self.weights.index(a)

    def unitarity_residual(self):
        """max |(S S^dagger - I)_{ab}| at the stored precision."""
        size = len(self.weights)
        S = self.entries
        with MPMATH_LOCK, mpmath.workprec(self.precision_bits):
            worst = mpmath.mpf(0)
            for i in range(size):
                for j in range(size):
                    acc = mpmath.mpc(0)
                    for k in range(size):
                        acc += S[i][k] * mpmath.conj(S[j][k])
                    if i == j:
                        acc -= 1
                    worst = max(worst, abs(acc))
        return worst

    def to_json(self) -> dict:
        with MPMATH_LOCK, mpmath.workprec(self.precision_bits):
            rows = [
                [[mpmath.nstr(z.real, 17), mpmath.nstr(z.imag, 17)] for z in row]
                for row in self.entries
            ]
        return {
            "n": self.n,
            "m": self.m,
            "precision_bits": self.precision_bits,
            "weights": [list(w.components) for w in self.weights],
            "entries": rows,
            "central_charge": str(self.central_charge),
            "conformal_weights": {
                str(list(w.components)): str(h) for w, h in self.conformal_weights.items()
            },
        }


def s_matrix(n: int, m: int, precision_bits: int = 128) -> SMatrixData:
    """The modular S-matrix for rank n at level m."""
    if n < 2 or m < 1:
        raise ValueError("need rank >= 2 and level >= 1")
    if precision_bits < 32:
        raise ValueError("precision must be at least 32 bits")
    weights = enumerate_weights(n, m)
    coords = [_coordinates(a) for a in weights]
    kappa = n + m
    size = len(weights)
    with MPMATH_LOCK, mpmath.workprec(precision_bits + 32):
        raw = [[_kp_entry(coords[i], coords[j], kappa, n) for j in range(size)]
               for i in range(size)]
        # normalize: unit row norm, vacuum-vacuum entry real positive
        norm = mpmath.sqrt(sum(abs(z) ** 2 for z in raw[0]))
        phase = raw[0][0] / abs(raw[0][0])
        scale = norm * phase
        entries = [[z / scale for z in row] for row in raw]
    data = SMatrixData(
        n=n,
        m=m,
        weights=weights,
        entries=entries,
        precision_bits=precision_bits,
        central_charge=category_central_charge(n, m),
        conformal_weights={a: conformal_weight(a) for a in weights},
    )
    residual = data.unitarity_residual()
    if residual > mpmath.mpf(2) ** (-(precision_bits // 2)):
        raise PrecisionError(
            f"unitarity residual {residual} too large for {precision_bits} bits"
        )
    return data


def _kp_entry(ya: tuple[int, ...], yb: tuple[int, ...], kappa: int, n: int):
    correction = Fraction(sum(ya) * sum(yb), n)
    if n <= 5:
        total = mpmath.mpc(0)
        for perm in permutations(range(n)):
            sign = _perm_sign(perm)
            ip = sum(ya[perm[i]] * yb[i] for i in range(n)) - correction
            total += sign * mpmath.expjpi(mpmath.mpf(-2) * _frac_to_mpf(ip) / kappa)
        return total
    # determinant form of the alternating sum
    mat = mpmath.matrix(n, n)
    for i in range(n):
        for j in range(n):
            mat[i, j] = mpmath.expjpi(mpmath.mpf(-2 * ya[i] * yb[j]) / kappa)
    det = mpmath.det(mat)
    return det * mpmath.expjpi(mpmath.mpf(2) * _frac_to_mpf(correction) / kappa)


def _frac_to_mpf(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# -- exact twist identities ----------------------------------------------------


class TwistVerdict:
    """Exact check that paired conformal weights add to the level-1 value."""

    def __init__(self, n: int, m: int, failures: list):
        self.n = n
        self.m = m
        self.failures = failures

    def __bool__(self) -> bool:
        return not self.failures

    def __repr__(self) -> str:
        status = "holds" if self else f"{len(self.failures)} failures"
        return f"TwistVerdict(n={self.n}, m={self.m}: {status})"


def twist_pairing_check(n: int, m: int) -> TwistVerdict:
    """For every class i and weight a of degree i, the conformal weights of a
    and of its duality image must sum to i(nm - i)/(2nm) modulo 1, the
    conformal weight of the i-th level-1 object. Checked with exact
    rationals."""
    from .weights import enumerate_graded, tau

    failures = []
    for i in range(n * m):
        target = Fraction(i * (n * m - i), 2 * n * m)
        for a in enumerate_graded(n, m, i):
            total = conformal_weight(a) + conformal_weight(tau(a, i))
            if (total - target).denominator != 1:
                failures.append((i, a, total, target))
    return TwistVerdict(n, m, failures)
