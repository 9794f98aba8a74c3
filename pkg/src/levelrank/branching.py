"""Branching tables for the conformal inclusion of rank n at level m times
rank m at level n inside rank n*m at level 1, and the consequences that can
be checked exactly: dimension exhaustion, the degree-zero equivalence on
fusion coefficients, transport of algebra objects, and the trace-form
identity of the underlying matrix embedding.

The i-th level-1 object restricts to a multiplicity-free sum of pairs
(a, tau_i(a)) over the weights a of degree i; the table is computed directly
from that description, while the verification routines re-derive its
numerical consequences through independent paths (hook-content products, the
alcove-folded fusion, exact matrix arithmetic).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CyclotomicNumber, conductor_for
from .fusion import fuse
from .partitions import Partition
from .qdim import graded_dim, qdim_weight
from .weights import LevelWeight, enumerate_graded, tau


@dataclass(frozen=True)
class BranchingTable:
    """Multiplicity-free decomposition of one level-1 simple object."""

    n: int
    m: int
    i: int
    pairs: tuple[tuple[LevelWeight, LevelWeight], ...]

    def partition_pairs(self) -> tuple[tuple[Partition, Partition], ...]:
        return tuple((a.to_partition(), b.to_partition()) for a, b in self.pairs)

    def left_weights(self) -> tuple[LevelWeight, ...]:
        return tuple(a for a, _ in self.pairs)

    def right_weights(self) -> tuple[LevelWeight, ...]:
        return tuple(b for _, b in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair: tuple[LevelWeight, LevelWeight]) -> bool:
        return pair in self.pairs

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "i": self.i,
            "summands": [
                {
                    "left": list(a.components),
                    "right": list(b.components),
                    "left_partition": list(a.to_partition().parts),
                    "right_partition": list(b.to_partition().parts),
                }
                for a, b in self.pairs
            ],
        }


def branch(n: int, m: int, i: int) -> BranchingTable:
    """The full decomposition of the i-th level-1 object, one pair
    (a, tau_i(a)) per weight a of degree i, in canonical order on a."""
    if n < 2 or m < 2:
        raise ValueError("need rank and level at least 2")
    i = i % (n * m)
    pairs = tuple((a, tau(a, i)) for a in enumerate_graded(n, m, i))
    return BranchingTable(n=n, m=m, i=i, pairs=pairs)


def etale_vacuum_algebra(n: int, m: int) -> BranchingTable:
    """The degree-zero table: the object underlying the vacuum restriction,
    which carries the algebra structure."""
    return branch(n, m, 0)


@dataclass
class ExhaustionVerdict:
    """Exact comparison of the paired dimension sum against the graded total."""

    n: int
    m: int
    i: int
    paired_sum: CyclotomicNumber
    graded_total: CyclotomicNumber

    @property
    def holds(self) -> bool:
        return self.paired_sum == self.graded_total

    def __bool__(self) -> bool:
        return self.holds

    def difference(self) -> CyclotomicNumber:
        return self.paired_sum - self.graded_total

    def __repr__(self) -> str:
        status = "exact" if self.holds else f"off by {self.difference()!r}"
        return f"ExhaustionVerdict(n={self.n}, m={self.m}, i={self.i}: {status})"


def verify_exhaustion(n: int, m: int, i: int) -> ExhaustionVerdict:
    """Check, with exact cyclotomic arithmetic, that the summands of the
    branching table exhaust the graded dimension:

        sum over a of degree i of qdim(a) * qdim(tau_i(a)) = graded total.

    The left factor is computed in the rank-n category and the right factor
    in the rank-m category; both live in the conductor-2(n+m) field.
    """
    table = branch(n, m, i)
    total = CyclotomicNumber.zero(conductor_for(n, m))
    for a, b in table.pairs:
        total = total + qdim_weight(a) * qdim_weight(b)
    return ExhaustionVerdict(
        n=n, m=m, i=i, paired_sum=total, graded_total=graded_dim(n, m, i)
    )


# -- the degree-zero equivalence ------------------------------------------------


def transport(a: LevelWeight) -> LevelWeight:
    """Image of a degree-zero object under the rank/level swap: the dual of
    its duality image."""
    if a.degree() != 0:
        raise ValueError(f"{a} has degree {a.degree()}, transport needs degree 0")
    return tau(a, 0).dual()


@dataclass
class EquivalenceVerdict:
    n: int
    m: int
    checked: int
    failure: tuple | None  # (a, b, c, lhs, rhs) when set

    def __bool__(self) -> bool:
        return self.failure is None

    def __repr__(self) -> str:
        status = f"{self.checked} triples agree" if self else f"fails at {self.failure}"
        return f"EquivalenceVerdict(n={self.n}, m={self.m}: {status})"


def verify_equivalence_fusion(n: int, m: int) -> EquivalenceVerdict:
    """Fusion coefficients of degree-zero triples must match across the
    rank/level swap composed with duals: N_{a b}^c = N_{T(a) T(b)}^{T(c)}."""
    degree_zero = enumerate_graded(n, m, 0)
    images = {a: transport(a) for a in degree_zero}
    checked = 0
    for a in degree_zero:
        for b in degree_zero:
            dec = fuse(a, b)
            dec_t = fuse(images[a], images[b])
            for c in degree_zero:
                lhs = dec.multiplicity(c)
                rhs = dec_t.multiplicity(images[c])
                checked += 1
                if lhs != rhs:
                    return EquivalenceVerdict(n, m, checked, (a, b, c, lhs, rhs))
    return EquivalenceVerdict(n, m, checked, None)


def mirror_transport(summands: list[LevelWeight]) -> list[LevelWeight]:
    """Transport the object underlying a connected algebra, summand by
    summand. The input must be degree zero throughout and contain the vacuum
    exactly once."""
    if not summands:
        raise ValueError("empty summand list")
    n, m = summands[0].rank, summands[0].level
    vacuum_count = sum(1 for a in summands if a.is_vacuum())
    if vacuum_count != 1:
        raise ValueError(f"the vacuum must appear exactly once, found {vacuum_count}")
    for a in summands:
        if (a.rank, a.level) != (n, m):
            raise ValueError("summands must share rank and level")
        if a.degree() != 0:
            raise ValueError(f"{a} has nonzero degree {a.degree()}")
    return [transport(a) for a in summands]


def etale_necessary_conditions(summands: list[LevelWeight]) -> dict[str, bool]:
    """Necessary (not sufficient) conditions for a degree-zero object to
    underlie a connected commutative algebra: the vacuum once, closure under
    duals, and integral conformal weights (trivial twists)."""
    wset = set(summands)
    from .smatrix import conformal_weight

    return {
        "vacuum_once": sum(1 for a in summands if a.is_vacuum()) == 1,
        "degree_zero": all(a.degree() == 0 for a in summands),
        "dual_closed": all(a.dual() in wset for a in summands),
        "twists_trivial": all(conformal_weight(a).denominator == 1 for a in summands),
    }


# -- trace form -----------------------------------------------------------------


@dataclass
class TraceFormVerdict:
    n: int
    m: int
    checked: int
    failure: tuple | None

    def __bool__(self) -> bool:
        return self.failure is None

    def __repr__(self) -> str:
        status = f"{self.checked} pairings verified" if self else f"fails at {self.failure}"
        return f"TraceFormVerdict(n={self.n}, m={self.m}: {status})"


def _matmul(A, B):
    size = len(A)
    k = len(B[0])
    return [
        [sum(A[i][t] * B[t][j] for t in range(len(B))) for j in range(k)]
        for i in range(size)
    ]


def _trace(A) -> Fraction:
    return sum((A[i][i] for i in range(len(A))), Fraction(0))


def _kron(A, B):
    ra, ca = len(A), len(A[0])
    rb, cb = len(B), len(B[0])
    out = [[Fraction(0)] * (ca * cb) for _ in range(ra * rb)]
    for i in range(ra):
        for j in range(ca):
            if A[i][j]:
                for k in range(rb):
                    for l in range(cb):
                        out[i * rb + k][j * cb + l] = A[i][j] * B[k][l]
    return out


def _identity(n):
    return [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]


def _sl_basis(n) -> list:
    """Elementary off-diagonal matrices plus consecutive diagonal differences:
    a spanning set of the traceless n x n matrices."""
    basis = []
    for i in range(n):
        for j in range(n):
            if i != j:
                mat = [[Fraction(0)] * n for _ in range(n)]
                mat[i][j] = Fraction(1)
                basis.append(mat)
    for i in range(n - 1):
        mat = [[Fraction(0)] * n for _ in range(n)]
        mat[i][i] = Fraction(1)
        mat[i + 1][i + 1] = Fraction(-1)
        basis.append(mat)
    return basis


def _embed_left(X, n, m):
    return _kron(X, _identity(m))


def _embed_right(Y, n, m):
    return _kron(_identity(n), Y)


def verify_trace_form(n: int, m: int) -> TraceFormVerdict:
    """On the embedding (X, Y) -> X kron I + I kron Y of traceless blocks
    into the n*m by n*m matrices, the big trace form restricts to m times the
    small form on the first block, n times on the second, with vanishing
    cross terms. Checked over full spanning sets in exact rationals."""
    if n < 2 or m < 2:
        raise ValueError("need n, m at least 2")
    left = _sl_basis(n)
    right = _sl_basis(m)
    checked = 0
    for X in left:
        iX = _embed_left(X, n, m)
        for Xp in left:
            lhs = _trace(_matmul(iX, _embed_left(Xp, n, m)))
            rhs = m * _trace(_matmul(X, Xp))
            checked += 1
            if lhs != rhs:
                return TraceFormVerdict(n, m, checked, ("left", X, Xp, lhs, rhs))
    for Y in right:
        iY = _embed_right(Y, n, m)
        for Yp in right:
            lhs = _trace(_matmul(iY, _embed_right(Yp, n, m)))
            rhs = n * _trace(_matmul(Y, Yp))
            checked += 1
            if lhs != rhs:
                return TraceFormVerdict(n, m, checked, ("right", Y, Yp, lhs, rhs))
    for X in left:
        iX = _embed_left(X, n, m)
        for Y in right:
            lhs = _trace(_matmul(iX, _embed_right(Y, n, m)))
            checked += 1
            if lhs != 0:
                return TraceFormVerdict(n, m, checked, ("cross", X, Y, lhs, 0))
    return TraceFormVerdict(n, m, checked, None)
