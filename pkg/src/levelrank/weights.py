"""Dominant affine weights of fixed rank and level, the degree grading, the
cyclic rotation, duals, and the transpose-plus-rotation bijection between
degree classes of dual rank/level pairs.

A weight of rank n and level m is a tuple (a_0, ..., a_{n-1}) of non-negative
integers summing to m. It corresponds to the partition
(a_1 + ... + a_{n-1}, a_2 + ... + a_{n-1}, ..., a_{n-1}), which fits in an
m x (n-1) box; conversely a partition lam inside an m x n box maps to the
weight (m - lam_1 + lam_n, lam_1 - lam_2, ..., lam_{n-1} - lam_n).
"""

from __future__ import annotations

from functools import cache
from math import comb

from .partitions import Partition


class LevelWeight:
    """Dominant affine weight: components (a_0, ..., a_{n-1}), sum = level.

    Rank 1 is rejected; the duality statements all assume rank at least 2.
    """

    __slots__ = ("_components",)

    def __init__(self, components: tuple[int, ...] | list[int]):
        comps = tuple(int(c) for c in components)
        if len(comps) < 2:
            raise ValueError("rank must be at least 2")
        if any(c < 0 for c in comps):
            raise ValueError(f"components must be non-negative, got {comps}")
        self._components = comps

    @property
    def components(self) -> tuple[int, ...]:
        return self._components

    @property
    def rank(self) -> int:
        return len(self._components)

    @property
    def level(self) -> int:
        return sum(self._components)

    @classmethod
    def vacuum(cls, n: int, m: int) -> "LevelWeight":
        """The weight (m, 0, ..., 0) of rank n; the unit object's label."""
        return cls((m,) + (0,) * (n - 1))

    @classmethod
    def fundamental(cls, n: int, i: int) -> "LevelWeight":
        """The level-1 weight of rank n with a single 1 in slot i (mod n)."""
        comps = [0] * n
        comps[i % n] = 1
        return cls(comps)

    def is_vacuum(self) -> bool:
        return all(c == 0 for c in self._components[1:])

    def to_partition(self) -> Partition:
        """Partial sums of the tail components; height at most rank - 1."""
        a = self._components
        parts = []
        acc = 0
        for c in reversed(a[1:]):
            acc += c
            parts.append(acc)
        return Partition(tuple(reversed(parts)))

    def degree(self) -> int:
        """Size of the associated partition modulo the rank."""
        return sum(i * c for i, c in enumerate(self._components)) % self.rank

    def rotate(self, power: int = 1) -> "LevelWeight":
        """Cyclic shift (a_0, ..., a_{n-1}) -> (a_{n-1}, a_0, ..., a_{n-2}),
        iterated ``power`` times (negative powers shift the other way)."""
        n = self.rank
        k = power % n
        a = self._components
        return LevelWeight(a[n - k:] + a[:n - k])

    def dual(self) -> "LevelWeight":
        """First component fixed, remaining components reversed."""
        a = self._components
        return LevelWeight((a[0],) + a[:0:-1])

    def __eq__(self, other) -> bool:
        return isinstance(other, LevelWeight) and self._components == other._components

    def __hash__(self) -> int:
        return hash(self._components)

    def __lt__(self, other: "LevelWeight") -> bool:
        # canonical order: reverse-lex on components, so the vacuum comes first
        return self._components > other._components

    def __repr__(self) -> str:
        return f"LevelWeight{self._components}"

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self._components) + "]"


def from_partition(lam: Partition, n: int, m: int) -> LevelWeight:
    """The rank-n level-m weight of a partition inside an m x n rectangle."""
    if not lam.fits_in(n, m):
        raise ValueError(f"{lam!r} does not fit in a {m} x {n} rectangle")
    p = lam.padded(n)
    comps = [m - p[0] + p[n - 1]]
    comps.extend(p[i] - p[i + 1] for i in range(n - 1))
    return LevelWeight(comps)


def to_partition(a: LevelWeight) -> Partition:
    return a.to_partition()


def degree(a: LevelWeight) -> int:
    return a.degree()


def rotate(a: LevelWeight, power: int = 1) -> LevelWeight:
    return a.rotate(power)


def dual(a: LevelWeight) -> LevelWeight:
    return a.dual()


def tau(a: LevelWeight, i: int) -> LevelWeight:
    """The duality image of ``a`` in the class of degree ``i``.

    For a of rank n and level m with degree(a) = i mod n, the result has
    rank m and level n and degree i mod m. It is
    rho_m ** ((i - |lam|)/n) applied to the weight of lam^t, where lam is the
    partition of ``a``; the exponent is an exact integer. The result depends
    on i only modulo n*m.
    """
    n, m = a.rank, a.level
    if m < 2:
        raise ValueError("tau needs level at least 2 (the target rank)")
    i = i % (n * m)
    lam = a.to_partition()
    if (i - lam.size) % n != 0:
        raise ValueError(
            f"degree mismatch: weight has degree {a.degree()} (mod {n}), got i={i}"
        )
    power = (i - lam.size) // n
    return from_partition(lam.transpose(), m, n).rotate(power)


def tau_from_partition(lam: Partition, n: int, m: int, i: int) -> LevelWeight:
    """Same duality image computed from any partition preimage of a weight."""
    if not lam.fits_in(n, m):
        raise ValueError(f"{lam!r} does not fit in a {m} x {n} rectangle")
    i = i % (n * m)
    if (i - lam.size) % n != 0:
        raise ValueError(f"|lam| = {lam.size} is not congruent to {i} mod {n}")
    power = (i - lam.size) // n
    return from_partition(lam.transpose(), m, n).rotate(power)


@cache
def enumerate_weights(n: int, m: int) -> tuple[LevelWeight, ...]:
    """All rank-n level-m weights in canonical order (vacuum first).

    The count is binomial(n + m - 1, n - 1).
    """
    if n < 2:
        raise ValueError("rank must be at least 2")
    if m < 0:
        raise ValueError("level must be non-negative")
    out: list[tuple[int, ...]] = []

    def compose(prefix: list[int], remaining: int, slots: int) -> None:
        if slots == 1:
            out.append(tuple(prefix) + (remaining,))
            return
        for c in range(remaining, -1, -1):
            prefix.append(c)
            compose(prefix, remaining - c, slots - 1)
            prefix.pop()

    compose([], m, n)
    out.sort(reverse=True)
    result = tuple(LevelWeight(t) for t in out)
    assert len(result) == comb(n + m - 1, n - 1)
    return result


@cache
def enumerate_graded(n: int, m: int, i: int) -> tuple[LevelWeight, ...]:
    """The weights of rank n, level m whose degree is i mod n."""
    return tuple(a for a in enumerate_weights(n, m) if a.degree() == i % n)


def parse_weight(text: str) -> LevelWeight:
    """Parse a weight literal such as ``[1,0,0,1,1,0]``."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    s = s.strip().rstrip(",")
    if not s:
        raise ValueError("empty weight literal")
    try:
        comps = [int(tok) for tok in s.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad weight literal {text!r}") from exc
    return LevelWeight(comps)
