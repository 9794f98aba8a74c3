"""Frobenius-Perron dimensions of simple objects and of whole categories.

The dimension of the simple object labelled by a partition lam inside an
m x n rectangle is the hook-content product

    prod over cells T of lam of  [n + content(T)] / [hook(T)]

with quantum integers taken for the pair (n, m). Category and graded totals
are sums of squared dimensions. Everything is exact by default; a floating
backend evaluates the same products as sine ratios at the current mpmath
precision.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import mpmath

from .cyclotomic import CyclotomicNumber, conductor_for, qint, qint_real
from .partitions import Partition
from .weights import LevelWeight, enumerate_graded, enumerate_weights

_qdim_cache: dict[tuple[tuple[int, ...], int, int], CyclotomicNumber] = {}


def hook_content_factors(lam: Partition, n: int) -> tuple[list[int], list[int]]:
    """Numerator and denominator quantum-integer indices of the hook-content
    product, one entry per cell."""
    nums, dens = [], []
    for i, j in lam.cells():
        nums.append(n + lam.content(i, j))
        dens.append(lam.hook_length(i, j))
    return nums, dens


def qdim_partition(lam: Partition, n: int, m: int, backend: str = "exact"):
    """Quantum dimension of the simple object labelled by ``lam``."""
    if not lam.fits_in(n, m):
        raise ValueError(f"{lam!r} does not fit in a {m} x {n} rectangle")
    if backend == "float":
        return _qdim_float(lam, n, m)
    if backend != "exact":
        raise ValueError(f"unknown backend {backend!r}")
    key = (lam.parts, n, m)
    cached = _qdim_cache.get(key)
    if cached is not None:
        return cached
    nums, dens = hook_content_factors(lam, n)
    num = CyclotomicNumber.one(conductor_for(n, m))
    for k in nums:
        num = num * qint(k, n, m)
    den = CyclotomicNumber.one(conductor_for(n, m))
    for k in dens:
        den = den * qint(k, n, m)
    value = num / den
    return _qdim_cache.setdefault(key, value)


def _qdim_float(lam: Partition, n: int, m: int):
    from .cyclotomic import MPMATH_LOCK

    with MPMATH_LOCK:
        value = mpmath.mpf(1)
        for i, j in lam.cells():
            value *= qint_real(n + lam.content(i, j), n, m)
            value /= qint_real(lam.hook_length(i, j), n, m)
    return value


def qdim_weight(a: LevelWeight, backend: str = "exact"):
    """Quantum dimension of a weight, via its partition.

    The dimension is constant along rotation orbits, so any partition
    preimage of the weight gives the same value; tests assert this.
    """
    return qdim_partition(a.to_partition(), a.rank, a.level, backend=backend)


def graded_dim(n: int, m: int, i: int, backend: str = "exact"):
    """Sum of squared dimensions over the weights of degree i mod n."""
    if backend == "float":
        return sum(qdim_weight(a, "float") ** 2 for a in enumerate_graded(n, m, i))
    total = CyclotomicNumber.zero(conductor_for(n, m))
    for a in enumerate_graded(n, m, i):
        d = qdim_weight(a)
        total = total + d * d
    return total


def category_dim(n: int, m: int, backend: str = "exact"):
    """Sum of squared dimensions over all rank-n level-m weights."""
    if backend == "float":
        return sum(qdim_weight(a, "float") ** 2 for a in enumerate_weights(n, m))
    total = CyclotomicNumber.zero(conductor_for(n, m))
    for a in enumerate_weights(n, m):
        d = qdim_weight(a)
        total = total + d * d
    return total


@dataclass
class DimensionReport:
    """Per-object dimensions plus category and graded totals."""

    n: int
    m: int
    dims: dict[LevelWeight, CyclotomicNumber]
    total: CyclotomicNumber
    graded: dict[int, CyclotomicNumber]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "objects": [
                {
                    "weight": list(a.components),
                    "dimension": d.to_json(),
                    "value": mpmath.nstr(d.embed_real(20), 15),
                }
                for a, d in self.dims.items()
            ],
            "total": self.total.to_json(),
            "graded": {str(i): g.to_json() for i, g in self.graded.items()},
        }


def dimension_report(n: int, m: int) -> DimensionReport:
    dims = {a: qdim_weight(a) for a in enumerate_weights(n, m)}
    total = CyclotomicNumber.zero(conductor_for(n, m))
    for d in dims.values():
        total = total + d * d
    graded = {i: graded_dim(n, m, i) for i in range(n)}
    return DimensionReport(n=n, m=m, dims=dims, total=total, graded=graded)


def qdim_product_string(lam: Partition, n: int) -> str:
    """The hook-content product with matching factors cancelled, e.g.
    ``[7][5]^2``. Only literally equal indices are cancelled, so the string
    shows the same indices a hand computation would keep."""
    nums, dens = hook_content_factors(lam, n)
    num_count = Counter(nums)
    den_count = Counter(dens)
    common = num_count & den_count
    num_count -= common
    den_count -= common
    den_count.pop(1, None)  # [1] = 1

    def fmt(counter: Counter) -> str:
        pieces = []
        for idx in sorted(counter, reverse=True):
            e = counter[idx]
            pieces.append(f"[{idx}]" + (f"^{e}" if e > 1 else ""))
        return "".join(pieces)

    if not num_count and not den_count:
        return "1"
    top = fmt(num_count) or "1"
    if den_count:
        return f"{top}/{fmt(den_count)}"
    return top
