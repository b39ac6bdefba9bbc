"""Named hyperquiver families and closed-form counts for them.

Each ``*_count`` function is an independent closed form. The tests check
each one against :func:`hyperquiver.degree.analyze` applied to the matching
:func:`build` output.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Sequence

from .degree import analyze
from .model import (
    DimensionVector,
    EdgePartition,
    Hyperedge,
    Hyperquiver,
    singleton_partition,
)

KINDS = ("jordan", "fo", "kronecker", "cycle", "star", "homology")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        _check_params(self.kind, self.params)


@dataclass(frozen=True)
class FamilyInstance:
    hyperquiver: Hyperquiver
    dims: DimensionVector
    partition: EdgePartition
    # False when the canonical tensors on this family violate the genericity
    # partition (cycle: one tensor reused on edges with unrelated tuples)
    generic: bool = True

    def __iter__(self):
        return iter((self.hyperquiver, self.dims, self.partition))


def _check_params(kind, p):
    def need(cond, msg):
        if not cond:
            raise ValueError(f"{kind}{p}: {msg}")

    if kind == "jordan":
        need(len(p) == 2, "expects (m, d)")
        need(p[0] >= 2 and p[1] >= 1, "needs m >= 2, d >= 1")
    elif kind == "kronecker":
        need(len(p) == 3, "expects (m, d1, d2)")
        need(p[0] >= 2 and min(p[1:]) >= 1, "needs m >= 2, dims >= 1")
    elif kind == "cycle":
        need(len(p) == 3, "expects (n, m, d)")
        need(p[0] >= 1 and p[1] >= 2 and p[2] >= 1, "needs n >= 1, m >= 2, d >= 1")
    elif kind == "homology":
        need(len(p) == 2, "expects (k, d)")
        need(min(p) >= 1, "needs k, d >= 1")
    elif kind == "fo":
        need(len(p) >= 2 and min(p) >= 1, "needs n >= 2 dims, all >= 1")
    elif kind == "star":
        need(len(p) >= 2 and min(p) >= 1, "needs n >= 2 dims, all >= 1")
    else:
        raise ValueError(f"unknown family kind {kind!r}; expected one of {KINDS}")


def _match_perm(rep: Hyperedge, e: Hyperedge) -> tuple[int, ...]:
    # vertices of an FO edge are distinct, so the matching is unique
    where = {v: j for j, v in enumerate(rep.modes, start=1)}
    return tuple(where[v] for v in e.modes)


def build(spec: FamilySpec) -> FamilyInstance:
    kind, p = spec.kind, spec.params
    if kind == "jordan":
        m, d = p
        H = Hyperquiver(1, (Hyperedge((1,) * (m - 1), 1),))
        return FamilyInstance(H, DimensionVector((d,)), singleton_partition(H))
    if kind == "fo":
        n = len(p)
        edges = tuple(
            Hyperedge(tuple(j for j in range(1, n + 1) if j != i), i) for i in range(1, n + 1)
        )
        H = Hyperquiver(n, edges)
        P = EdgePartition((1,) * n, tuple(_match_perm(edges[0], e) for e in edges))
        return FamilyInstance(H, DimensionVector(p), P)
    if kind == "kronecker":
        m, d1, d2 = p
        e = Hyperedge((1,) * (m - 1), 2)
        H = Hyperquiver(2, (e, e))
        return FamilyInstance(H, DimensionVector((d1, d2)), singleton_partition(H))
    if kind == "cycle":
        n, m, d = p
        H = Hyperquiver(n, tuple(Hyperedge((i,) * (m - 1), i % n + 1) for i in range(1, n + 1)))
        return FamilyInstance(H, DimensionVector((d,) * n), singleton_partition(H), generic=n == 1)
    if kind == "star":
        n = len(p)
        H = Hyperquiver(n, (Hyperedge(tuple(range(1, n)), n),))
        return FamilyInstance(H, DimensionVector(p), singleton_partition(H))
    if kind == "homology":
        k, d = p
        H = Hyperquiver(2, (Hyperedge((1, 2), 1),))
        return FamilyInstance(H, DimensionVector((k, d)), singleton_partition(H))
    raise AssertionError(kind)


def multinomial(n: int, ks: Sequence[int]) -> int:
    """``n! / prod(k!)``; zero if any part is negative."""
    if any(k < 0 for k in ks):
        return 0
    if sum(ks) != n:
        raise ValueError(f"parts {tuple(ks)} do not sum to {n}")
    out = factorial(n)
    for k in ks:
        out //= factorial(k)
    return out


def binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def compositions(total: int, parts: int):
    """All tuples of ``parts`` non-negative ints summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def eigen_count(m: int, d: int) -> int:
    """Eigenvectors of a generic order-m tensor on C^d."""
    if m < 2 or d < 1:
        raise ValueError("need m >= 2, d >= 1")
    if m == 2:
        return d
    return ((m - 1) ** d - 1) // (m - 2)


def kronecker_count(m: int, d: int) -> int:
    if m < 2 or d < 1:
        raise ValueError("need m >= 2, d >= 1")
    return d * (m - 1) ** (d - 1)


def periodic_count(n: int, m: int, d: int) -> int:
    if m == 2:
        raise ValueError("periodic_count needs m >= 3 (denominator vanishes at m = 2)")
    if n < 1 or m < 3 or d < 1:
        raise ValueError("need n >= 1, m >= 3, d >= 1")
    q = (m - 1) ** n
    num, den = q**d - 1, q - 1
    assert num % den == 0
    return num // den


def single_edge_degree(dims: Sequence[int]) -> int:
    """Degree for one hyperedge ``(1, ..., n-1) -> n`` with all vertices distinct."""
    dims = tuple(int(x) for x in dims)
    n = len(dims)
    if n < 2:
        raise ValueError("need at least two vertices")
    dn = dims[-1]
    N = sum(dims[:-1]) - n + 1
    total = 0
    for k in range(1, dn + 1):
        for ks in compositions(dn - k, n - 1):
            lower = [di - 1 - ki for di, ki in zip(dims[:-1], ks)] + [dn - k]
            if any(x < 0 for x in lower):
                continue
            total += multinomial(dn - k, ks) * multinomial(N, lower)
    return total


def homology_count(k: int, d: int) -> int:
    """Fixed homology classes: ``sum_j sum_i C(k-j, i) C(d-1, k-j-i)``."""
    if k < 1 or d < 1:
        raise ValueError("need k, d >= 1")
    return sum(
        binom(k - j, i) * binom(d - 1, k - j - i)
        for j in range(1, k + 1)
        for i in range(0, k - j + 1)
    )


def fo_count(dims: Sequence[int]) -> int:
    """Singular vector tuples of a generic tensor of format ``d_1 x ... x d_n``."""
    dims = tuple(dims)
    if len(dims) == 1:
        # an order-1 tensor is a vector; its one singular direction is itself
        return 1
    inst = build(FamilySpec("fo", dims))
    res = analyze(inst.hyperquiver, inst.dims)
    assert not res.empty and res.dimension == 0
    return res.degree
