"""Hyperquivers, dimension vectors and edge partitions.

Vertices are numbered ``1..n``. A hyperedge has an ordered tuple of sources
and one target; repeated sources and self-targets are allowed.

Every tensor attached to an edge is stored with its modes ordered
``(target, s_1, ..., s_mu)``, and permutations inside an :class:`EdgePartition`
are written in that same mode order: ``perm[j-1]`` is the mode of the class
tensor read by mode ``j`` of the edge. Mode 1 is always the target, so the
genericity condition asks that ``perm[0]`` differs across a class.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence


class HyperquiverError(ValueError):
    """Raised when a hyperquiver, dimension vector or partition is malformed."""


@dataclass(frozen=True)
class DimensionVector:
    dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(x) for x in self.dims))
        if len(self.dims) < 1:
            raise HyperquiverError("dimension vector must have at least one entry")
        for i, x in enumerate(self.dims, start=1):
            if x < 1:
                raise HyperquiverError(f"dimension d{i} = {x} must be >= 1")

    def __len__(self) -> int:
        return len(self.dims)

    def __iter__(self) -> Iterator[int]:
        return iter(self.dims)

    def __getitem__(self, i):
        return self.dims[i]

    def of(self, vertex: int) -> int:
        """Dimension at a 1-based vertex id."""
        return self.dims[vertex - 1]


def as_dims(d) -> DimensionVector:
    return d if isinstance(d, DimensionVector) else DimensionVector(tuple(d))


@dataclass(frozen=True)
class Hyperedge:
    sources: tuple[int, ...]
    target: int

    def __post_init__(self):
        object.__setattr__(self, "sources", tuple(int(s) for s in self.sources))
        object.__setattr__(self, "target", int(self.target))

    @property
    def index(self) -> int:
        """Number of sources (mu)."""
        return len(self.sources)

    @property
    def order(self) -> int:
        """Tensor order m = mu + 1."""
        return len(self.sources) + 1

    @property
    def modes(self) -> tuple[int, ...]:
        """Vertex attached to each tensor mode: ``(target, s_1, ..., s_mu)``."""
        return (self.target,) + self.sources

    @property
    def vertices(self) -> tuple[int, ...]:
        """The tuple v(e) = (s_1, ..., s_mu, target)."""
        return self.sources + (self.target,)


@dataclass(frozen=True)
class Hyperquiver:
    n: int
    edges: tuple[Hyperedge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))

    @classmethod
    def from_pairs(cls, n: int, pairs: Sequence[tuple[Sequence[int], int]]) -> "Hyperquiver":
        """Build from ``[(sources, target), ...]``."""
        return cls(n, tuple(Hyperedge(tuple(s), t) for s, t in pairs))

    def incoming(self, vertex: int) -> list[int]:
        return [k for k, e in enumerate(self.edges) if e.target == vertex]

    def relabel(self, mapping: Sequence[int]) -> "Hyperquiver":
        """Rename vertex ``v`` to ``mapping[v-1]`` (a permutation of 1..n)."""
        return Hyperquiver(
            self.n,
            tuple(
                Hyperedge(tuple(mapping[s - 1] for s in e.sources), mapping[e.target - 1])
                for e in self.edges
            ),
        )


def validate_hyperquiver(H: Hyperquiver, d) -> None:
    """Raise :class:`HyperquiverError` unless ``(H, d)`` is well formed."""
    if H.n < 1:
        raise HyperquiverError(f"vertex count must be >= 1, got {H.n}")
    dims = tuple(d.dims if isinstance(d, DimensionVector) else d)
    if len(dims) != H.n:
        raise HyperquiverError(
            f"dimension vector has length {len(dims)} but hyperquiver has {H.n} vertices"
        )
    for i, x in enumerate(dims, start=1):
        if int(x) < 1:
            raise HyperquiverError(f"dimension d{i} = {x} must be >= 1")
    for k, e in enumerate(H.edges, start=1):
        if e.index < 1:
            raise HyperquiverError(f"edge {k}: index mu must be >= 1 (no sources given)")
        for v in e.vertices:
            if not 1 <= v <= H.n:
                raise HyperquiverError(f"edge {k}: vertex id {v} out of range [1..{H.n}]")


@dataclass(frozen=True)
class EdgePartition:
    """Grouping of edges that share one tensor up to a mode permutation.

    ``class_of[k]`` is the class id (``1..M``) of edge ``k`` (0-based edge
    position); ``perm_of[k]`` is that edge's permutation in mode order. The
    representative of a class is its first edge in declaration order.
    """

    class_of: tuple[int, ...]
    perm_of: tuple[tuple[int, ...], ...]
    representative: dict = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "class_of", tuple(int(c) for c in self.class_of))
        object.__setattr__(self, "perm_of", tuple(tuple(int(x) for x in p) for p in self.perm_of))
        reps: dict[int, int] = {}
        for k, c in enumerate(self.class_of):
            reps.setdefault(c, k)
        object.__setattr__(self, "representative", reps)

    @property
    def num_classes(self) -> int:
        return len(self.representative)

    def members(self, cls: int) -> list[int]:
        return [k for k, c in enumerate(self.class_of) if c == cls]

    def classes(self) -> list[int]:
        return sorted(self.representative)


def singleton_partition(H: Hyperquiver) -> EdgePartition:
    return EdgePartition(
        tuple(range(1, len(H.edges) + 1)),
        tuple(tuple(range(1, e.order + 1)) for e in H.edges),
    )


def validate_partition(H: Hyperquiver, P: EdgePartition) -> None:
    """Raise :class:`HyperquiverError` unless ``P`` is a genericity partition of ``H``."""
    E = len(H.edges)
    if len(P.class_of) != E or len(P.perm_of) != E:
        raise HyperquiverError(
            f"partition describes {len(P.class_of)} edges but hyperquiver has {E}"
        )
    ids = set(P.class_of)
    if ids != set(range(1, len(ids) + 1)):
        raise HyperquiverError(f"class ids must be exactly 1..M, got {sorted(ids)}")

    for k, (e, perm) in enumerate(zip(H.edges, P.perm_of), start=1):
        if sorted(perm) != list(range(1, e.order + 1)):
            raise HyperquiverError(f"edge {k}: perm {list(perm)} is not a permutation of 1..{e.order}")

    for cls in P.classes():
        members = P.members(cls)
        rep = P.representative[cls]
        rep_edge = H.edges[rep]
        if P.perm_of[rep] != tuple(range(1, rep_edge.order + 1)):
            raise HyperquiverError(
                f"class {cls}: representative edge {rep + 1} must carry the identity permutation"
            )
        seen_target: dict[int, int] = {}
        for k in members:
            e = H.edges[k]
            if e.index != rep_edge.index:
                raise HyperquiverError(
                    f"class {cls}: edge {k + 1} has index {e.index}, "
                    f"representative edge {rep + 1} has index {rep_edge.index}"
                )
            perm = P.perm_of[k]
            for j, v in enumerate(e.modes):
                if rep_edge.modes[perm[j] - 1] != v:
                    raise HyperquiverError(
                        f"class {cls}: edge {k + 1} does not match representative edge "
                        f"{rep + 1} under perm {list(perm)} (mode {j + 1})"
                    )
            t = perm[0]
            if t in seen_target:
                raise HyperquiverError(
                    f"class {cls}: edges {seen_target[t] + 1} and {k + 1} share "
                    f"target position {t} (duplicate target position)"
                )
            seen_target[t] = k
