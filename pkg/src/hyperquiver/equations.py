"""Concrete representations and the polynomial systems that cut out their singular vectors.

For every edge ``e`` and every row pair ``a < b`` the emitted polynomial is the
2x2 minor ``f_a * x_{t,b} - f_b * x_{t,a}`` of the matrix ``[T_e(x_s) | x_t]``,
so the singular values never appear as unknowns.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .model import EdgePartition, Hyperquiver, as_dims, validate_hyperquiver, validate_partition
from .prng import SplitMix64

DEFAULT_RANGE = 10


@dataclass
class TensorAssignment:
    """One integer tensor per partition class, modes ``(target, s_1, ..., s_mu)``
    of the class representative."""

    hyperquiver: Hyperquiver
    partition: EdgePartition
    dims: tuple[int, ...]
    tensors: dict[int, np.ndarray]
    seed: Optional[int] = None
    range: Optional[int] = None
    # splitmix64 state after the tensors were drawn; patch coefficients continue from here
    stream_state: Optional[int] = None

    def __post_init__(self):
        self.dims = tuple(as_dims(self.dims))
        for cls in self.partition.classes():
            rep = self.hyperquiver.edges[self.partition.representative[cls]]
            want = tuple(self.dims[v - 1] for v in rep.modes)
            got = self.tensors[cls].shape
            if got != want:
                raise ValueError(f"class {cls}: tensor shape {got} != expected {want}")


def class_shape(H: Hyperquiver, P: EdgePartition, d, cls: int) -> tuple[int, ...]:
    rep = H.edges[P.representative[cls]]
    dims = as_dims(d)
    return tuple(dims.of(v) for v in rep.modes)


def random_assignment(
    H: Hyperquiver, P: EdgePartition, d, seed: int, R: int = DEFAULT_RANGE
) -> TensorAssignment:
    """Draw every class tensor from one splitmix64 stream, class ids in order, entries row-major."""
    if R < 1:
        raise ValueError("range R must be positive")
    dims = as_dims(d)
    validate_hyperquiver(H, dims)
    validate_partition(H, P)
    rng = SplitMix64(seed)
    tensors = {}
    for cls in P.classes():
        shape = class_shape(H, P, dims, cls)
        size = int(np.prod(shape)) if shape else 1
        flat = [rng.integer(R) for _ in range(size)]
        tensors[cls] = np.array(flat, dtype=object).reshape(shape)
    return TensorAssignment(H, P, tuple(dims), tensors, seed=seed, range=R, stream_state=rng.state)


def edge_tensor(A: TensorAssignment, k: int) -> np.ndarray:
    """Tensor on edge ``k`` (0-based): mode ``j`` reads class mode ``perm[j]``."""
    cls = A.partition.class_of[k]
    perm = A.partition.perm_of[k]
    T = A.tensors[cls]
    if len(perm) != T.ndim:
        raise ValueError(f"edge {k + 1}: perm of length {len(perm)} for an order-{T.ndim} tensor")
    out = np.transpose(T, [p - 1 for p in perm])
    e = A.hyperquiver.edges[k]
    want = tuple(A.dims[v - 1] for v in e.modes)
    if out.shape != want:
        raise ValueError(f"edge {k + 1}: permuted tensor has shape {out.shape}, edge needs {want}")
    return out


# Polynomials are dicts from a sorted tuple of variable indices (a monomial as
# a multiset) to an integer coefficient.


def _add_term(poly, mono, c):
    if c:
        poly[mono] += c


def _clean(poly) -> dict:
    return {m: c for m, c in poly.items() if c}


@dataclass
class PolynomialSystem:
    dims: tuple[int, ...]
    polynomials: list[dict]
    comments: list[str] = field(default_factory=list)
    # (edge index, a, b) for each minor, None for patch equations
    origins: list = field(default_factory=list)

    @property
    def offsets(self) -> list[int]:
        out, s = [], 0
        for d in self.dims:
            out.append(s)
            s += d
        return out

    @property
    def nvars(self) -> int:
        return sum(self.dims)

    @property
    def variables(self) -> list[str]:
        return [f"x{i}_{j}" for i, d in enumerate(self.dims, start=1) for j in range(1, d + 1)]

    def exponent_vector(self, mono) -> tuple[int, ...]:
        v = [0] * self.nvars
        for x in mono:
            v[x] += 1
        return tuple(v)

    def block_degrees(self, poly: dict) -> set:
        """Set of per-vertex degree tuples over the terms of ``poly``."""
        out = set()
        for mono in poly:
            deg = [0] * len(self.dims)
            for x in mono:
                deg[self._block_of(x)] += 1
            out.add(tuple(deg))
        return out

    def _block_of(self, x: int) -> int:
        for i, off in enumerate(self.offsets):
            if off <= x < off + self.dims[i]:
                return i
        raise IndexError(x)

    def evaluate(self, k: int, point: Sequence[complex]) -> complex:
        total = 0j
        for mono, c in self.polynomials[k].items():
            t = complex(c)
            for x in mono:
                t *= point[x]
            total += t
        return total

    def render_poly(self, poly: dict) -> str:
        names = self.variables
        terms = sorted(poly.items(), key=lambda mc: self.exponent_vector(mc[0])[::-1])
        if not terms:
            return "0"
        out = []
        for mono, c in terms:
            factors = []
            for x in sorted(set(mono)):
                k = mono.count(x)
                factors.append(names[x] if k == 1 else f"{names[x]}^{k}")
            sign = "-" if c < 0 else "+"
            out.append(sign + "*".join([str(abs(c))] + factors))
        return " ".join(out)

    def to_text(self) -> str:
        lines = [f"# {c}" if c else "#" for c in self.comments]
        lines.append("vars " + " ".join(self.variables))
        lines.extend(self.render_poly(p) for p in self.polynomials)
        return "\n".join(lines) + "\n"


def _contract(T: np.ndarray, sources: Sequence[int], offsets: Sequence[int]) -> list[dict]:
    """Coordinates of ``T(., x_{s_1}, ..., x_{s_mu})`` as polynomials."""
    out = []
    src_shape = T.shape[1:]
    for a in range(T.shape[0]):
        f = defaultdict(int)
        for idx in np.ndindex(*src_shape):
            c = int(T[(a,) + idx])
            if c:
                mono = tuple(sorted(offsets[s - 1] + i for s, i in zip(sources, idx)))
                f[mono] += c
        out.append(f)
    return out


def emit_system(
    H: Hyperquiver,
    P: EdgePartition,
    d,
    A: TensorAssignment,
    patch: bool = False,
    patch_seed: Optional[int] = None,
) -> PolynomialSystem:
    dims = tuple(as_dims(d))
    validate_hyperquiver(H, dims)
    validate_partition(H, P)
    system = PolynomialSystem(dims, [], _header(H, P, dims, A, patch))
    offsets = system.offsets

    for k, e in enumerate(H.edges):
        T = edge_tensor(A, k)
        f = _contract(T, e.sources, offsets)
        t_off = offsets[e.target - 1]
        dt = dims[e.target - 1]
        for a in range(dt):
            for b in range(a + 1, dt):
                poly = defaultdict(int)
                for mono, c in f[a].items():
                    _add_term(poly, tuple(sorted(mono + (t_off + b,))), c)
                for mono, c in f[b].items():
                    _add_term(poly, tuple(sorted(mono + (t_off + a,))), -c)
                system.polynomials.append(_clean(poly))
                system.origins.append((k, a, b))

    if patch:
        if A.stream_state is not None:
            rng = SplitMix64(0)
            rng.state = A.stream_state
        elif patch_seed is not None:
            rng = SplitMix64(patch_seed)
        else:
            raise ValueError("patch equations need a seeded assignment or patch_seed")
        R = A.range or DEFAULT_RANGE
        for i, di in enumerate(dims):
            poly = defaultdict(int)
            for j in range(di):
                _add_term(poly, (offsets[i] + j,), rng.integer(R))
            poly[()] = -1
            system.polynomials.append(_clean(poly))
            system.origins.append(None)
    return system


def _header(H, P, dims, A, patch) -> list[str]:
    lines = [
        "singular vector system: 2x2 minors of [T_e(x_s) | x_t] for each edge",
        f"vertices: {' '.join(map(str, dims))}",
    ]
    for k, e in enumerate(H.edges):
        lines.append(
            f"edge: target={e.target} sources={','.join(map(str, e.sources))} "
            f"class={P.class_of[k]} perm={','.join(map(str, P.perm_of[k]))}"
        )
    lines.append(f"seed: {A.seed if A.seed is not None else 'none'}")
    lines.append(f"range: {A.range if A.range is not None else 'none'}")
    lines.append(f"patch: {'true' if patch else 'false'}")
    for cls in sorted(A.tensors):
        T = A.tensors[cls]
        lines.append(f"class {cls} tensor shape {'x'.join(map(str, T.shape))} (modes target, sources)")
        for idx in np.ndindex(*T.shape):
            lines.append(f"T{cls}[{','.join(str(i + 1) for i in idx)}] = {int(T[idx])}")
    return lines
