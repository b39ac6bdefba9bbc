"""Exact arithmetic in Z[h_1..h_n] / (h_1^d_1, ..., h_n^d_n).

Elements are dense coefficient tables over the exponent box
``0 <= a_i < d_i``, flattened in mixed radix with ``h_1`` varying fastest,
so the flat order is the colexicographic order on exponent vectors.
Coefficients are Python ints.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import prod
from typing import Sequence

import numpy as np


class ShapeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class RingShape:
    bounds: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bounds", tuple(int(b) for b in self.bounds))
        if any(b < 1 for b in self.bounds):
            raise ValueError(f"truncation bounds must be positive, got {self.bounds}")

    @property
    def nvars(self) -> int:
        return len(self.bounds)

    @cached_property
    def size(self) -> int:
        return prod(self.bounds)

    @cached_property
    def strides(self) -> tuple[int, ...]:
        out, s = [], 1
        for b in self.bounds:
            out.append(s)
            s *= b
        return tuple(out)

    @cached_property
    def exponent_table(self) -> np.ndarray:
        """``(size, nvars)`` array; row ``k`` is the exponent vector of flat index ``k``."""
        idx = np.arange(self.size, dtype=np.int64)
        cols = [(idx // s) % b for s, b in zip(self.strides, self.bounds)]
        if not cols:
            return np.zeros((self.size, 0), dtype=np.int64)
        return np.stack(cols, axis=1)

    @cached_property
    def _room(self) -> np.ndarray:
        return np.asarray(self.bounds, dtype=np.int64) - 1

    def index(self, a: Sequence[int]) -> int:
        if len(a) != self.nvars:
            raise ValueError(f"exponent vector {tuple(a)} has wrong length for {self.nvars} variables")
        for ai, b in zip(a, self.bounds):
            if not 0 <= ai < b:
                raise ValueError(f"exponent vector {tuple(a)} out of bounds {self.bounds}")
        return sum(ai * s for ai, s in zip(a, self.strides))

    def exponents(self, k: int) -> tuple[int, ...]:
        return tuple((k // s) % b for s, b in zip(self.strides, self.bounds))

    @property
    def top(self) -> tuple[int, ...]:
        return tuple(b - 1 for b in self.bounds)


class TruncPoly:
    """Immutable element of the truncated polynomial ring of a :class:`RingShape`."""

    __slots__ = ("shape", "coeffs")

    def __init__(self, shape: RingShape, coeffs: Sequence[int]):
        if len(coeffs) != shape.size:
            raise ValueError(f"expected {shape.size} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncPoly is immutable")

    # construction helpers

    @classmethod
    def from_terms(cls, shape: RingShape, terms: dict) -> "TruncPoly":
        """Build from ``{exponent_vector: coeff}``; out-of-box monomials are dropped."""
        out = [0] * shape.size
        for a, c in terms.items():
            if all(0 <= ai < b for ai, b in zip(a, shape.bounds)):
                out[shape.index(a)] += c
        return cls(shape, out)

    def support(self) -> list[int]:
        return [k for k, c in enumerate(self.coeffs) if c]

    def terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Nonzero ``(exponent_vector, coeff)`` pairs in colexicographic order."""
        return [(self.shape.exponents(k), c) for k, c in enumerate(self.coeffs) if c]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # ring operations

    def _check(self, other: "TruncPoly"):
        if not isinstance(other, TruncPoly):
            return NotImplemented
        if other.shape != self.shape:
            raise ShapeMismatch(f"shapes differ: {self.shape.bounds} vs {other.shape.bounds}")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return TruncPoly(self.shape, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return TruncPoly(self.shape, [-a for a in self.coeffs])

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return TruncPoly(self.shape, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncPoly(self.shape, [other * a for a in self.coeffs])
        if self._check(other) is NotImplemented:
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        return power(self, k)

    def __eq__(self, other):
        if not isinstance(other, TruncPoly):
            return NotImplemented
        return self.shape == other.shape and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.shape, self.coeffs))

    def __repr__(self):
        return f"TruncPoly({self.shape.bounds}, {render(self)!r})"

    def __str__(self):
        return render(self)


def zero(shape: RingShape) -> TruncPoly:
    return TruncPoly(shape, [0] * shape.size)


def one(shape: RingShape) -> TruncPoly:
    c = [0] * shape.size
    c[0] = 1
    return TruncPoly(shape, c)


def variable(shape: RingShape, i: int) -> TruncPoly:
    """``h_i`` (1-based); zero when ``d_i = 1``."""
    if not 1 <= i <= shape.nvars:
        raise IndexError(f"variable index {i} out of range [1..{shape.nvars}]")
    c = [0] * shape.size
    if shape.bounds[i - 1] >= 2:
        c[shape.strides[i - 1]] = 1
    return TruncPoly(shape, c)


def linear_form(shape: RingShape, weights: Sequence[int]) -> TruncPoly:
    """``sum_i weights[i-1] * h_i``."""
    if len(weights) != shape.nvars:
        raise ValueError(f"need {shape.nvars} weights, got {len(weights)}")
    c = [0] * shape.size
    for w, s, b in zip(weights, shape.strides, shape.bounds):
        if b >= 2:
            c[s] += int(w)
    return TruncPoly(shape, c)


def add(p: TruncPoly, q: TruncPoly) -> TruncPoly:
    return p + q


def mul(p: TruncPoly, q: TruncPoly) -> TruncPoly:
    if p.shape != q.shape:
        raise ShapeMismatch(f"shapes differ: {p.shape.bounds} vs {q.shape.bounds}")
    shape = p.shape
    a_nz, b_nz = p.support(), q.support()
    if len(a_nz) > len(b_nz):
        p, q, a_nz, b_nz = q, p, b_nz, a_nz
    out = [0] * shape.size
    if not a_nz or not b_nz:
        return TruncPoly(shape, out)
    table = shape.exponent_table
    b_idx = np.asarray(b_nz, dtype=np.int64)
    b_exp = table[b_idx]
    b_coef = [q.coeffs[j] for j in b_nz]
    room = shape._room
    for i in a_nz:
        ca = p.coeffs[i]
        # a + b stays inside the box, so flat indices add without carries
        fits = np.flatnonzero((b_exp <= room - table[i]).all(axis=1))
        for k in fits.tolist():
            out[i + b_nz[k]] += ca * b_coef[k]
    return TruncPoly(shape, out)


def power(p: TruncPoly, k: int) -> TruncPoly:
    if k < 0:
        raise ValueError("exponent must be non-negative")
    result = one(p.shape)
    base = p
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def coefficient(p: TruncPoly, a: Sequence[int]) -> int:
    return p.coeffs[p.shape.index(a)]


def top_coefficient(p: TruncPoly) -> int:
    return p.coeffs[-1]


def render(p: TruncPoly) -> str:
    """Canonical text: ``c*h1^a1*...`` terms in colex order, zero exponents omitted."""
    parts = []
    for a, c in p.terms():
        factors = [f"h{i}" if e == 1 else f"h{i}^{e}" for i, e in enumerate(a, start=1) if e]
        parts.append("*".join([str(c)] + factors))
    if not parts:
        return "0"
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out
