"""Dimension and degree of the singular vector variety of a generic representation."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import factorial
from typing import Optional

from .chow import RingShape, TruncPoly, linear_form, mul, one, variable
from .model import Hyperedge, Hyperquiver, as_dims, validate_hyperquiver

GUARANTEES = ("multiplicity_one", "non_isotropic", "no_zero_singular_value")


class EmptyReason(str, Enum):
    DEGREE_ZERO = "degree_zero"
    NEGATIVE_EXPECTED_DIMENSION = "negative_expected_dimension"


@dataclass(frozen=True)
class AnalysisResult:
    empty: bool
    dimension: Optional[int] = None
    degree: Optional[int] = None
    finitely_many: bool = False
    reason: Optional[EmptyReason] = None
    guarantees: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.empty:
            assert self.dimension is None and self.degree is None and self.reason is not None
        else:
            assert self.dimension is not None and self.dimension >= 0
            assert self.degree is not None and self.degree > 0


def expected_dimension(H: Hyperquiver, d) -> int:
    dims = as_dims(d)
    return sum(x - 1 for x in dims) - sum(dims.of(e.target) - 1 for e in H.edges)


def ring_shape(d) -> RingShape:
    return RingShape(tuple(as_dims(d)))


def edge_factor(e: Hyperedge, d, shape: Optional[RingShape] = None) -> TruncPoly:
    """``sum_{k=1}^{d_t} h_t^{k-1} h_s^{d_t-k}`` with ``h_s`` the sum over sources."""
    dims = as_dims(d)
    shape = shape or ring_shape(dims)
    weights = [0] * len(dims)
    for s in e.sources:
        weights[s - 1] += 1
    hs = linear_form(shape, weights)
    ht = variable(shape, e.target)
    dt = dims.of(e.target)

    # powers of h_s from 0 to d_t - 1, then pair them off against h_t
    hs_pows = [one(shape)]
    for _ in range(dt - 1):
        hs_pows.append(mul(hs_pows[-1], hs))
    total = hs_pows[dt - 1]
    ht_pow = one(shape)
    for k in range(2, dt + 1):
        ht_pow = mul(ht_pow, ht)
        total = total + mul(ht_pow, hs_pows[dt - k])
    return total


def chern_top_class(H: Hyperquiver, d) -> TruncPoly:
    dims = as_dims(d)
    shape = ring_shape(dims)
    factors = [edge_factor(e, dims, shape) for e in H.edges]
    # sparse factors first keeps the running product small; the ring is commutative
    order = sorted(range(len(factors)), key=lambda k: (len(factors[k].support()), k))
    result = one(shape)
    for k in order:
        result = mul(result, factors[k])
        if result.is_zero():
            break
    return result


def extract_degree(F: TruncPoly, N: int) -> int:
    """Top coefficient of ``(h_1 + ... + h_n)^N * F``, by multinomial expansion."""
    if N < 0:
        raise ValueError("N must be non-negative")
    top = F.shape.top
    nfact = factorial(N)
    D = 0
    for a, c in F.terms():
        gaps = [t - ai for t, ai in zip(top, a)]
        if sum(gaps) != N:
            continue
        denom = 1
        for g in gaps:
            denom *= factorial(g)
        D += c * (nfact // denom)
    return D


def analyze(H: Hyperquiver, d) -> AnalysisResult:
    dims = as_dims(d)
    validate_hyperquiver(H, dims)
    N = expected_dimension(H, dims)
    if N < 0:
        return AnalysisResult(empty=True, reason=EmptyReason.NEGATIVE_EXPECTED_DIMENSION)
    D = extract_degree(chern_top_class(H, dims), N)
    if D == 0:
        return AnalysisResult(empty=True, reason=EmptyReason.DEGREE_ZERO)
    finite = N == 0
    return AnalysisResult(
        empty=False,
        dimension=N,
        degree=D,
        finitely_many=finite,
        guarantees=frozenset(GUARANTEES) if finite else frozenset(),
    )


def unique_incoming_check(H: Hyperquiver) -> bool:
    """True iff every vertex is the target of exactly one edge."""
    counts = [0] * (H.n + 1)
    for e in H.edges:
        counts[e.target] += 1
    return all(c == 1 for c in counts[1:])
