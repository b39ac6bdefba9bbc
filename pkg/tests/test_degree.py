import random
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperquiver.chow import RingShape, TruncPoly, coefficient, linear_form, mul, one, power, variable
from hyperquiver.degree import (
    EmptyReason,
    analyze,
    chern_top_class,
    edge_factor,
    expected_dimension,
    extract_degree,
    unique_incoming_check,
)
from hyperquiver.families import FamilySpec, build
from hyperquiver.model import Hyperedge, Hyperquiver

from conftest import hyperquivers, random_hyperquiver

SHARED = Hyperquiver.from_pairs(2, [((1, 2), 1), ((1, 2), 1)])


def literal_degree(F: TruncPoly, N: int) -> int:
    s = F.shape
    return coefficient(mul(power(linear_form(s, [1] * s.nvars), N), F), s.top)


# expected_dimension


def test_shared_tensor_dimension():
    assert expected_dimension(SHARED, (3, 3)) == 0


@pytest.mark.parametrize("dims", [(2, 3), (4, 2, 5), (3, 3, 3, 2)])
def test_star_dimension(dims):
    n = len(dims)
    H = Hyperquiver(n, (Hyperedge(tuple(range(1, n)), n),))
    assert expected_dimension(H, dims) == sum(dims[:-1]) - n + 1


def test_kronecker_dimension():
    H = Hyperquiver.from_pairs(2, [((1,), 2), ((1,), 2)])
    assert expected_dimension(H, (3, 2)) == 1


@given(hyperquivers(max_n=4, max_edges=5), st.integers(1, 6))
def test_uniform_dimension_identity(hd, d):
    H, _ = hd
    dims = (d,) * H.n
    assert expected_dimension(H, dims) == (d - 1) * (H.n - len(H.edges))


# edge_factor / chern_top_class


@pytest.mark.parametrize("m", [3, 4, 5])
@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_jordan_edge_factor(m, d):
    e = Hyperedge((1,) * (m - 1), 1)
    s = RingShape((d,))
    expect = ((m - 1) ** d - 1) // (m - 2)
    assert edge_factor(e, (d,), s) == expect * power(variable(s, 1), d - 1)


def test_edge_factor_target_dim_one():
    e = Hyperedge((1, 2), 1)
    s = RingShape((1, 3))
    assert edge_factor(e, (1, 3), s) == one(s)


def test_shared_tensor_edge_factor():
    s = RingShape((3, 3))
    h1, h2 = variable(s, 1), variable(s, 2)
    expect = (h1 + h2) ** 2 + h1 * (h1 + h2) + h1 * h1
    assert edge_factor(SHARED.edges[0], (3, 3), s) == expect
    assert chern_top_class(SHARED, (3, 3)) == expect * expect
    assert chern_top_class(SHARED, (3, 3)).coeffs[-1] == 15


def test_no_edges_gives_one():
    assert chern_top_class(Hyperquiver(2, ()), (2, 3)) == one(RingShape((2, 3)))


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_two_loops_chern_vanishes(d):
    H = Hyperquiver.from_pairs(1, [((1,), 1), ((1,), 1)])
    s = RingShape((d,))
    f = edge_factor(H.edges[0], (d,), s)
    assert f == d * power(variable(s, 1), d - 1)
    assert chern_top_class(H, (d,)).is_zero()


# extract_degree


def test_extract_shared_tensor():
    assert extract_degree(chern_top_class(SHARED, (3, 3)), 0) == 15


@pytest.mark.parametrize("dims", [(2,), (3, 2), (2, 2, 2), (4, 3, 2)])
def test_extract_pure_multinomial(dims):
    s = RingShape(dims)
    N = sum(d - 1 for d in dims)
    expect = factorial(N)
    for d in dims:
        expect //= factorial(d - 1)
    assert extract_degree(one(s), N) == expect


def test_extract_star_222():
    H = Hyperquiver(3, (Hyperedge((1, 2), 3),))
    assert extract_degree(chern_top_class(H, (2, 2, 2)), 2) == 6


def test_extract_rejects_negative():
    with pytest.raises(ValueError):
        extract_degree(one(RingShape((2,))), -1)


def test_extraction_equals_literal_product():
    rng = random.Random(20240611)
    for _ in range(200):
        bounds = [rng.randint(1, 6) for _ in range(rng.randint(1, 3))]
        while _size(bounds) > 64:
            bounds[rng.randrange(len(bounds))] -= 1
        s = RingShape(tuple(max(1, b) for b in bounds))
        F = TruncPoly(s, [rng.randint(-9, 9) if rng.random() < 0.4 else 0 for _ in range(s.size)])
        N = rng.randint(0, 6)
        assert extract_degree(F, N) == literal_degree(F, N)


def _size(bounds):
    out = 1
    for b in bounds:
        out *= max(1, b)
    return out


# analyze


def test_analyze_shared_tensor():
    r = analyze(SHARED, (3, 3))
    assert not r.empty and r.dimension == 0 and r.degree == 15
    assert r.finitely_many and "multiplicity_one" in r.guarantees


@pytest.mark.parametrize("d", range(1, 7))
def test_analyze_jordan_matrix(d):
    r = analyze(Hyperquiver.from_pairs(1, [((1,), 1)]), (d,))
    assert (r.dimension, r.degree) == (0, d)


@pytest.mark.parametrize("d", range(2, 7))
def test_analyze_two_loops_with_spare_vertex(d):
    # a second, edgeless vertex of the same dimension puts N at 0; D then vanishes
    H = Hyperquiver.from_pairs(2, [((1,), 1), ((1,), 1)])
    assert expected_dimension(H, (d, d)) == 0
    r = analyze(H, (d, d))
    assert r.empty and r.reason is EmptyReason.DEGREE_ZERO


def test_analyze_kronecker_cubic():
    inst = build(FamilySpec("kronecker", (3, 2, 2)))
    r = analyze(inst.hyperquiver, inst.dims)
    assert (r.dimension, r.degree) == (0, 4)


def test_analyze_negative_dimension():
    H = Hyperquiver.from_pairs(2, [((1,), 2), ((1,), 2)])
    r = analyze(H, (2, 3))
    assert r.empty and r.reason is EmptyReason.NEGATIVE_EXPECTED_DIMENSION
    assert r.dimension is None and r.degree is None


def test_positive_dimension_has_no_guarantees():
    H = Hyperquiver.from_pairs(2, [((1,), 2), ((1,), 2)])
    r = analyze(H, (3, 2))
    assert r.dimension == 1 and not r.finitely_many and not r.guarantees
    # F = (h1 + h2)^2 = h1^2 + 2 h1 h2 mod h2^2; (h1 + h2) F has top coefficient 1 + 2
    assert r.degree == 3


@settings(max_examples=150, deadline=None)
@given(hyperquivers(max_n=3, max_edges=3, max_mu=2))
def test_analyze_never_reports_zero_degree(hd):
    H, d = hd
    r = analyze(H, d)
    if not r.empty:
        assert r.degree > 0 and r.dimension >= 0
        assert r.finitely_many == (r.dimension == 0)


# unique incoming


def test_unique_incoming_examples():
    assert unique_incoming_check(build(FamilySpec("jordan", (3, 4))).hyperquiver)
    assert not unique_incoming_check(build(FamilySpec("kronecker", (3, 2, 2))).hyperquiver)
    assert unique_incoming_check(build(FamilySpec("fo", (2, 3, 4))).hyperquiver)


def test_unique_incoming_implies_finite():
    rng = random.Random(7)
    H = build(FamilySpec("fo", (2, 2, 2))).hyperquiver
    cyc = build(FamilySpec("cycle", (3, 3, 2))).hyperquiver
    for G in (H, cyc):
        assert unique_incoming_check(G)
        for _ in range(20):
            dims = tuple(rng.randint(1, 4) for _ in range(G.n))
            assert expected_dimension(G, dims) == 0


# relabeling


def test_relabel_invariance():
    rng = random.Random(99)
    for _ in range(60):
        H, d = random_hyperquiver(rng, max_n=3, max_edges=3, max_mu=2)
        base = analyze(H, d)
        perm = list(range(1, H.n + 1))
        rng.shuffle(perm)
        G = H.relabel(perm)
        dd = [0] * H.n
        for v, w in enumerate(perm, start=1):
            dd[w - 1] = d[v - 1]
        other = analyze(G, tuple(dd))
        assert (base.empty, base.dimension, base.degree) == (other.empty, other.dimension, other.degree)
