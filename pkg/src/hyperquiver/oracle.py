"""Numeric spot checks of predicted counts on instances that reduce to one variable.

Every check draws a random complex instance from splitmix64, reduces the
singular vector problem to the roots of a single polynomial, and counts
distinct (projective) roots. Nothing here depends on the Chow ring code.
"""
from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

import numpy as np

from .prng import SplitMix64

TOL_CONVERGE = 1e-12
TOL_CLUSTER = 1e-6
LEADING_ZERO = 1e-12
MAX_ITER = 500
ISOTROPY_TOL = 1e-6
ZERO_VALUE_TOL = 1e-6


class RootFindingError(RuntimeError):
    pass


class GenericityWarning(UserWarning):
    """A random instance looked non-generic (e.g. a near-zero singular value)."""


@dataclass(frozen=True)
class RootReport:
    roots: tuple[complex, ...]
    distinct_count: int
    includes_infinity: bool
    iterations: int = 0


def _horner(coeffs, z):
    """Value and derivative of a polynomial given highest degree first."""
    p, dp = coeffs[0], 0j
    for c in coeffs[1:]:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _scale(coeffs, z):
    az, s = abs(z), 0.0
    for c in coeffs:
        s = s * az + abs(c)
    return s


def _cluster(points: Sequence[complex], tol: float) -> int:
    """Number of single-linkage clusters at relative distance ``tol``."""
    n = len(points)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            r = max(1.0, abs(points[i]), abs(points[j]))
            if abs(points[i] - points[j]) <= tol * r:
                parent[find(i)] = find(j)
    return len({find(i) for i in range(n)})


def roots_of_polynomial(
    coeffs: Sequence[complex],
    tol_converge: float = TOL_CONVERGE,
    tol_cluster: float = TOL_CLUSTER,
    max_iter: int = MAX_ITER,
) -> RootReport:
    """Aberth-Ehrlich iteration on ``coeffs`` (highest degree first).

    Numerically vanishing leading coefficients are stripped and reported as a
    projective root at infinity.
    """
    c = [complex(x) for x in coeffs]
    big = max((abs(x) for x in c), default=0.0)
    if big == 0.0:
        raise ValueError("zero polynomial has no well-defined roots")
    stripped = 0
    while c and abs(c[0]) <= LEADING_ZERO * big:
        c.pop(0)
        stripped += 1
    deg = len(c) - 1
    if deg < 1:
        raise ValueError("polynomial has degree < 1 after stripping leading zeros")

    lead = c[0]
    monic = [x / lead for x in c]
    radius = 1.0 + max(abs(x) for x in monic[1:])
    z = [radius * cmath.exp(1j * (2 * math.pi * k / deg + 0.4)) for k in range(deg)]

    # iterate to rounding level; tol_converge is the acceptance test afterwards
    # (stopping at tol_converge leaves multiple roots unresolved for clustering)
    eps = np.finfo(float).eps
    done = [False] * deg
    it = 0
    for it in range(1, max_iter + 1):
        for k in range(deg):
            if done[k]:
                continue
            p, dp = _horner(monic, z[k])
            if abs(p) <= 16 * eps * _scale(monic, z[k]):
                done[k] = True
                continue
            s = sum(1.0 / (z[k] - z[j]) for j in range(deg) if j != k and z[k] != z[j])
            w = p / dp if dp != 0 else p / 1e-300
            step = w / (1.0 - w * s)
            z[k] -= step
            if abs(step) <= 4 * eps * max(1.0, abs(z[k])):
                done[k] = True
        if all(done):
            break
    for zk in z:
        p, dp = _horner(monic, zk)
        # relative residual, or a negligible Newton correction (covers roots at 0)
        small_res = abs(p) <= tol_converge * _scale(monic, zk)
        small_step = dp != 0 and abs(p / dp) <= tol_converge * max(1.0, abs(zk))
        if not (small_res or small_step):
            raise RootFindingError(
                f"Aberth iteration did not converge in {max_iter} steps (degree {deg})"
            )

    distinct = _cluster(z, tol_cluster) + (1 if stripped else 0)
    return RootReport(tuple(z), distinct, stripped > 0, it)


def residual_ok(coeffs: Sequence[complex], z: complex, tol: float = 1e-8) -> bool:
    c = [complex(x) for x in coeffs]
    deg = len(c) - 1
    p, _ = _horner(c, z)
    return abs(p) <= tol * max(abs(x) for x in c) * max(1.0, abs(z)) ** deg


# --- linear algebra helpers -------------------------------------------------


def random_complex_matrix(rng: SplitMix64, rows: int, cols: int) -> np.ndarray:
    return np.array([[rng.complex() for _ in range(cols)] for _ in range(rows)])


def charpoly(A: np.ndarray) -> list[complex]:
    """``det(lambda I - A)`` by Faddeev-LeVerrier, highest degree first."""
    n = A.shape[0]
    coeffs = [1.0 + 0j]
    M = np.zeros_like(A, dtype=complex)
    I = np.eye(n, dtype=complex)
    c = 1.0 + 0j
    for k in range(1, n + 1):
        M = A @ M + c * I
        c = -np.trace(A @ M) / k
        coeffs.append(complex(c))
    return coeffs


def null_vector(M: np.ndarray) -> np.ndarray:
    _, _, vh = np.linalg.svd(M)
    return vh[-1].conj()


def is_isotropic(x: np.ndarray, tol: float = ISOTROPY_TOL) -> bool:
    """``x^T x`` (bilinear, no conjugation) vanishes relative to ``|x|^2``."""
    return abs(x @ x) <= tol * np.vdot(x, x).real


@dataclass(frozen=True)
class EigenReport:
    count: int
    eigenvalues: tuple[complex, ...]
    isotropic: tuple[bool, ...]

    @property
    def non_isotropic(self) -> bool:
        return not any(self.isotropic)


def _check_nonzero(values, what):
    small = [v for v in values if abs(v) <= ZERO_VALUE_TOL]
    if small:
        warnings.warn(f"{what}: {len(small)} near-zero singular value(s)", GenericityWarning)


def matrix_eigen_report(d: int, seed: int) -> EigenReport:
    if not 2 <= d <= 8:
        raise ValueError("matrix_eigen_count supports 2 <= d <= 8")
    rng = SplitMix64(seed)
    A = random_complex_matrix(rng, d, d)
    rep = roots_of_polynomial(charpoly(A))
    lams = rep.roots
    iso = tuple(is_isotropic(null_vector(A - lam * np.eye(d))) for lam in lams)
    _check_nonzero(lams, f"matrix eigen d={d} seed={seed}")
    return EigenReport(rep.distinct_count, lams, iso)


def matrix_eigen_count(d: int, seed: int) -> int:
    return matrix_eigen_report(d, seed).count


def binary_tensor_polynomial(T: np.ndarray) -> list[complex]:
    """Coefficients (highest first) of ``f_1(z,1) - z f_2(z,1)`` for ``f = T(., x, ..., x)``."""
    m = T.ndim
    f = [[0j] * m for _ in range(2)]  # f[a][p] = coefficient of z^p, degree <= m-1
    for idx in product(range(2), repeat=m):
        f[idx[0]][idx[1:].count(0)] += T[idx]
    g = [0j] * (m + 1)
    for p in range(m):
        g[p] += f[0][p]
        g[p + 1] -= f[1][p]
    return g[::-1]


def binary_tensor_eigen_count(m: int, seed: int) -> int:
    """Projective eigenvectors of a random complex tensor in (C^2)^{x m}."""
    if not 3 <= m <= 7:
        raise ValueError("binary_tensor_eigen_count supports 3 <= m <= 7")
    rng = SplitMix64(seed)
    T = np.array([rng.complex() for _ in range(2**m)]).reshape((2,) * m)
    return roots_of_polynomial(binary_tensor_polynomial(T)).distinct_count


def det_polynomial(A: np.ndarray, B: np.ndarray) -> list[complex]:
    """``det(A - lambda B)`` by interpolation at d+1 roots of unity, highest first."""
    d = A.shape[0]
    n = d + 1
    nodes = np.exp(2j * np.pi * np.arange(n) / n)
    values = np.array([np.linalg.det(A - lam * B) for lam in nodes])
    V = np.vander(nodes, n, increasing=True)
    cond = np.linalg.cond(V)
    if not np.isfinite(cond) or cond > 1e8:
        raise RootFindingError(f"interpolation matrix badly conditioned (cond={cond:.3g})")
    coeffs = np.linalg.solve(V, values)
    return [complex(c) for c in coeffs[::-1]]


def generalized_eigen_count(d: int, seed: int, B: Optional[np.ndarray] = None) -> int:
    """Distinct generalized eigenvalues of a random pencil ``A - lambda B``."""
    if not 2 <= d <= 6:
        raise ValueError("generalized_eigen_count supports 2 <= d <= 6")
    rng = SplitMix64(seed)
    A = random_complex_matrix(rng, d, d)
    if B is None:
        B = random_complex_matrix(rng, d, d)
    rep = roots_of_polynomial(det_polynomial(A, np.asarray(B, dtype=complex)))
    return rep.distinct_count


def matrix_singular_pair_report(d: int, seed: int) -> EigenReport:
    if not 2 <= d <= 6:
        raise ValueError("matrix_singular_pair_count supports 2 <= d <= 6")
    rng = SplitMix64(seed)
    A = random_complex_matrix(rng, d, d)
    G = A.T @ A  # transpose, not conjugate transpose
    rep = roots_of_polynomial(charpoly(G))
    iso = tuple(is_isotropic(null_vector(G - lam * np.eye(d))) for lam in rep.roots)
    _check_nonzero(rep.roots, f"singular pairs d={d} seed={seed}")
    return EigenReport(rep.distinct_count, rep.roots, iso)


def matrix_singular_pair_count(d: int, seed: int) -> int:
    return matrix_singular_pair_report(d, seed).count
