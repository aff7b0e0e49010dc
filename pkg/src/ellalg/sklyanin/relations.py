"""Quadratic relation spaces of the elliptic algebras Q_{n,k}(E, tau).

Relations live in V (x) V with V = span(x_0..x_{n-1}); a vector of length n^2
indexes x_a x_b at position a*n + b.
"""
from dataclasses import dataclass
from math import gcd

import numpy as np

from ..theta import evaluator

RANK_RTOL = 1e-8
DENOM_TOL = 1e-6


class NonGenericTau(ValueError):
    """A relation denominator vanished; resample tau."""


def numerical_rank(A, rtol: float = RANK_RTOL) -> int:
    s = np.linalg.svd(np.atleast_2d(A), compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.sum(s > rtol * s[0]))


def orth_span(A, rtol: float = RANK_RTOL):
    """Orthonormal basis (columns) of the row space of A."""
    u, s, vh = np.linalg.svd(np.atleast_2d(A), full_matrices=False)
    r = int(np.sum(s > rtol * s[0])) if s.size and s[0] > 0 else 0
    return vh[:r].T.copy()


def subspace_sine(U, W) -> float:
    """Largest principal-angle sine between column spans (orthonormal inputs).

    The sine form stays accurate for tiny angles, unlike arccos of cosines.
    """
    if U.shape[1] != W.shape[1]:
        return 1.0
    P = W - U @ (U.conj().T @ W)
    return float(min(1.0, np.linalg.norm(P, 2)))


def principal_angle(U, W) -> float:
    return float(np.arcsin(subspace_sine(U, W)))


@dataclass
class RelationSpace:
    n: int
    k: int
    tau: complex
    omega: complex
    rows: np.ndarray  # raw relation vectors, shape (n*(n-1), n*n)
    basis: np.ndarray  # orthonormal columns spanning the relations
    rank_rtol: float = RANK_RTOL

    @property
    def rank(self) -> int:
        return self.basis.shape[1]

    def matrices(self):
        """Basis relations as n x n coefficient matrices."""
        return [self.basis[:, i].reshape(self.n, self.n) for i in range(self.rank)]


def relation_rows(n: int, k: int, tau: complex, omega: complex = 1j,
                  denom_tol: float = DENOM_TOL) -> np.ndarray:
    """One relation vector per ordered pair i != j, as a flattened n x n matrix."""
    ev = evaluator(n, omega)
    th0 = ev.basis(np.zeros(1))[0]
    thp = ev.basis(np.array([tau]))[0]
    thm = ev.basis(np.array([-tau]))[0]
    rows = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            v = np.zeros((n, n), dtype=np.complex128)
            for r in range(n):
                den = thm[(j - i - r) % n] * thp[(k * r) % n]
                if abs(den) < denom_tol:
                    raise NonGenericTau(f"relation denominator {abs(den):.2e} at tau={tau}")
                v[(k * (j - r)) % n, (k * (i + r)) % n] += th0[(j - i + (k - 1) * r) % n] / den
            rows.append(v.ravel())
    return np.array(rows)


def relation_tensor(n: int, k: int, tau: complex, omega: complex = 1j,
                    rank_rtol: float = RANK_RTOL, denom_tol: float = DENOM_TOL) -> RelationSpace:
    if not (0 < k < n) or gcd(n, k) != 1:
        raise ValueError("need coprime 0 < k < n")
    rows = relation_rows(n, k, tau, omega, denom_tol)
    basis = orth_span(rows, rank_rtol)
    return RelationSpace(n, k, complex(tau), complex(omega), rows, basis, rank_rtol)


def graded_dim(R: RelationSpace, l: int) -> int:
    n = R.n
    if l == 0:
        return 1
    if l == 1:
        return n
    if l == 2:
        return n * n - R.rank
    if l == 3:
        B = R.basis
        I = np.eye(n)
        big = np.hstack([np.kron(B, I), np.kron(I, B)])
        return n ** 3 - numerical_rank(big.T, R.rank_rtol)
    raise ValueError("graded dimensions are computed up to degree 3")


def _act(R: RelationSpace, g):
    n = R.n
    G = np.kron(g, g)
    return orth_span((G @ R.basis).T, R.rank_rtol)


def heisenberg_generators(n: int):
    shift = np.roll(np.eye(n), 1, axis=0)  # x_a -> x_{a+1}
    eps = np.exp(2j * np.pi / n)
    char = np.diag(eps ** np.arange(n))  # x_a -> eps^a x_a
    return shift, char


def heisenberg_check(R: RelationSpace, generators=None) -> float:
    """Largest principal-angle sine between R and its images under the group."""
    gens = heisenberg_generators(R.n) if generators is None else generators
    U = orth_span(R.basis.T, R.rank_rtol)
    worst = 0.0
    for g in gens:
        worst = max(worst, subspace_sine(U, _act(R, g)))
    return worst


def antisymmetric_basis(n: int) -> np.ndarray:
    cols = []
    for a in range(n):
        for b in range(a + 1, n):
            v = np.zeros((n, n))
            v[a, b], v[b, a] = 1, -1
            cols.append(v.ravel() / np.sqrt(2))
    return np.array(cols, dtype=np.complex128).T


def classical_limit_angles(n: int, k: int, ts=(1e-1, 1e-2, 1e-3),
                           direction: complex = 0.3 + 0.2j, omega: complex = 1j):
    """Principal-angle sine between R(t*direction) and Lambda^2 V for each t."""
    A = antisymmetric_basis(n)
    out = []
    for t in ts:
        R = relation_tensor(n, k, t * direction, omega)
        out.append(subspace_sine(A, R.basis))
    return out


def sample_tau(rng, re=(0.05, 0.45), im=(0.05, 0.3)) -> complex:
    return complex(rng.uniform(*re), rng.uniform(*im))


def generic_relation_space(n: int, k: int, rng, omega: complex = 1j,
                           tries: int = 20) -> RelationSpace:
    for _ in range(tries):
        try:
            return relation_tensor(n, k, sample_tau(rng), omega)
        except NonGenericTau:
            continue
    raise NonGenericTau("no generic tau found")


def graded_dims_generic(n: int, k: int, rng, omega: complex = 1j, max_degree: int = 3,
                        tries: int = 10) -> dict:
    """Graded dims at a random tau, confirmed at a second independent tau."""
    for _ in range(tries):
        R1 = generic_relation_space(n, k, rng, omega)
        R2 = generic_relation_space(n, k, rng, omega)
        d1 = {l: graded_dim(R1, l) for l in range(1, max_degree + 1)}
        d2 = {l: graded_dim(R2, l) for l in range(1, max_degree + 1)}
        if d1 == d2:
            return d1
    raise NonGenericTau("graded dimensions disagree across tau samples")
