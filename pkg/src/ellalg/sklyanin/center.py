"""Center candidates in the functional realization.

Degree-m elements are symmetric theta functions of order n in m variables,
spanned by the symmetrized monomials  Sym prod_i theta_{a_i}(z_i - (m-1) tau)
over multisets {a_i}.  Such a symmetrization is a permanent.  Center
candidates are the combinations vanishing on a chain z, z - n tau, z - 2 n tau, ...
"""
import itertools
from dataclasses import dataclass

import numpy as np

from .. import _accel
from ..theta import evaluator
from .shuffle import SymFun, random_points, shuffle_product, theta_generators, theta_lambda


def multisets(n: int, m: int):
    return list(itertools.combinations_with_replacement(range(n), m))


def sym_monomials(n: int, m: int, tau: complex, z, omega: complex = 1j, backend=None):
    """Values of all symmetrized monomials at one point tuple z (length m)."""
    ev = evaluator(n, omega)
    T = ev.basis(np.asarray(z) - (m - 1) * tau)  # (m, n)
    ms = np.array(multisets(n, m), dtype=np.int64)
    mats = T[:, ms].transpose(1, 0, 2)  # (#ms, m, m): rows = points, cols = chosen indices
    return _accel.permanents(mats, backend)


def chain_point(rng, n: int, m: int, chain_len: int, tau: complex):
    z = random_points(rng, m)
    z[1:chain_len] = z[0] - n * tau * np.arange(1, chain_len)
    return z


@dataclass
class VanishingSpace:
    n: int
    m: int
    chain_len: int
    tau: complex
    dim: int
    coeffs: np.ndarray  # (dim, #multisets), unscaled coefficient vectors
    singular_values: np.ndarray
    ambient_rank: int


def vanishing_space(n: int, m: int, chain_len: int, tau: complex, rng, omega: complex = 1j,
                    oversample: int = 3, rtol: float = 1e-9) -> VanishingSpace:
    """Symmetric sections (in the multiset span) vanishing on the chain.

    dim = rank(generic samples) - rank(chain samples).  Columns are scaled
    by the generic sample magnitudes and rows normalized before ranking.
    """
    nms = len(multisets(n, m))
    npts = oversample * nms + 10
    G = np.array([sym_monomials(n, m, tau, random_points(rng, m), omega) for _ in range(npts)])
    D = np.array([sym_monomials(n, m, tau, chain_point(rng, n, m, chain_len, tau), omega)
                  for _ in range(npts)])
    colscale = np.abs(G).max(axis=0)  # max-abs: squared norms can overflow here
    G = G / colscale
    D = D / colscale
    for M in (G, D):
        M /= np.abs(M).max(axis=1, keepdims=True)
        M /= np.linalg.norm(M, axis=1, keepdims=True)
    sg = np.linalg.svd(G, compute_uv=False)
    rg = int(np.sum(sg > rtol * sg[0]))
    _, sd, vh = np.linalg.svd(D)
    rd = int(np.sum(sd > rtol * sd[0]))
    null = vh[rd:].conj() / colscale[None, :]
    dim = rg - rd
    return VanishingSpace(n, m, chain_len, complex(tau), dim, null[:max(dim, 0)], sd, rg)


def center_space_even(n: int, s: int, tau: complex, rng, omega: complex = 1j) -> VanishingSpace:
    if n % 2:
        raise ValueError("even n only")
    return vanishing_space(n, s * n // 2, s + 1, tau, rng, omega)


def section_symfun(n: int, m: int, tau: complex, coeffs, omega: complex = 1j) -> SymFun:
    c = np.asarray(coeffs)
    return SymFun(m, lambda z: c @ sym_monomials(n, m, tau, z, omega))


@dataclass
class OddCenter:
    dim: int
    commutation_residual: float
    space: VanishingSpace


def central_element_odd(n: int, tau: complex, rng, omega: complex = 1j,
                        samples: int = 5) -> OddCenter:
    if n % 2 == 0:
        raise ValueError("odd n only")
    V = vanishing_space(n, n, 3, tau, rng, omega)
    if V.dim < 1:
        return OddCenter(V.dim, float("inf"), V)
    delta = section_symfun(n, n, tau, V.coeffs[0], omega)
    lam = theta_lambda(n, tau, omega)
    p = 2 * tau
    worst = 0.0
    for f in theta_generators(n, omega):
        left = shuffle_product(delta, f, lam, p)
        right = shuffle_product(f, delta, lam, p)
        for _ in range(samples):
            x = random_points(rng, n + 1)
            a, b = left(x), right(x)
            worst = max(worst, abs(a - b) / max(abs(a), abs(b)))
    return OddCenter(V.dim, worst, V)


def classical_center(n: int, m: int, chain_len: int, rng, omega: complex = 1j):
    """tau = 0 limit: polynomials on V whose polarization vanishes on the collapsed chain."""
    V = vanishing_space(n, m, chain_len, 0.0, rng, omega)
    return multisets(n, m), V.coeffs
