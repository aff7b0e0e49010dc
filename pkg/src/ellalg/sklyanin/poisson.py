"""Quadratic Poisson structure from the tau -> 0 behaviour of the relations.

At tau = 0 the relation space is Lambda^2 V.  For small h, each antisymmetric
unit e_i ^ e_j lifts uniquely into R(h); the symmetric part of that lift is
O(h) and its first-order coefficient is the bracket {x_i, x_j}.
"""
import itertools
from dataclasses import dataclass

import numpy as np

from .relations import relation_tensor


class ProjectionSingular(ValueError):
    pass


@dataclass
class PoissonTensor:
    n: int
    k: int
    h: float
    c: np.ndarray  # c[i, j, a, b]: {x_i, x_j} = sum_ab c[i,j,a,b] x_a x_b, symmetric in (a, b)

    def bracket(self, x):
        """Matrix of brackets {x_i, x_j} at the point x."""
        return np.einsum("ijab,a,b->ij", self.c, x, x)


def _lift_symmetric_parts(n, k, tau, omega):
    # small tau is the point here, so only exact zeros are rejected
    R = relation_tensor(n, k, tau, omega, denom_tol=1e-300)
    mats = [m for m in R.matrices()]
    anti = np.array([((m - m.T) / 2).ravel() for m in mats]).T  # n^2 x r
    sym = [(m + m.T) / 2 for m in mats]
    sv = np.linalg.svd(anti, compute_uv=False)
    if sv[-1] < 1e-10 * sv[0]:
        raise ProjectionSingular("antisymmetric projection is singular; h too large or tau degenerate")
    out = np.zeros((n, n, n, n), dtype=np.complex128)
    for i in range(n):
        for j in range(i + 1, n):
            tgt = np.zeros((n, n))
            tgt[i, j], tgt[j, i] = 0.5, -0.5
            coef, *_ = np.linalg.lstsq(anti, tgt.ravel().astype(np.complex128), rcond=None)
            S = sum(c * s for c, s in zip(coef, sym))
            out[i, j] = S
            out[j, i] = -S
    return out


def poisson_from_family(n: int, k: int, h: float = 1e-3, omega: complex = 1j,
                        direction: complex = 1.0) -> PoissonTensor:
    """Central difference of the symmetric parts along tau = +-h*direction."""
    sp = _lift_symmetric_parts(n, k, h * direction, omega)
    sm = _lift_symmetric_parts(n, k, -h * direction, omega)
    c = (sp - sm) / (2 * h)
    c = (c - c.transpose(1, 0, 2, 3)) / 2  # exact antisymmetry
    c = (c + c.transpose(0, 1, 3, 2)) / 2
    return PoissonTensor(n, k, h, c)


def jacobi_tensor(P: PoissonTensor):
    """Coefficients of sum_cyc {x_i,{x_j,x_k}} as symmetric cubic forms."""
    n, c = P.n, P.c
    # {x_i, Q} = sum_a {x_i, x_a} dQ/dx_a with dQ/dx_a = 2 sum_e Q[a, e] x_e
    def nested(i, j, k):
        # coefficient of x_b x_d x_e before symmetrising
        return 2 * np.einsum("ae,abd->bde", c[j, k], c[i])
    out = np.zeros((n, n, n, n, n, n), dtype=np.complex128)
    for i, j, k in itertools.product(range(n), repeat=3):
        T = nested(i, j, k) + nested(j, k, i) + nested(k, i, j)
        S = sum(T.transpose(p) for p in itertools.permutations(range(3))) / 6
        out[i, j, k] = S
    return out


def jacobi_residual(P: PoissonTensor) -> float:
    """Max Jacobi coefficient relative to the squared bracket scale."""
    scale = np.abs(P.c).max() ** 2
    return float(np.abs(jacobi_tensor(P)).max() / scale)


def casimir_residual(P: PoissonTensor, multisets, coeffs, rng, samples: int = 5) -> float:
    """Relative size of {F, x_i} for the polynomial F = sum coeffs[m] x^m."""
    n = P.n
    worst = 0.0
    for _ in range(samples):
        x = rng.normal(size=n) + 1j * rng.normal(size=n)
        grad = np.zeros(n, dtype=np.complex128)
        for ms, cf in zip(multisets, coeffs):
            for a in set(ms):
                rest = list(ms)
                rest.remove(a)
                grad[a] += cf * ms.count(a) * np.prod([x[b] for b in rest])
        br = P.bracket(x)
        val = grad @ br
        scale = (np.abs(grad)[:, None] * np.abs(br)).sum(axis=0).max()
        worst = max(worst, float(np.abs(val).max() / scale))
    return worst
