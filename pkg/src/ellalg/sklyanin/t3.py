"""The n = 3 algebra T_3 in its skew-symmetric functional realization.

Generators x_a are the order-3 theta basis.  Degree-two elements C_a are
fixed combinations of products x_b * x_c with theta(4 tau) coefficients; the
cubic family ties x_b * C_{a+b} to the C_{a+b+i} * x_{b+i}.

In the cubic family the order-3 thetas must be normalized so that
theta_1(0) = 1 (the family is not homogeneous in theta degree).
"""
import numpy as np

from ..theta import evaluator
from .relations import orth_span, relation_tensor, subspace_sine
from .shuffle import linear_combination, random_points, theta_generators, tn_product

N = 3


def _thetas(omega, normalized=True):
    ev = evaluator(N, omega)
    norm = ev.basis(np.zeros(1))[0][1] if normalized else 1.0

    def th(j, z):
        return ev.basis(np.array([z]))[0][j % N] / norm
    return th


def quadratic_coefficients(tau: complex, omega: complex = 1j):
    """C_a as 3x3 coefficient matrices M[b, c] of x_b x_c."""
    th = _thetas(omega)
    s = 4 * tau
    out = []
    for a in range(N):
        M = np.zeros((N, N), dtype=np.complex128)
        M[a, a] += th(0, s)
        M[(a + 2) % N, (a + 1) % N] += th(1, s)
        M[(a + 1) % N, (a + 2) % N] += th(2, s)
        out.append(M)
    return out


def cubic_coefficients(tau: complex, a: int, omega: complex = 1j, normalized: bool = True):
    """(lhs, [r0, r1, r2]) of  lhs x_b C_{a+b} = sum_i r_i C_{a+b+i} x_{b+i}."""
    th = _thetas(omega, normalized)
    lhs = np.exp(6j * np.pi * tau) * th(a, 3 * tau)
    pairs = [(1, 2), (0, 1), (2, 0)]
    rhs = [th(a + i, tau) * th(pairs[i][0], 2 * tau) * th(pairs[i][1], 2 * tau) for i in range(N)]
    return lhs, rhs


def realized_generators(omega: complex = 1j):
    return theta_generators(N, omega, kind="alt")


def realized_c(tau: complex, omega: complex = 1j):
    xs = realized_generators(omega)
    out = []
    for M in quadratic_coefficients(tau, omega):
        terms = [(M[b, c], tn_product(xs[b], xs[c], N, tau, omega))
                 for b in range(N) for c in range(N) if M[b, c] != 0]
        out.append(linear_combination(terms))
    return out


def t3_relation_residual(tau: complex, omega: complex = 1j, rng=None, samples: int = 4,
                         normalized: bool = True) -> float:
    """Max relative residual of the cubic family at random points.

    The quadratic family enters through the C_a, which are built from it.
    """
    rng = np.random.default_rng(0) if rng is None else rng
    xs = realized_generators(omega)
    Cs = realized_c(tau, omega)
    worst = 0.0
    pts = [random_points(rng, 3) for _ in range(samples)]
    for a in range(N):
        lhs_c, rhs_c = cubic_coefficients(tau, a, omega, normalized)
        for b in range(N):
            left = tn_product(xs[b], Cs[(a + b) % N], N, tau, omega)
            rights = [tn_product(Cs[(a + b + i) % N], xs[(b + i) % N], N, tau, omega)
                      for i in range(N)]
            for x in pts:
                lv = lhs_c * left(x)
                rv = sum(r * f(x) for r, f in zip(rhs_c, rights))
                worst = max(worst, abs(lv - rv) / max(abs(lv), abs(rv)))
    return float(worst)


def c_independence(tau: complex, omega: complex = 1j, rng=None, samples: int = 12) -> int:
    """Numerical rank of the three realized C_a as functions (expected 3)."""
    rng = np.random.default_rng(0) if rng is None else rng
    Cs = realized_c(tau, omega)
    vals = np.array([[c(x) for c in Cs] for x in (random_points(rng, 2) for _ in range(samples))])
    s = np.linalg.svd(vals, compute_uv=False)
    return int(np.sum(s > 1e-8 * s[0]))


def quadratic_part_sine(tau: complex, omega: complex = 1j) -> float:
    """Principal-angle sine between span(C_a) and the Q_3 relations at 4 tau."""
    W = orth_span(np.array([M.ravel() for M in quadratic_coefficients(tau, omega)]))
    R = relation_tensor(N, 1, 4 * tau, omega)
    return subspace_sine(R.basis, W)

