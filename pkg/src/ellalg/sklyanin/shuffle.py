"""Evaluation-based symmetric functions and kernel-weighted shuffle products.

A SymFun is a closure: it is never expanded symbolically, only evaluated at
points.  For symmetric (or alternating) factors the full symmetrization over
S_{a+b} divided by a! b! collapses to a sum over (a, b)-shuffles, which is
what is computed here.
"""
import itertools
from typing import Callable, Sequence

import numpy as np

from ..theta import evaluator, lambda_kernel, tn_kernel


class SymFun:
    """Function of `nvars` points, symmetric or alternating under permutations."""

    def __init__(self, nvars: int, fn: Callable, kind: str = "sym"):
        if kind not in ("sym", "alt"):
            raise ValueError("kind must be 'sym' or 'alt'")
        self.nvars = int(nvars)
        self.fn = fn
        self.kind = kind

    def __call__(self, x) -> complex:
        x = np.asarray(x, dtype=np.complex128)
        if x.shape != (self.nvars,):
            raise ValueError(f"expected {self.nvars} points, got shape {x.shape}")
        return complex(self.fn(x))

    def __add__(self, other):
        return linear_combination([(1, self), (1, other)])

    def __rmul__(self, c):
        return linear_combination([(c, self)])

    def __sub__(self, other):
        return linear_combination([(1, self), (-1, other)])


def constant(c: complex = 1.0, kind: str = "sym") -> SymFun:
    return SymFun(0, lambda x: c, kind)


def degree_one(f: Callable, kind: str = "sym") -> SymFun:
    return SymFun(1, lambda x: f(x[0]), kind)


def linear_combination(terms) -> SymFun:
    terms = [(c, f) for c, f in terms]
    m = terms[0][1].nvars
    kind = terms[0][1].kind
    if any(f.nvars != m for _, f in terms):
        raise ValueError("degree mismatch in linear combination")
    return SymFun(m, lambda x: sum(c * f.fn(x) for c, f in terms), kind)


def _shuffles(a: int, b: int):
    """Yield (first, second, sign) for each (a, b)-shuffle of range(a+b)."""
    for first in itertools.combinations(range(a + b), a):
        fs = set(first)
        second = tuple(i for i in range(a + b) if i not in fs)
        inv = sum(1 for i in first for j in second if j < i)
        yield first, second, (-1) ** inv


def kernel_product(f: SymFun, g: SymFun, pair_weight: Callable, shift: complex = 0.0,
                   alternating: bool = False) -> SymFun:
    """(1/(a! b!)) Symm[ prod_{i<=a<j} w(x_i, x_j) f(x_1..x_a) g(x_{a+1}+shift, ...) ].

    `pair_weight(xi, xj)` is applied to arrays of pairs.  With alternating=True
    the symmetrization carries permutation signs.
    """
    a, b = f.nvars, g.nvars
    shuffles = list(_shuffles(a, b))

    def fn(x):
        tot = 0j
        for first, second, sign in shuffles:
            xi, xj = x[list(first)], x[list(second)]
            w = 1.0 + 0j
            if a and b:
                w = np.prod(pair_weight(np.repeat(xi, b), np.tile(xj, a)))
            term = w * f.fn(xi) * g.fn(xj + shift)
            tot += sign * term if alternating else term
        return tot

    return SymFun(a + b, fn, "alt" if alternating else "sym")


def shuffle_product(f: SymFun, g: SymFun, lam: Callable, p: complex = 0.0) -> SymFun:
    """Shifted S_lambda product: g's arguments are translated by -a*p."""
    return kernel_product(f, g, lam, -f.nvars * p)


def theta_lambda(n: int, tau: complex, omega: complex = 1j):
    return lambda x, y: lambda_kernel(x, y, n, tau, omega)


def one_kernel(x, y):
    return np.ones(np.broadcast(x, y).shape, dtype=np.complex128)


def tn_product(f: SymFun, g: SymFun, n: int, tau: complex, omega: complex = 1j) -> SymFun:
    """Skew-symmetrized T_n product; g's arguments are translated by +2 a tau."""
    return kernel_product(f, g, lambda x, y: tn_kernel(x, y, n, tau, omega),
                          2 * f.nvars * tau, alternating=True)


def theta_generators(n: int, omega: complex = 1j, kind: str = "sym", scale=None):
    """Order-n theta basis as degree-one SymFuns (optionally rescaled)."""
    ev = evaluator(n, omega)
    s = np.ones(n) if scale is None else np.asarray(scale)
    return [degree_one(lambda z, j=j: s[j] * ev.basis(np.asarray([z]))[0, j], kind)
            for j in range(n)]


def product_chain(fs: Sequence[SymFun], mul: Callable) -> SymFun:
    out = fs[0]
    for f in fs[1:]:
        out = mul(out, f)
    return out


def random_points(rng, m: int, im: float = 0.3):
    return rng.uniform(0, 1, m) + 1j * rng.uniform(-im, im, m)


def relative_residual(values_lhs, values_rhs) -> float:
    lhs, rhs = np.asarray(values_lhs), np.asarray(values_rhs)
    scale = np.maximum(np.abs(lhs), np.abs(rhs))
    return float(np.max(np.abs(lhs - rhs) / scale))


def associativity_residual(mul: Callable, fs: Sequence[SymFun], rng, samples: int = 20) -> float:
    f, g, h = fs
    left = mul(mul(f, g), h)
    right = mul(f, mul(g, h))
    m = left.nvars
    L, R = [], []
    for _ in range(samples):
        x = random_points(rng, m)
        L.append(left(x))
        R.append(right(x))
    return relative_residual(L, R)


def functional_relation_residual(n: int, tau: complex, omega: complex = 1j, samples: int = 20,
                                 rng=None, lam=None) -> float:
    """Max relative residual of the Q_{n,1} relations inside S_{lambda, 2 tau}.

    The realization with lambda = theta(x-y-n tau)/theta(x-y) and p = 2 tau
    satisfies the relations of the relation tensor at -tau in this theta
    convention (see the convention notes).
    """
    from .relations import relation_tensor
    rng = np.random.default_rng(0) if rng is None else rng
    lam = theta_lambda(n, tau, omega) if lam is None else lam
    R = relation_tensor(n, 1, -tau, omega)
    ev = evaluator(n, omega)
    p = 2 * tau
    worst = 0.0
    for _ in range(samples):
        x = random_points(rng, 2)
        # products x_a * x_b at the point pair, all a, b at once
        A1 = ev.basis(np.array([x[0], x[1] - p]))
        A2 = ev.basis(np.array([x[1], x[0] - p]))
        l12 = lam(np.array([x[0]]), np.array([x[1]]))[0]
        l21 = lam(np.array([x[1]]), np.array([x[0]]))[0]
        prod = l12 * np.outer(A1[0], A1[1]) + l21 * np.outer(A2[0], A2[1])
        pv = prod.ravel()
        for col in R.rows:
            val = abs(col @ pv)
            scale = np.abs(col) @ np.abs(pv)
            worst = max(worst, val / scale)
    return float(worst)


def pole_safe(fn, rng, m, tries: int = 10):
    """Evaluate at random points, resampling if a kernel pole is hit."""
    from ..theta import PoleError
    for _ in range(tries):
        x = random_points(rng, m)
        try:
            return x, fn(x)
        except PoleError:
            continue
    raise PoleError("persistent kernel pole while sampling")

