"""Multigraded kernel products and the zero condition they force.

An element of degree (l_1, ..., l_h) is a function of h groups of points,
symmetric within each group.  The product weights every pair (u from the
left factor in group i, u' from the right factor in group j) by
lambda_ij(u, u').  Products are normalized by 1/prod(l_i! l'_i!), so a
single group reproduces the plain shuffle product.
"""
import itertools
from typing import Callable, List, Sequence

import numpy as np


class MultiSymFun:
    def __init__(self, degrees: Sequence[int], fn: Callable):
        self.degrees = tuple(int(d) for d in degrees)
        self.fn = fn

    def __call__(self, groups) -> complex:
        groups = [np.asarray(g, dtype=np.complex128) for g in groups]
        if tuple(len(g) for g in groups) != self.degrees:
            raise ValueError(f"expected group sizes {self.degrees}")
        return complex(self.fn(groups))


def generator(h: int, i: int, f: Callable) -> MultiSymFun:
    """Degree delta_i element: a function of one point in group i."""
    degs = [0] * h
    degs[i] = 1
    return MultiSymFun(degs, lambda groups: f(groups[i][0]))


def multigraded_shuffle(f: MultiSymFun, g: MultiSymFun, kernels) -> MultiSymFun:
    """kernels[i][j](u, u') is the weight for u in group i (left), u' in group j (right)."""
    h = len(f.degrees)
    if len(g.degrees) != h:
        raise ValueError("grading rank mismatch")
    da, db = f.degrees, g.degrees
    choices = [list(itertools.combinations(range(da[c] + db[c]), da[c])) for c in range(h)]

    def fn(groups):
        tot = 0j
        for pick in itertools.product(*choices):
            left, right = [], []
            for c in range(h):
                sel = set(pick[c])
                left.append(groups[c][list(pick[c])])
                right.append(groups[c][[t for t in range(da[c] + db[c]) if t not in sel]])
            w = 1.0 + 0j
            for i in range(h):
                for j in range(h):
                    for u in left[i]:
                        for v in right[j]:
                            w *= kernels[i][j](u, v)
            tot += w * f.fn(left) * g.fn(right)
        return tot

    return MultiSymFun(tuple(a + b for a, b in zip(da, db)), fn)


def product_of(gens: List[MultiSymFun], kernels) -> MultiSymFun:
    out = gens[0]
    for g in gens[1:]:
        out = multigraded_shuffle(out, g, kernels)
    return out


def polynomial_kernels():
    """Two groups; zero divisors K11 = {u = u'+1}, K12 = {u = u'}, K21 = {u = u'-1}."""
    return [[lambda u, v: u - v - 1, lambda u, v: u - v],
            [lambda u, v: u - v + 1, lambda u, v: u - v - 2]]


def chain_configuration(w: complex):
    """Group 1 points (w+1, w), group 2 point w: a closed chain through the divisors."""
    return [np.array([w + 1, w]), np.array([w])]


def serre_zero_check(element: MultiSymFun, config, rng, eps: float = 0.3,
                     nearby: int = 8) -> float:
    """|element(config)| relative to the median |element| at perturbed configs."""
    on = abs(element(config))
    off = []
    for _ in range(nearby):
        pert = [c + eps * (rng.normal(size=len(c)) + 1j * rng.normal(size=len(c))) for c in config]
        off.append(abs(element(pert)))
    return float(on / np.median(off))
