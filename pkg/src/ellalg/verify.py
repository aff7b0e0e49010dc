"""Seeded numerical checks returning flat report records.

Each runner returns a list of dicts {case, check, value, threshold, pass}
(plus a few check-specific extras); the CLI serializes them as JSON.
"""
from math import comb

import numpy as np

from .sklyanin import center, multigraded, poisson, relations, shuffle, t3

FLATNESS_CASES = [(3, 1), (4, 1), (5, 1), (5, 2), (7, 3)]


def _round(v):
    v = float(v)
    if not np.isfinite(v):
        return str(v)
    return float(f"{v:.6e}")


def record(case, check, value, threshold, ok, cmp="<", **extra):
    rec = {"case": case, "check": check, "value": value if isinstance(value, (dict, int, list)) else _round(value),
           "threshold": threshold if isinstance(threshold, (dict, int, list)) else _round(threshold),
           "cmp": cmp, "pass": bool(ok)}
    rec.update(extra)
    return rec


def _tau(rng):
    return relations.sample_tau(rng)


def expected_dims(n: int, max_degree: int):
    return {l: comb(n + l - 1, l) for l in range(1, max_degree + 1)}


def run_flatness(n, k, rng, omega=1j, tau_samples=1):
    out = []
    maxdeg = 3 if n <= 5 else 2
    exp = expected_dims(n, maxdeg)
    for t in range(tau_samples):
        dims = relations.graded_dims_generic(n, k, rng, omega, maxdeg)
        R = relations.generic_relation_space(n, k, rng, omega)
        ok = dims == exp and R.rank == n * (n - 1) // 2
        out.append(record(f"n={n},k={k},sample={t}", "flatness",
                          {str(l): d for l, d in dims.items()},
                          {str(l): d for l, d in exp.items()}, ok, cmp="==",
                          relation_rank=R.rank))
    return out


def run_heisenberg(n, k, rng, omega=1j, tau_samples=1, threshold=1e-8):
    out = []
    for t in range(tau_samples):
        R = relations.generic_relation_space(n, k, rng, omega)
        v = relations.heisenberg_check(R)
        out.append(record(f"n={n},k={k},sample={t}", "heisenberg", v, threshold, v < threshold))
    return out


def run_functional(n, rng, omega=1j, samples=20, threshold=1e-8, control=1e-2):
    tau = _tau(rng)
    v = shuffle.functional_relation_residual(n, tau, omega, samples, rng)
    c = shuffle.functional_relation_residual(n, tau, omega, samples, rng, lam=shuffle.one_kernel)
    return [record(f"n={n}", "functional", v, threshold, v < threshold),
            record(f"n={n}", "functional-control-lambda1", c, control, c > control, cmp=">")]


def run_center(n, rng, omega=1j, threshold=1e-7):
    tau = _tau(rng)
    out = []
    if n % 2 == 0:
        expect = {1: 2, 2: 3}
        for s in (1, 2):
            if s * n // 2 > 6:
                continue
            V = center.center_space_even(n, s, tau, rng, omega)
            out.append(record(f"n={n},s={s}", "center-even-dim", V.dim, expect[s], V.dim == expect[s], cmp="=="))
    else:
        C = center.central_element_odd(n, tau, rng, omega)
        out.append(record(f"n={n}", "center-odd-dim", C.dim, 1, C.dim == 1, cmp="=="))
        out.append(record(f"n={n}", "center-odd-commutation", C.commutation_residual, threshold,
                          C.commutation_residual < threshold))
    return out


def run_t3(rng, omega=1j, threshold=1e-7, angle_threshold=1e-6):
    tau = _tau(rng)
    r = t3.t3_relation_residual(tau, omega, rng)
    s = t3.quadratic_part_sine(tau, omega)
    ang = float(np.arcsin(s))
    return [record("n=3", "t3-relation", r, threshold, r < threshold),
            record("n=3", "t3-quadratic-angle", ang, angle_threshold, ang < angle_threshold)]


def center_polynomials(n, rng, omega=1j):
    """Classical-limit center candidates for Q_{n,1}: list of (multisets, coeffs)."""
    if n % 2 == 0:
        specs = [(n // 2, 2)] + ([(n, 3)] if n <= 4 else [])
    else:
        specs = [(n, 3)]
    out = []
    for m, chain in specs:
        ms, C = center.classical_center(n, m, chain, rng, omega)
        out.extend((ms, c) for c in C)
    return out


# residuals below this are Jacobi at working precision (difference round-off grows like 1/h^2)
JACOBI_FLOOR = 1e-10


def run_poisson(n, k, rng, omega=1j, h=1e-3, casimir_h=1e-5, threshold=1e-6):
    P1 = poisson.poisson_from_family(n, k, h, omega)
    P2 = poisson.poisson_from_family(n, k, h / 10, omega)
    anti = float(np.abs(P1.c + P1.c.transpose(1, 0, 2, 3)).max())
    j1, j2 = poisson.jacobi_residual(P1), poisson.jacobi_residual(P2)
    # n = 3 brackets satisfy Jacobi identically; both values then sit at round-off
    at_floor = max(j1, j2) < JACOBI_FLOOR
    out = [record(f"n={n},k={k}", "poisson-antisymmetry", anti, 0.0, anti == 0.0, cmp="=="),
           record(f"n={n},k={k}", "poisson-jacobi-decrease", j2, j1, j2 < j1 or at_floor,
                  jacobi_h=_round(j1), jacobi_h_over_10=_round(j2), h=h, at_floor=at_floor)]
    if k == 1:
        Pc = poisson.poisson_from_family(n, k, casimir_h, omega)
        worst = 0.0
        cands = center_polynomials(n, rng, omega)
        for ms, c in cands:
            worst = max(worst, poisson.casimir_residual(Pc, ms, c, rng))
        out.append(record(f"n={n},k={k}", "poisson-casimir", worst, threshold, worst < threshold,
                          candidates=len(cands)))
    return out


def run_shuffle_assoc(n, rng, omega=1j, samples=20, threshold=1e-8):
    tau = _tau(rng)
    gens = shuffle.theta_generators(n, omega)
    agens = shuffle.theta_generators(n, omega, kind="alt")
    lam = shuffle.theta_lambda(n, tau, omega)
    muls = [
        ("S_lambda", lambda f, g: shuffle.shuffle_product(f, g, lam, 0.0), gens),
        ("shifted", lambda f, g: shuffle.shuffle_product(f, g, lam, 2 * tau), gens),
        ("T_n", lambda f, g: shuffle.tn_product(f, g, n, tau, omega), agens),
    ]
    out = []
    pick = rng.integers(0, n, size=3)
    for name, mul, gs in muls:
        fs = [gs[i] for i in pick]
        v = shuffle.associativity_residual(mul, fs, rng, samples)
        out.append(record(f"n={n},{name}", "shuffle-assoc", v, threshold, v < threshold))
    return out


def run_serre_zero(rng, threshold=1e-10, control=1e-3):
    K = multigraded.polynomial_kernels()
    a = rng.normal(size=3) + 1j * rng.normal(size=3)
    f1 = multigraded.generator(2, 0, lambda u: 1 + a[0] * u)
    f2 = multigraded.generator(2, 0, lambda u: 1 + a[1] * u)
    g = multigraded.generator(2, 1, lambda u: 1 + a[2] * u)
    out = []
    for name, gens in (("f*f*g", [f1, f2, g]), ("f*g*f", [f1, g, f2]), ("g*f*f", [g, f1, f2])):
        P = multigraded.product_of(gens, K)
        w = complex(rng.normal(), rng.normal())
        on = multigraded.serre_zero_check(P, multigraded.chain_configuration(w), rng)
        d = 0.5 * (rng.normal(size=2) + 1j * rng.normal(size=2))
        off_cfg = [np.array([w + 1 + d[0], w + d[1]]), np.array([w])]
        off = multigraded.serre_zero_check(P, off_cfg, rng)
        out.append(record(name, "serre-zero-chain", on, threshold, on < threshold))
        out.append(record(name, "serre-zero-offchain", off, control, off > control, cmp=">"))
    return out
