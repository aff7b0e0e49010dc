"""Time the numba kernels against their numpy fallbacks.

    python3 benchmarks/bench_accel.py [--repeat 5] [--points 20000]

The first numba call compiles (or loads the on-disk cache); it is timed
separately and excluded from the per-call numbers.
"""
import argparse
import time

import numpy as np

from ellalg import _accel
from ellalg.sklyanin import center
from ellalg.theta import evaluator


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases(points, rng):
    for n in (3, 5, 9):
        ev = evaluator(n)
        z0, _ = ev._reduce(rng.uniform(0, 1, points) + 1j * rng.uniform(-0.5, 0.5, points))
        z0 = z0.ravel()
        yield (f"theta sums n={n} x{points}",
               lambda b, ev=ev, z0=z0: _accel.theta_sums(z0, ev._J, ev._logc, ev._grp, ev.n, b))
    for n, m in ((3, 3), (4, 4), (5, 5), (4, 6)):
        ms = np.array(center.multisets(n, m))
        T = rng.normal(size=(m, n)) + 1j * rng.normal(size=(m, n))
        # same layout as the center computation: one m x m matrix per multiset
        mats = np.ascontiguousarray(np.tile(T[:, ms].transpose(1, 0, 2), (50, 1, 1)))
        yield (f"permanents {m}x{m} x{len(mats)}", lambda b, mats=mats: _accel.permanents(mats, b))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--points", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if not _accel.HAVE_NUMBA:
        print("numba unavailable (or ELLALG_NO_NUMBA set); timing numpy only")
    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':34s} {'numpy [ms]':>11s} {'numba [ms]':>11s} {'speedup':>8s} {'max diff':>9s}")
    for name, fn in cases(args.points, rng):
        ref = fn("numpy")
        t_np = best_of(lambda: fn("numpy"), args.repeat)
        if _accel.HAVE_NUMBA:
            t0 = time.perf_counter()
            out = fn("numba")
            first = time.perf_counter() - t0
            t_nb = best_of(lambda: fn("numba"), args.repeat)
            diff = np.max(np.abs(out - ref) / np.maximum(np.abs(ref), 1e-300))
            print(f"{name:34s} {1e3 * t_np:11.2f} {1e3 * t_nb:11.2f} {t_np / t_nb:7.1f}x {diff:9.1e}"
                  f"   (first call {1e3 * first:.0f} ms)")
        else:
            print(f"{name:34s} {1e3 * t_np:11.2f} {'-':>11s}")


if __name__ == "__main__":
    main()
