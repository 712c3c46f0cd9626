"""Time the numba kernels against their numpy counterparts.

    python3 benchmarks/bench_kernels.py [--sizes 200 800] [--repeat 3]

The first numba call includes JIT compilation and is reported separately.
"""
import argparse
import time

import numpy as np

from cvwitness import _accel
from cvwitness.baselines import rbf_gram


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[200, 800])
    parser.add_argument("--features", type=int, default=27)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    rng = np.random.default_rng(0)
    X = rng.normal(size=(8, args.features))
    t0 = time.perf_counter()
    _accel.sq_dists_numba(X, X)
    _accel.smo_numba(np.eye(8), np.r_[np.ones(4), -np.ones(4)], 1.0, 1e-3, 100)
    print(f"numba compile: {time.perf_counter() - t0:.2f} s")

    print(f"{'kernel':<10} {'n':>6} {'numpy s':>10} {'numba s':>10} {'speedup':>8} {'max diff':>10}")
    for n in args.sizes:
        X = rng.normal(size=(n, args.features))
        t_np, d_np = best_of(lambda: _accel.sq_dists_numpy(X, X), args.repeat)
        t_nb, d_nb = best_of(lambda: _accel.sq_dists_numba(X, X), args.repeat)
        print(f"{'sq_dists':<10} {n:>6} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>8.2f} "
              f"{np.abs(d_np - d_nb).max():>10.1e}")

        y = np.where(X[:, 0] + 0.5 * rng.normal(size=n) > 0, 1.0, -1.0)
        K = rbf_gram(X, X, 1.0 / args.features)
        t_np, r_np = best_of(lambda: _accel._smo_numpy(K, y, 10.0, 1e-3, 1000 * n), args.repeat)
        t_nb, r_nb = best_of(lambda: _accel.smo_numba(K, y, 10.0, 1e-3, 1000 * n), args.repeat)
        print(f"{'smo':<10} {n:>6} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>8.2f} "
              f"{np.abs(r_np[0] - r_nb[0]).max():>10.1e}  ({r_nb[2]} iterations)")


if __name__ == "__main__":
    main()
