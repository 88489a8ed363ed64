"""Time the numba and numpy flavours of each kernel on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Both flavours are called directly, so ``IPGP_DISABLE_NUMBA`` has no effect here.
Each numba timing excludes the first (compiling) call. Results are checked
for agreement before anything is reported.
"""
import argparse
import time

import numpy as np

from ipgp import kernels
from ipgp._accel import HAVE_NUMBA
from ipgp.graph import GPParams, build_gp
from ipgp.poly import _primes
from ipgp.roots import initial_guesses
from ipgp.transfer import build_transfer_matrix, gp_polynomial


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def case_matpow(n=30, k=4):
    q = _primes(1)[0]
    a = build_transfer_matrix(k).matrix.to_array(q)
    return (f"matpow_trace GP({n},{k}) mod p",
            lambda: kernels.matpow_trace_mod(a, n, q, kernels.polymatmul_mod_numpy),
            lambda: kernels.matpow_trace_mod(a, n, q, kernels.polymatmul_mod_numba))


def case_census(n=13, k=4):
    g = build_gp(GPParams(n, k))
    nbr = np.array(g.adjacency_masks(), dtype=np.int64)
    nv = g.vertex_count
    return (f"census GP({n},{k}) ({nv} vertices)",
            lambda: kernels.census_counts_numpy(nbr, nv),
            lambda: kernels.census_counts_numba(nbr, nv))


def case_aberth(n=30, k=4):
    p = gp_polynomial(n, k)
    c = np.array([float(x) for x in p.coeffs])
    z0 = initial_guesses(p)
    return (f"aberth seeds GP({n},{k}) degree {p.degree}",
            lambda: kernels.aberth_sweeps_numpy(c, z0.copy(), 500, 1e-14)[0],
            lambda: kernels.aberth_sweeps_numba(c, z0.copy(), 500, 1e-14)[0])


def same(a, b):
    a, b = np.asarray(a), np.asarray(b)
    if np.iscomplexobj(a):
        # seeds only: clustered roots are ill-conditioned in double precision,
        # and the two flavours stall at different round-off points
        gap = np.abs(a[:, None] - b[None, :]).min(axis=1)
        return bool(np.all(gap <= 1e-4 * np.maximum(1.0, np.abs(a))))
    return np.array_equal(a, b)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not HAVE_NUMBA:
        raise SystemExit("numba is not importable; nothing to compare")

    print(f"{'kernel':<40} {'numpy [ms]':>11} {'numba [ms]':>11} {'speedup':>8}")
    for label, slow, fast in (case_matpow(), case_census(), case_aberth()):
        fast()  # compile, or load from the on-disk cache
        t_np, r_np = best_of(slow, args.repeat)
        t_nb, r_nb = best_of(fast, args.repeat)
        if not same(r_np, r_nb):
            raise SystemExit(f"{label}: flavours disagree")
        print(f"{label:<40} {1e3 * t_np:>11.2f} {1e3 * t_nb:>11.2f} {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
