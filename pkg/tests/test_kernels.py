"""The numba and numpy flavours of every kernel must agree exactly
(modular and census) or to round-off (Aberth)."""
import numpy as np
import pytest

from ipgp import kernels
from ipgp.graph import GPParams, build_gp
from ipgp.poly import _primes
from ipgp.transfer import build_transfer_matrix

P = _primes(1)[0]


def random_polymatrix(rng, depth, dim):
    return rng.integers(0, P, size=(depth, dim, dim), dtype=np.int64)


@pytest.mark.parametrize("depth_a,depth_b,dim", [(1, 1, 1), (3, 2, 4), (2, 5, 8), (4, 4, 32)])
def test_polymatmul_flavours_agree(depth_a, depth_b, dim):
    rng = np.random.default_rng(depth_a * 100 + dim)
    a = random_polymatrix(rng, depth_a, dim)
    b = random_polymatrix(rng, depth_b, dim)
    got_nb = kernels.polymatmul_mod_numba(a, b, P)
    got_np = kernels.polymatmul_mod_numpy(a, b, P)
    np.testing.assert_array_equal(got_nb, got_np)


def test_polymatmul_against_object_arithmetic():
    rng = np.random.default_rng(7)
    a = random_polymatrix(rng, 3, 5)
    b = random_polymatrix(rng, 2, 5)
    ref = np.zeros((4, 5, 5), dtype=object)
    for s in range(3):
        for t in range(2):
            ref[s + t] += a[s].astype(object) @ b[t].astype(object)
    np.testing.assert_array_equal(kernels.polymatmul_mod_numpy(a, b, P), ref % P)


def test_polymatmul_trims_zero_top_slices():
    a = np.zeros((3, 2, 2), dtype=np.int64)
    a[0] = np.eye(2, dtype=np.int64)
    for mul in (kernels.polymatmul_mod_numba, kernels.polymatmul_mod_numpy):
        assert mul(a, a, P).shape == (1, 2, 2)


@pytest.mark.parametrize("k,n", [(1, 9), (3, 13), (4, 20)])
def test_matpow_trace_flavours_agree(k, n):
    a = build_transfer_matrix(k).matrix.to_array(P)
    t_nb = kernels.matpow_trace_mod(a, n, P, kernels.polymatmul_mod_numba)
    t_np = kernels.matpow_trace_mod(a, n, P, kernels.polymatmul_mod_numpy)
    np.testing.assert_array_equal(t_nb, t_np)


@pytest.mark.parametrize("n,k", [(3, 1), (5, 2), (8, 3), (11, 4), (13, 2)])
def test_census_flavours_agree(n, k):
    g = build_gp(GPParams(n, k))
    nbr = np.array(g.adjacency_masks(), dtype=np.int64)
    np.testing.assert_array_equal(kernels.census_counts_numba(nbr, g.vertex_count),
                                  kernels.census_counts_numpy(nbr, g.vertex_count))


def test_census_empty_graph():
    nbr = np.zeros(3, dtype=np.int64)
    for f in (kernels.census_counts_numba, kernels.census_counts_numpy):
        assert list(f(nbr, 3)) == [1, 3, 3, 1]


def test_aberth_flavours_agree_on_simple_roots():
    coeffs = np.array([24.0, -50.0, 35.0, -10.0, 1.0])  # (x-1)(x-2)(x-3)(x-4)
    z0 = 2.5 + 2.0 * np.exp(1j * (0.3 + 2 * np.pi * np.arange(4) / 4))
    for f in (kernels.aberth_sweeps_numba, kernels.aberth_sweeps_numpy):
        z, its, ok = f(coeffs, z0, 200, 1e-14)
        assert ok
        np.testing.assert_allclose(np.sort(z.real), [1, 2, 3, 4], atol=1e-10)
        np.testing.assert_allclose(z.imag, 0, atol=1e-10)
