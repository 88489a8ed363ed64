"""Hot inner loops, each in a numba flavour and a pure-numpy flavour.

The public names at the bottom dispatch on :data:`ipgp._accel.USE_NUMBA`.
Both flavours are importable directly so tests and the benchmark can compare
them regardless of the environment flag.

Kernels
-------
polymatmul_mod
    Product of two polynomial matrices with coefficients reduced modulo a
    prime ``p < 2**26``. Matrices are stored coefficient-major, shape
    ``(degree + 1, dim, dim)``.
census_counts
    Number of independent sets of each size, given the open-neighbourhood
    bitmask of every vertex of a graph on at most 62 vertices.
aberth_sweeps
    Double-precision Aberth-Ehrlich iteration used to seed the
    extended-precision root finder.
"""
import numpy as np

from ._accel import USE_NUMBA, njit

MAX_MODULUS = 1 << 26
MAX_CENSUS_VERTICES = 62


# --------------------------------------------------------------------------
# polynomial matrix product mod p

def _trim_numpy(c):
    nz = np.flatnonzero(c.reshape(c.shape[0], -1).any(axis=1))
    top = nz[-1] + 1 if nz.size else 1
    return c[:top]


def polymatmul_mod_numpy(a, b, p):
    da, db = a.shape[0], b.shape[0]
    c = np.zeros((da + db - 1, a.shape[1], a.shape[2]), dtype=np.int64)
    for i in range(da):
        if not a[i].any():
            continue
        # entries < 2**26 and dim <= 128 keep every partial sum below 2**63
        prod = np.matmul(a[i], b) % p
        c[i:i + db] = (c[i:i + db] + prod) % p
    return _trim_numpy(c)


@njit
def polymatmul_mod_numba(a, b, p):
    da = a.shape[0]
    db = b.shape[0]
    dim = a.shape[1]
    c = np.zeros((da + db - 1, dim, dim), dtype=np.int64)
    for s in range(da):
        for t in range(db):
            for i in range(dim):
                for j in range(dim):
                    acc = 0
                    for l in range(dim):
                        x = a[s, i, l]
                        if x != 0:
                            acc += x * b[t, l, j]
                    if acc != 0:
                        c[s + t, i, j] = (c[s + t, i, j] + acc % p) % p
    top = c.shape[0]
    while top > 1:
        nonzero = False
        for i in range(dim):
            for j in range(dim):
                if c[top - 1, i, j] != 0:
                    nonzero = True
                    break
            if nonzero:
                break
        if nonzero:
            break
        top -= 1
    return c[:top].copy()


def matpow_trace_mod(a, n, p, mul):
    """Coefficients of ``Tr(a**n) mod p`` by square-and-multiply."""
    result = None
    base = a
    while True:
        if n & 1:
            result = base if result is None else mul(result, base, p)
        n >>= 1
        if not n:
            break
        base = mul(base, base, p)
    return np.trace(result, axis1=1, axis2=2) % p


# --------------------------------------------------------------------------
# independent-set census

def census_counts_numpy(nbr, nv):
    """Level-by-level expansion: each row of ``frontier`` is the candidate mask
    of one independent set, restricted to vertices above its largest member."""
    counts = [1]
    frontier = np.array([(1 << nv) - 1], dtype=np.int64)
    while frontier.size:
        children = []
        for v in range(nv):
            parents = frontier[((frontier >> v) & 1).astype(bool)]
            if parents.size == 0:
                continue
            above = ~np.int64((1 << (v + 1)) - 1)
            children.append(parents & above & ~np.int64(nbr[v]))
        if not children:
            break
        frontier = np.concatenate(children)
        counts.append(frontier.size)
    out = np.zeros(nv + 1, dtype=np.int64)
    out[:len(counts)] = counts
    return out


@njit
def census_counts_numba(nbr, nv):
    counts = np.zeros(nv + 1, dtype=np.int64)
    counts[0] = 1
    rem = np.zeros(nv + 2, dtype=np.int64)
    rem[0] = (np.int64(1) << nv) - 1
    depth = 0
    while depth >= 0:
        r = rem[depth]
        if r == 0:
            depth -= 1
            continue
        low = r & -r
        rem[depth] = r ^ low
        v = 0
        while low > 1:
            low >>= 1
            v += 1
        counts[depth + 1] += 1
        rem[depth + 1] = rem[depth] & ~nbr[v]
        depth += 1
    return counts


# --------------------------------------------------------------------------
# double-precision Aberth-Ehrlich

def aberth_sweeps_numpy(coeffs, z, maxiter, tol):
    z = z.astype(np.complex128).copy()
    c = coeffs[::-1].astype(np.complex128)
    dc = (c[:-1] * np.arange(len(c) - 1, 0, -1)).astype(np.complex128)
    m = len(z)
    for it in range(maxiter):
        pz = np.zeros(m, dtype=np.complex128)
        for a in c:
            pz = pz * z + a
        dpz = np.zeros(m, dtype=np.complex128)
        for a in dc:
            dpz = dpz * z + a
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        s = (1.0 / diff).sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(pz == 0, 0, pz / dpz)
            w = np.where(pz == 0, 0, ratio / (1.0 - ratio * s))
        w[~np.isfinite(w)] = 0
        z = z - w
        if np.all(np.abs(w) <= tol * np.maximum(1.0, np.abs(z))):
            return z, it + 1, True
    return z, maxiter, False


@njit
def aberth_sweeps_numba(coeffs, z0, maxiter, tol):
    z = z0.astype(np.complex128).copy()
    d = coeffs.shape[0] - 1
    m = z.shape[0]
    w = np.zeros(m, dtype=np.complex128)
    for it in range(maxiter):
        done = True
        for i in range(m):
            zi = z[i]
            pz = complex(coeffs[d])
            dpz = 0j
            for q in range(d - 1, -1, -1):
                dpz = dpz * zi + pz
                pz = pz * zi + coeffs[q]
            if pz == 0:
                w[i] = 0
                continue
            s = 0j
            for j in range(m):
                if j != i:
                    s += 1.0 / (zi - z[j])
            ratio = pz / dpz
            wi = ratio / (1.0 - ratio * s)
            if not (np.isfinite(wi.real) and np.isfinite(wi.imag)):
                wi = 0j
            w[i] = wi
        for i in range(m):
            z[i] -= w[i]
            if abs(w[i]) > tol * max(1.0, abs(z[i])):
                done = False
        if done:
            return z, it + 1, True
    return z, maxiter, False


if USE_NUMBA:
    polymatmul_mod = polymatmul_mod_numba
    census_counts = census_counts_numba
    aberth_sweeps = aberth_sweeps_numba
else:
    polymatmul_mod = polymatmul_mod_numpy
    census_counts = census_counts_numpy
    aberth_sweeps = aberth_sweeps_numpy
