"""Root location and exact real-root counting.

Real-rootedness is decided only by Sturm sequences over the integers.
Numeric roots come from Aberth-Ehrlich iteration: a double-precision pass in
the compiled kernel seeds an mpmath pass at ``precision_bits``, which doubles
on failure up to :data:`MAX_PRECISION_BITS`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from . import kernels
from .graph import GPParams
from .poly import IntPoly

RESIDUAL_TOL = 1e-10
PAIR_TOL = 1e-10
DEFAULT_PRECISION_BITS = 128
MAX_PRECISION_BITS = 1024
SEED = 20240601


class RootFindingError(RuntimeError):
    def __init__(self, message, failed=(), residual=math.inf, partial=None):
        super().__init__(message)
        self.failed = tuple(failed)
        self.residual = residual
        self.partial = partial


# --------------------------------------------------------------------------
# exact machinery

def _sign(a) -> int:
    return (a > 0) - (a < 0)


def primitive(p: IntPoly) -> IntPoly:
    """``p`` divided by its content, leading coefficient made positive."""
    if not p:
        return p
    c = p.content()
    if p.lead < 0:
        c = -c
    return IntPoly(tuple(a // c for a in p.coeffs))


def pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """``lead(b)**(deg a - deg b + 1) * a  mod  b`` over the integers."""
    if not b:
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    db, lb = b.degree, b.lead
    if a.degree < db:
        return a
    r = list(a.coeffs)
    e = a.degree - db + 1
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        for i, bc in enumerate(b.coeffs):
            r[shift + i] -= c * bc
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    scale = lb ** e
    return IntPoly(tuple(scale * x for x in r))


def sturm_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """A positive multiple of ``-rem(a, b)``, made primitive."""
    r = pseudo_remainder(a, b)
    delta = a.degree - b.degree + 1
    if b.lead < 0 and delta % 2 == 1:
        r = -r
    if not r:
        return r
    c = r.content()
    return IntPoly(tuple(-x // c for x in r.coeffs))


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient."""
    a, b = primitive(a), primitive(b)
    if a.degree < b.degree:
        a, b = b, a
    while b:
        r = pseudo_remainder(a, b)
        a, b = b, primitive(r)
    return primitive(a) if a else a


def exact_quotient(a: IntPoly, b: IntPoly) -> IntPoly:
    """``a / b`` when ``b`` divides ``a`` with an integer quotient."""
    r = list(a.coeffs)
    q = [0] * max(a.degree - b.degree + 1, 0)
    for s in range(len(q) - 1, -1, -1):
        top = r[s + b.degree]
        c, rem = divmod(top, b.lead)
        if rem:
            raise ArithmeticError("non-integer quotient")
        q[s] = c
        for i, bc in enumerate(b.coeffs):
            r[s + i] -= c * bc
    if any(r):
        raise ArithmeticError("divisor does not divide dividend")
    return IntPoly(tuple(q))


@dataclass(frozen=True)
class SturmChain:
    polys: tuple[IntPoly, ...]

    @classmethod
    def of(cls, p: IntPoly) -> SturmChain:
        chain = [p, p.derivative()]
        while chain[-1] and chain[-1].degree > 0:
            nxt = sturm_remainder(chain[-2], chain[-1])
            if not nxt:
                break
            chain.append(nxt)
        return cls(tuple(q for q in chain if q))

    def signs_at(self, x) -> list[int]:
        if x == math.inf:
            return [_sign(q.lead) for q in self.polys]
        if x == -math.inf:
            return [_sign(q.lead) * (-1) ** q.degree for q in self.polys]
        return [_sign(q(Fraction(x))) for q in self.polys]

    def variations(self, x) -> int:
        s = [v for v in self.signs_at(x) if v]
        return sum(1 for a, b in zip(s, s[1:]) if a != b)

    def count(self, lo=-math.inf, hi=math.inf) -> int:
        """Distinct real roots in ``(lo, hi]``."""
        return self.variations(lo) - self.variations(hi)


def count_distinct_real_roots(p: IntPoly, lo=-math.inf, hi=math.inf) -> int:
    if p.degree < 1:
        return 0
    return SturmChain.of(p).count(lo, hi)


def count_real_roots(p: IntPoly, lo=-math.inf, hi=math.inf) -> int:
    """Real roots in ``(lo, hi]`` counted with multiplicity."""
    if p.degree < 1:
        return 0
    g = poly_gcd(p, p.derivative())
    if g.degree < 1:
        return count_distinct_real_roots(p, lo, hi)
    squarefree = exact_quotient(primitive(p), g)
    return count_distinct_real_roots(squarefree, lo, hi) + count_real_roots(g, lo, hi)


def count_nonnegative_roots(p: IntPoly) -> int:
    """Real roots in ``[0, inf)`` with multiplicity."""
    zero_mult = 0
    while zero_mult < len(p) and p.coeffs[zero_mult] == 0:
        zero_mult += 1
    return zero_mult + count_real_roots(p, 0, math.inf)


# --------------------------------------------------------------------------
# numeric roots

@dataclass(frozen=True)
class RootReport:
    degree: int
    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    exact_real_count: int
    precision_bits: int
    nonnegative_real_count: int = field(default=0)

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)

    @property
    def is_real_rooted(self) -> bool:
        return self.exact_real_count == self.degree

    @property
    def pairs(self) -> list[tuple[float, float]]:
        return [(z.real, z.imag) for z in self.roots]

    def numeric_real_count(self, tol=1e-6) -> int:
        return sum(1 for z in self.roots if abs(z.imag) < tol)

    def min_separation(self) -> float:
        z = np.array(self.roots)
        if z.size < 2:
            return math.inf
        d = np.abs(z[:, None] - z[None, :])
        np.fill_diagonal(d, np.inf)
        return float(d.min())


def initial_guesses(p: IntPoly, seed: int = SEED) -> np.ndarray:
    d = p.degree
    a0 = next(a for a in p.coeffs if a)
    radius = (abs(a0) / abs(p.lead)) ** (1.0 / d) if a0 else 1.0
    rng = np.random.default_rng(seed)
    angles = 2 * np.pi * np.arange(d) / d + 0.4 + 0.1 * rng.random(d)
    radii = radius * (1.0 + 0.05 * rng.random(d))
    return radii * np.exp(1j * angles)


def _scaled_residual(p: IntPoly, z) -> mpmath.mpf:
    scale = max(1, abs(p.lead) * max(1, abs(z)) ** p.degree)
    return abs(p(z)) / scale


def _mp_aberth(p: IntPoly, z: list, maxiter: int) -> bool:
    """In-place Aberth sweeps at the current mpmath precision.

    A root stops moving once its correction is below ``2**(-3/4 prec)`` or
    ``|p(z)|`` is within the round-off bound of Horner evaluation.
    """
    c = [mpmath.mpf(a) for a in p.coeffs]
    absc = [abs(a) for a in c]
    d = len(c) - 1
    eps = mpmath.mpf(2) ** (-mpmath.mp.prec)
    tol = mpmath.mpf(2) ** (-(mpmath.mp.prec * 3 // 4))
    m = len(z)
    active = [True] * m
    for _ in range(maxiter):
        w = [mpmath.mpc(0)] * m
        for i in range(m):
            if not active[i]:
                continue
            zi = z[i]
            pz, dpz = c[d], mpmath.mpc(0)
            for q in range(d - 1, -1, -1):
                dpz = dpz * zi + pz
                pz = pz * zi + c[q]
            r = abs(zi)
            bound = absc[d]
            for q in range(d - 1, -1, -1):
                bound = bound * r + absc[q]
            if abs(pz) <= 4 * (d + 1) * eps * bound:
                active[i] = False
                continue
            s = mpmath.fsum(1 / (zi - z[j]) for j in range(m) if j != i)
            ratio = pz / dpz
            w[i] = ratio / (1 - ratio * s)
        for i in range(m):
            if active[i]:
                z[i] -= w[i]
                if abs(w[i]) <= tol * max(1, abs(z[i])):
                    active[i] = False
        if not any(active):
            return True
    return False


def _pair_conjugates(roots: list[complex], noise: float = 0.0) -> list[complex]:
    """Check conjugate closure and symmetrise pairs; raises on failure.

    Imaginary parts below ``noise * max(1, |z|)`` are set to zero. This only
    affects reported values, never the real-rootedness verdict.
    """
    roots = [complex(z.real, 0.0) if abs(z.imag) <= noise * max(1.0, abs(z)) else z
             for z in roots]
    order = sorted(roots, key=lambda z: (z.real, abs(z.imag)))
    out = []
    i = 0
    while i < len(order):
        z = order[i]
        tol = PAIR_TOL * max(1.0, abs(z))
        if abs(z.imag) <= tol:
            out.append(z)
            i += 1
            continue
        if i + 1 < len(order):
            w = order[i + 1]
            if abs(z - w.conjugate()) <= tol:
                re = 0.5 * (z.real + w.real)
                im = 0.5 * (abs(z.imag) + abs(w.imag))
                out.extend([complex(re, -im), complex(re, im)])
                i += 2
                continue
        raise RootFindingError(f"root {z} has no conjugate partner within {PAIR_TOL}")
    return sorted(out, key=lambda z: (z.real, z.imag))


def find_roots(p: IntPoly, precision_bits: int = DEFAULT_PRECISION_BITS,
               seed: int = SEED, max_precision_bits: int = MAX_PRECISION_BITS) -> RootReport:
    d = p.degree
    if d < 1:
        raise ValueError("find_roots needs degree >= 1")
    coeffs = np.array([float(a) for a in p.coeffs])
    z0 = initial_guesses(p, seed)
    seeds, _, _ = kernels.aberth_sweeps(coeffs, z0, 500, 1e-14)
    if not np.all(np.isfinite(seeds)):
        seeds = z0

    prec = precision_bits
    z = None
    while True:
        with mpmath.workprec(prec):
            if z is None:
                z = [mpmath.mpc(complex(s)) for s in seeds]
            else:
                z = [mpmath.mpc(s) for s in z]
            converged = _mp_aberth(p, z, maxiter=100 + 4 * d)
            residuals = [_scaled_residual(p, r) for r in z]
            failed = [i for i, r in enumerate(residuals) if r > RESIDUAL_TOL]
        if converged and not failed:
            break
        if prec >= max_precision_bits:
            partial = [complex(r) for r in z]
            raise RootFindingError(
                f"no convergence at {prec} bits; roots {failed} above residual tolerance",
                failed=failed, residual=float(max(residuals)), partial=partial)
        prec *= 2

    values = [complex(r) for r in z]
    paired = _pair_conjugates(values, noise=2.0 ** (-(prec // 2)))
    # residuals re-evaluated at the reported (symmetrised, double) values
    with mpmath.workprec(prec):
        res = tuple(float(_scaled_residual(p, mpmath.mpc(r))) for r in paired)
    return RootReport(
        degree=d,
        roots=tuple(paired),
        residuals=res,
        exact_real_count=count_real_roots(p),
        precision_bits=prec,
        nonnegative_real_count=count_nonnegative_roots(p),
    )


def classify_parity_instance(params: GPParams, precision_bits: int = DEFAULT_PRECISION_BITS,
                             poly: IntPoly | None = None):
    """Exact real-rootedness verdict for GP(n, k) plus its numeric roots."""
    from .transfer import independence_polynomial

    if params.n < 2 * params.k + 1:
        raise ValueError("require n >= 2k + 1")
    if poly is None:
        poly = independence_polynomial(params)
    report = find_roots(poly, precision_bits=precision_bits)
    return report.is_real_rooted, report
