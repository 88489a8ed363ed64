"""Exact integer polynomials and square polynomial matrices.

:class:`IntPoly` is a dense, canonical (trailing zeros trimmed) polynomial with
Python ``int`` coefficients, lowest power first. :class:`PolyMatrix` holds a
square array of them.

``mat_pow_trace`` is the workhorse. It reduces the matrix modulo several
primes, runs square-and-multiply in the compiled kernel for each prime, and
rebuilds the exact integer trace by Chinese remaindering. The number of primes
comes from an a-priori bound on the result's coefficients, so the
reconstruction is exact.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import kernels


class PolyError(ValueError):
    pass


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(a) for a in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> IntPoly:
        return cls((0,) * power + (coeff,))

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else poly_add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else poly_add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else poly_mul(self, other)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0 * x
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def derivative(self) -> IntPoly:
        return IntPoly(tuple(i * a for i, a in enumerate(self.coeffs))[1:])

    def content(self) -> int:
        from math import gcd

        g = 0
        for a in self.coeffs:
            g = gcd(g, a)
        return g

    def to_json(self) -> dict:
        return {"coeffs": [str(a) for a in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> IntPoly:
        return cls(tuple(int(s) for s in obj["coeffs"]))

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def loads(cls, text: str) -> IntPoly:
        return cls.from_json(json.loads(text))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if i == 0:
                terms.append(str(a))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if a == 1 else f"{a}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


ZERO = IntPoly()
ONE = IntPoly((1,))
X = IntPoly((0, 1))


def _coerce(obj) -> IntPoly:
    if isinstance(obj, IntPoly):
        return obj
    if isinstance(obj, int):
        return IntPoly((obj,))
    return NotImplemented


def poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    if len(a) < len(b):
        a, b = b, a
    c = list(a.coeffs)
    for i, x in enumerate(b.coeffs):
        c[i] += x
    return IntPoly(tuple(c))


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ZERO
    c = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                c[i + j] += x * y
    return IntPoly(tuple(c))


# --------------------------------------------------------------------------
# matrices

@dataclass(frozen=True)
class PolyMatrix:
    entries: tuple[tuple[IntPoly, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(_coerce(e) for e in row) for row in self.entries)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise PolyError("PolyMatrix must be square with dim >= 1")
        object.__setattr__(self, "entries", rows)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @classmethod
    def identity(cls, dim: int) -> PolyMatrix:
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(dim))
                         for i in range(dim)))

    @classmethod
    def zeros(cls, dim: int) -> PolyMatrix:
        return cls(tuple((ZERO,) * dim for _ in range(dim)))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> PolyMatrix:
        def conv(e):
            if isinstance(e, IntPoly):
                return e
            if isinstance(e, int):
                return IntPoly((e,))
            return IntPoly(tuple(e))

        return cls(tuple(tuple(conv(e) for e in row) for row in rows))

    def trace(self) -> IntPoly:
        t = ZERO
        for i in range(self.dim):
            t = t + self.entries[i][i]
        return t

    @property
    def max_degree(self) -> int:
        return max(e.degree for row in self.entries for e in row)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def to_array(self, modulus: int | None = None) -> np.ndarray:
        """Coefficient-major int64 array ``(degree + 1, dim, dim)``; entries
        must fit in int64 unless reduced by ``modulus``."""
        depth = max(self.max_degree, 0) + 1
        out = np.zeros((depth, self.dim, self.dim), dtype=np.int64)
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                for d, a in enumerate(e.coeffs):
                    out[d, i, j] = a % modulus if modulus else a
        return out


def mat_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    """Exact schoolbook product over Python integers."""
    if a.dim != b.dim:
        raise PolyError(f"dimension mismatch: {a.dim} vs {b.dim}")
    n = a.dim
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = ZERO
            for l in range(n):
                x = a.entries[i][l]
                y = b.entries[l][j]
                if x and y:
                    acc = acc + poly_mul(x, y)
            row.append(acc)
        rows.append(tuple(row))
    return PolyMatrix(tuple(rows))


def mat_pow(m: PolyMatrix, n: int) -> PolyMatrix:
    """``m**n`` by binary exponentiation in exact integer arithmetic."""
    if n < 1:
        raise PolyError("exponent must be >= 1")
    result = None
    base = m
    while True:
        if n & 1:
            result = base if result is None else mat_mul(result, base)
        n >>= 1
        if not n:
            return result
        base = mat_mul(base, base)


# --------------------------------------------------------------------------
# multi-modular trace of a power

def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def _primes_below(bound: int):
    q = bound - 1
    while q > 2:
        if _is_prime(q):
            yield q
        q -= 1


_PRIMES: list[int] = []


def _primes(count: int) -> list[int]:
    if len(_PRIMES) < count:
        gen = _primes_below(kernels.MAX_MODULUS if not _PRIMES else _PRIMES[-1])
        while len(_PRIMES) < count:
            _PRIMES.append(next(gen))
    return _PRIMES[:count]


def trace_power_bound(m: PolyMatrix, n: int) -> int:
    """Upper bound on ``|coeff|`` of ``Tr(m**n)``.

    With ``r`` the largest row sum of absolute coefficient sums, every
    coefficient of every entry of ``m**n`` is at most ``r**n``.
    """
    r = max(sum(sum(abs(a) for a in e.coeffs) for e in row) for row in m.entries)
    return m.dim * r ** n


def crt_signed(residues: Sequence[Sequence[int]], moduli: Sequence[int]) -> list[int]:
    """Combine per-prime residue vectors into symmetric-range integers."""
    total = 1
    for q in moduli:
        total *= q
    values = [0] * len(residues[0])
    mod = 1
    for res, q in zip(residues, moduli):
        inv = pow(mod, -1, q)
        for i, r in enumerate(res):
            values[i] += mod * (((int(r) - values[i]) * inv) % q)
        mod *= q
    half = total // 2
    return [v - total if v > half else v for v in values]


def mat_pow_trace(m: PolyMatrix, n: int, method: str = "modular") -> IntPoly:
    """``Tr(m**n)`` exactly.

    ``method="modular"`` uses the compiled kernel with Chinese remaindering;
    ``method="exact"`` runs :func:`mat_pow` over Python integers.
    """
    if n < 1:
        raise PolyError("exponent must be >= 1")
    if method == "exact":
        return mat_pow(m, n).trace()
    if method != "modular":
        raise PolyError(f"unknown method {method!r}")
    if m.dim > 128:
        raise PolyError("modular kernel supports dim <= 128")
    if m.max_degree < 0:
        return ZERO
    bound = trace_power_bound(m, n)
    moduli = []
    prod = 1
    for q in _primes(1 + (2 * bound + 1).bit_length() // 25):
        moduli.append(q)
        prod *= q
        if prod > 2 * bound:
            break
    length = n * m.max_degree + 1
    residues = []
    for q in moduli:
        tr = matpow_trace_mod(m.to_array(q), n, q)
        row = np.zeros(length, dtype=np.int64)
        row[:len(tr)] = tr
        residues.append(row.tolist())
    return IntPoly(tuple(crt_signed(residues, moduli)))


def matpow_trace_mod(a: np.ndarray, n: int, p: int) -> np.ndarray:
    return kernels.matpow_trace_mod(a, n, p, kernels.polymatmul_mod)
