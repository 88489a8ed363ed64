"""Coefficient diagnostics, root geometry, and the parity sweep over (n, k)."""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Optional

from .graph import GPParams, ParamError
from .poly import IntPoly
from .roots import RootReport, find_roots, DEFAULT_PRECISION_BITS


@dataclass(frozen=True)
class SequenceDiagnostics:
    is_log_concave: bool
    is_unimodal: bool
    newton_ok: bool
    first_violation_index: Optional[int]


def diagnose_sequence(p: IntPoly) -> SequenceDiagnostics:
    """Exact log-concavity, unimodality and Newton checks on the coefficients.

    The Newton form is ``c[s]**2 * s * (a - s) >= c[s-1] * c[s+1] * (s + 1) * (a - s + 1)``
    with ``a`` the degree. ``first_violation_index`` is the smallest ``s``
    failing that inequality (it implies the log-concavity test at the same ``s``).
    """
    c = list(p.coeffs)
    alpha = len(c) - 1
    log_concave = True
    newton_ok = True
    first = None
    for s in range(1, alpha):
        lhs = c[s] * c[s]
        rhs = c[s - 1] * c[s + 1]
        if lhs < rhs:
            log_concave = False
        if lhs * s * (alpha - s) < rhs * (s + 1) * (alpha - s + 1):
            newton_ok = False
            if first is None:
                first = s
    return SequenceDiagnostics(log_concave, is_unimodal(c), newton_ok, first)


def is_unimodal(c) -> bool:
    i = 0
    while i + 1 < len(c) and c[i] <= c[i + 1]:
        i += 1
    while i + 1 < len(c) and c[i] >= c[i + 1]:
        i += 1
    return i >= len(c) - 1


@dataclass(frozen=True)
class RootGeometry:
    max_im: float
    min_re: float
    max_re: float
    center_re: Optional[float]


def root_geometry(report: RootReport, real_tol: float = 1e-6) -> RootGeometry:
    """Extremes of the numeric roots; ``center_re`` averages the non-real ones."""
    z = report.roots
    if not z:
        raise ValueError("empty root report")
    nonreal = [r.real for r in z if abs(r.imag) >= real_tol]
    return RootGeometry(
        max_im=max(abs(r.imag) for r in z) if nonreal else 0.0,
        min_re=min(r.real for r in z),
        max_re=max(r.real for r in z),
        center_re=math.fsum(nonreal) / len(nonreal) if nonreal else None,
    )


@dataclass(frozen=True)
class ConjectureRow:
    n: int
    k: int
    degree: int = 0
    exact_real_count: int = 0
    is_real_rooted: bool = False
    parity_prediction: bool = False
    agrees: bool = False
    max_im: float = math.nan
    min_re: float = math.nan
    max_re: float = math.nan
    error: Optional[str] = None

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, obj) -> ConjectureRow:
        return cls(**obj)


def valid_pairs(n_range: Iterable[int], k_set: Iterable[int], notice: Callable[[str], None] = None):
    pairs = []
    for n in sorted(set(n_range)):
        for k in sorted(set(k_set)):
            if 2 * k >= n or n < 3 or k < 1:
                if notice:
                    notice(f"skipping (n={n}, k={k}): require 1 <= k < n/2 and n >= 2k+1")
                continue
            pairs.append((n, k))
    return pairs


def conjecture_row(n: int, k: int, poly: IntPoly, precision_bits=DEFAULT_PRECISION_BITS):
    """Row plus the root report for one polynomial."""
    report = find_roots(poly, precision_bits=precision_bits)
    geo = root_geometry(report)
    real_rooted = report.is_real_rooted
    prediction = k % 2 == 0
    row = ConjectureRow(
        n=n, k=k, degree=report.degree, exact_real_count=report.exact_real_count,
        is_real_rooted=real_rooted, parity_prediction=prediction,
        agrees=real_rooted == prediction, max_im=geo.max_im,
        min_re=geo.min_re, max_re=geo.max_re,
    )
    return row, report


def _sweep_one(args):
    n, k, precision_bits, poly_source = args
    try:
        poly = poly_source(n, k) if poly_source else _default_poly(n, k)
        row, _ = conjecture_row(n, k, poly, precision_bits)
        return row
    except Exception as exc:  # recorded per pair, never aborts the sweep
        return ConjectureRow(n=n, k=k, parity_prediction=k % 2 == 0,
                             error=f"{type(exc).__name__}: {exc}")


def _default_poly(n, k):
    from .transfer import independence_polynomial

    return independence_polynomial(GPParams(n, k))


def sweep_conjecture(n_range: Iterable[int], k_set: Iterable[int], workers: int = 1,
                     precision_bits: int = DEFAULT_PRECISION_BITS,
                     poly_source: Callable[[int, int], IntPoly] = None,
                     notice: Callable[[str], None] = None) -> list[ConjectureRow]:
    """One :class:`ConjectureRow` per valid pair, in (n, k) lexicographic order.

    ``poly_source(n, k)`` overrides how polynomials are obtained (the CLI passes
    its cache here); it must be picklable when ``workers > 1``.
    """
    pairs = valid_pairs(n_range, k_set, notice)
    jobs = [(n, k, precision_bits, poly_source) for n, k in pairs]
    if workers <= 1 or len(jobs) <= 1:
        return [_sweep_one(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_sweep_one, jobs))


def counterexamples(rows: Iterable[ConjectureRow]) -> list[ConjectureRow]:
    return [r for r in rows if r.error is None and not r.agrees]


__all__ = [
    "SequenceDiagnostics", "diagnose_sequence", "is_unimodal", "RootGeometry",
    "root_geometry", "ConjectureRow", "sweep_conjecture", "valid_pairs",
    "conjecture_row", "counterexamples", "ParamError",
]
