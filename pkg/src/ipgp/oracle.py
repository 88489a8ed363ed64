"""Brute-force ground truth for independence polynomials of small graphs.

Two unrelated routes:

* :func:`census` enumerates independent sets directly (compiled kernel,
  candidate-mask pruning);
* :func:`deletion_polynomial` applies ``I(G) = I(G - v) + x I(G - N[v])``
  with memoisation on the remaining vertex mask.

Neither shares code with the transfer-matrix construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .graph import Graph
from .poly import IntPoly, X, ONE

DEFAULT_CAP = 30


class OracleCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Census:
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def alpha(self) -> int:
        return len(self.counts) - 1


def census(g: Graph, cap: int = DEFAULT_CAP, kernel=None) -> Census:
    if g.vertex_count > cap:
        raise OracleCapExceeded(f"graph has {g.vertex_count} vertices; oracle cap is {cap}")
    if g.vertex_count > kernels.MAX_CENSUS_VERTICES:
        raise OracleCapExceeded(f"kernel limited to {kernels.MAX_CENSUS_VERTICES} vertices")
    if g.vertex_count == 0:
        return Census((1,))
    kernel = kernel or kernels.census_counts
    nbr = np.array(g.adjacency_masks(), dtype=np.int64)
    counts = [int(c) for c in kernel(nbr, g.vertex_count)]
    while counts and counts[-1] == 0:
        counts.pop()
    return Census(tuple(counts))


def census_to_poly(c: Census) -> IntPoly:
    return IntPoly(c.counts)


def deletion_polynomial(g: Graph) -> IntPoly:
    """Independence polynomial by vertex deletion; exponential but memoised."""
    adj = g.adjacency_masks()

    @lru_cache(maxsize=None)
    def ind(mask: int) -> IntPoly:
        if mask == 0:
            return ONE
        # branch on the remaining vertex of highest degree to shrink faster
        best, best_deg = -1, -1
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            d = bin(adj[v] & mask).count("1")
            if d > best_deg:
                best, best_deg = v, d
            m ^= low
        v = best
        if best_deg == 0:
            return IntPoly((1, 1)) * ind(mask & ~(1 << v))
        return ind(mask & ~(1 << v)) + X * ind(mask & ~(1 << v) & ~adj[v])

    return ind((1 << g.vertex_count) - 1)
