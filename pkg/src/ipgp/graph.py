"""Generalized Petersen graphs GP(n, k) as explicit edge lists.

Vertex labels: outer ``u_i -> i``, inner ``v_i -> n + i`` for ``0 <= i < n``.
"""
from __future__ import annotations

from dataclasses import dataclass


class ParamError(ValueError):
    pass


@dataclass(frozen=True)
class GPParams:
    n: int
    k: int

    def __post_init__(self):
        check_params(self.n, self.k)


def check_params(n, k):
    if not isinstance(n, int) or not isinstance(k, int):
        raise ParamError("n and k must be integers")
    if n < 3:
        raise ParamError(f"require n >= 3 (got n={n})")
    if k < 1:
        raise ParamError(f"require k >= 1 (got k={k})")
    if 2 * k >= n:
        raise ParamError(f"require k < n/2 (got n={n}, k={k})")


def validate_params(n: int, k: int) -> GPParams:
    return GPParams(n, k)


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        canon = tuple(sorted({(min(a, b), max(a, b)) for a, b in self.edges}))
        for a, b in canon:
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if not 0 <= a < b < self.vertex_count:
                raise ValueError(f"edge ({a}, {b}) out of range")
        object.__setattr__(self, "edges", canon)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbours(self) -> list[set[int]]:
        adj = [set() for _ in range(self.vertex_count)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def degrees(self) -> list[int]:
        return [len(s) for s in self.neighbours()]

    def adjacency_masks(self) -> list[int]:
        masks = [0] * self.vertex_count
        for a, b in self.edges:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        return masks

    def relabel(self, perm) -> Graph:
        """Graph with vertex ``i`` renamed to ``perm[i]``."""
        return Graph(self.vertex_count, tuple((perm[a], perm[b]) for a, b in self.edges))

    def to_edge_list_text(self) -> str:
        lines = [f"p {self.vertex_count} {self.edge_count}"]
        lines.extend(f"e {a} {b}" for a, b in self.edges)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_list_text(cls, text: str) -> Graph:
        nv = None
        edges = []
        for line in text.splitlines():
            parts = line.split()
            if not parts:
                continue
            if parts[0] == "p":
                nv = int(parts[1])
            elif parts[0] == "e":
                edges.append((int(parts[1]), int(parts[2])))
        if nv is None:
            raise ValueError("missing 'p' header line")
        return cls(nv, tuple(edges))


def build_gp(params: GPParams) -> Graph:
    n, k = params.n, params.k
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((n + i, n + (i + k) % n))
        edges.append((i, n + i))
    return Graph(2 * n, tuple(edges))
