"""Transfer matrix T_k for GP(n, k) and the trace formula Ind = Tr(T_k^n).

A state at step j records the occupancy of ``(u_j, v_j, v_{j-1}, ..., v_{j-k+1})``
in bits 0, 1, 2, ..., k. ``T_k[A, B]`` is ``x**(u_j + v_j)`` of ``B`` when ``B``
may follow ``A``, and 0 otherwise. Only the two vertices entering at step j
are weighted; the history bits of ``B`` were already counted at earlier steps.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import GPParams, ParamError
from .poly import IntPoly, PolyMatrix, ZERO, mat_pow_trace

MAX_K = 6


@dataclass(frozen=True, order=True)
class TransferState:
    bits: int
    k: int

    @property
    def u(self) -> int:
        return self.bits & 1

    @property
    def v(self) -> int:
        return (self.bits >> 1) & 1

    def history(self, i: int) -> int:
        """Occupancy of ``v_{j-i}`` for ``1 <= i <= k - 1``."""
        return (self.bits >> (1 + i)) & 1

    @property
    def oldest(self) -> int:
        """Occupancy of the last inner vertex in the window, ``v_{j-k+1}``."""
        return (self.bits >> self.k) & 1

    @property
    def weight(self) -> int:
        return self.u + self.v

    def __str__(self):
        return "".join(str((self.bits >> i) & 1) for i in range(self.k + 1))


def enumerate_states(k: int) -> list[TransferState]:
    if k < 1:
        raise ParamError(f"require k >= 1 (got k={k})")
    return [TransferState(b, k) for b in range(1 << (k + 1))]


def transition_allowed(a: TransferState, b: TransferState, k: int) -> bool:
    for i in range(1, k):
        # b's v_{j-i} is a's v_{(j-1)-(i-1)}
        if b.history(i) != (a.bits >> i) & 1:
            return False
    if b.u and a.u:
        return False
    if b.u and b.v:
        return False
    # a.oldest is v_{(j-1)-k+1} = v_{j-k}
    if b.v and a.oldest:
        return False
    return True


@dataclass(frozen=True)
class TransferMatrix:
    k: int
    matrix: PolyMatrix
    states: tuple[TransferState, ...]

    @property
    def dim(self) -> int:
        return self.matrix.dim

    def index_of(self, state: TransferState) -> int:
        return self.states.index(state)


def build_transfer_matrix(k: int, order=None) -> TransferMatrix:
    """Build T_k. ``order`` optionally permutes the state indexing: row ``i``
    corresponds to ``enumerate_states(k)[order[i]]``."""
    if not 1 <= k <= MAX_K:
        raise ParamError(f"k must be in [1, {MAX_K}] (got k={k})")
    states = enumerate_states(k)
    if order is not None:
        if sorted(order) != list(range(len(states))):
            raise ValueError("order must be a permutation of the state indices")
        states = [states[i] for i in order]
    rows = []
    for a in states:
        rows.append(tuple(IntPoly.monomial(b.weight) if transition_allowed(a, b, k) else ZERO
                          for b in states))
    return TransferMatrix(k, PolyMatrix(tuple(rows)), tuple(states))


@lru_cache(maxsize=None)
def _cached_matrix(k: int) -> TransferMatrix:
    return build_transfer_matrix(k)


def independence_polynomial(params: GPParams, method: str = "modular") -> IntPoly:
    n, k = params.n, params.k
    if n <= k:
        raise ParamError(f"require n > k for the transfer window (got n={n}, k={k})")
    return mat_pow_trace(_cached_matrix(k).matrix, n, method=method)


def gp_polynomial(n: int, k: int, method: str = "modular") -> IntPoly:
    return independence_polynomial(GPParams(n, k), method=method)
