"""Antiregular graphs and the two-antiregular bridged construction.

``combine(k)`` places the antiregular graphs on ``ceil(k/2)`` and
``floor(k/2)`` vertices side by side and adds one edge from the dominating
vertex of the larger one to the first vertex of the repeated-degree pair of
the smaller one.  The result is single-input controllable with diameter 4
and maximum degree ``ceil(k/2)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .control import ControlMatrix, kalman_rank
from .exactla import (
    Matrix,
    char_poly,
    eig_sym_float,
    is_squarefree,
    jacobi_eigh,
    mat_vec,
    poly_derivative,
    poly_eval,
)
from .threshold import ThresholdGraph, graph_from_string


class DisconnectedGraphError(ValueError):
    pass


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


def antiregular_string(k: int) -> tuple[int, ...]:
    """Alternating unions and joins, ending with a join."""
    if k < 2:
        raise ValueError("antiregular graphs need k >= 2")
    return tuple((k - t) % 2 for t in range(1, k))


def antiregular(k: int) -> ThresholdGraph:
    return graph_from_string(antiregular_string(k))


@dataclass(frozen=True)
class CombinedGraph:
    k: int
    kappa_hi: int
    kappa_lo: int
    L_c: Matrix = field(repr=False)
    z: tuple[int, ...] = field(repr=False)
    L: Matrix = field(repr=False)

    @property
    def bridge(self) -> tuple[int, int]:
        """1-based endpoints of the added edge."""
        return 1, self.kappa_hi + _ceil_half(self.kappa_lo)

    @property
    def delta(self) -> int:
        """1 when the larger block's repeated-degree pair is adjacent (even size)."""
        return int(self.kappa_hi % 2 == 0)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "bridge": list(self.bridge),
            "laplacian": [list(r) for r in self.L],
        }


def combine(k: int) -> CombinedGraph:
    if k < 4:
        raise ValueError("the combined graph needs k >= 4")
    hi, lo = _ceil_half(k), k // 2
    La = antiregular(hi).laplacian
    Lb = antiregular(lo).laplacian
    Lc = [[0] * k for _ in range(k)]
    for i in range(hi):
        Lc[i][:hi] = list(La[i])
    for i in range(lo):
        Lc[hi + i][hi:] = list(Lb[i])
    z = [0] * k
    z[0] = 1
    z[hi + _ceil_half(lo) - 1] = -1
    L = [[Lc[i][j] + z[i] * z[j] for j in range(k)] for i in range(k)]
    return CombinedGraph(k, hi, lo, Lc, tuple(z), L)


def lambda_set(kappa_hi: int) -> list[int]:
    """``{0, ..., kappa_hi - 1}`` without ``ceil(kappa_hi / 2)``: the spectrum of
    the larger block minus its dominating eigenvalue."""
    skip = _ceil_half(kappa_hi)
    return [x for x in range(kappa_hi) if x != skip]


def certify_distinct_spectrum(g: CombinedGraph | Sequence[Sequence[int]]) -> bool:
    """Exact certificate that every Laplacian eigenvalue is simple.

    For a combined graph the integer eigenvalues inherited from the larger
    block are additionally confirmed to be simple roots.
    """
    L = g.L if isinstance(g, CombinedGraph) else g
    p = char_poly(L)
    if not is_squarefree(p):
        return False
    if isinstance(g, CombinedGraph):
        dp = poly_derivative(p)
        for lam in lambda_set(g.kappa_hi):
            if poly_eval(p, lam) != 0 or poly_eval(dp, lam) == 0:
                raise AssertionError(f"integer eigenvalue {lam} is not a simple root")
    return True


def interlacing_check(g: CombinedGraph, tol: float = 1e-9) -> bool:
    """Rank-one interlacing of the bridged spectrum against the block one.

    Besides the weak chain ``mu_i <= nu_i <= mu_{i+1}`` the strict pattern
    ``mu_{2i} < nu_{2i} < mu_{2i+1}`` (1-based) must hold with margin
    ``tol``.
    """
    mu = eig_sym_float(g.L_c, tol=min(tol, 1e-10))
    nu = eig_sym_float(g.L, tol=min(tol, 1e-10))
    k = g.k
    for i in range(k):
        if mu[i] > nu[i] + tol:
            return False
        if i + 1 < k and nu[i] > mu[i + 1] + tol:
            return False
    for i in range(1, k // 2 + 1):
        if 2 * i + 1 > k:
            break
        lo, mid, hi = mu[2 * i - 1], nu[2 * i - 1], mu[2 * i]
        if not (lo + tol < mid < hi - tol):
            return False
    return True


def theorem6_check(g: CombinedGraph, floor: float = 1e-6, residual: float = 1e-8) -> bool:
    """Entries ``ceil(kappa_hi/2)`` and the next one (1-based) of every unit
    eigenvector exceed ``floor`` in magnitude."""
    if not certify_distinct_spectrum(g):
        raise ValueError("spectrum is not simple; eigenvectors are not unique")
    w, V = jacobi_eigh(g.L, tol=1e-12)
    A = np.array(g.L, dtype=float)
    a = _ceil_half(g.kappa_hi) - 1
    for j in range(g.k):
        v = V[:, j] / np.linalg.norm(V[:, j])
        if np.linalg.norm(A @ v - w[j] * v) >= residual:
            raise RuntimeError(f"eigenvector {j} residual too large")
        if abs(v[a]) <= floor or abs(v[a + 1]) <= floor:
            return False
    return True


def block_eigenvectors_persist(g: CombinedGraph) -> bool:
    """Eigenvectors of the larger block with a zero first entry, zero-padded,
    stay eigenvectors of the bridged Laplacian (exact check)."""
    from .spectra import eigvecs_algorithm1

    La = antiregular(g.kappa_hi).laplacian
    basis = eigvecs_algorithm1(La)
    wanted = set(lambda_set(g.kappa_hi)) - {0}
    for j, lam in enumerate(basis.eigenvalues):
        if lam not in wanted:
            continue
        v = basis.column(j)
        if v[0] != 0:
            return False
        padded = v + [0] * g.kappa_lo
        if mat_vec(g.L, padded) != [lam * x for x in padded]:
            return False
        wanted.discard(lam)
    return not wanted


def corollary2_check(k: int, b_bar: Sequence[int]) -> tuple[bool, bool, bool]:
    """The three equivalent statements for a zero-padded binary input."""
    if k < 4:
        raise ValueError("k must be at least 4")
    hi = _ceil_half(k)
    if len(b_bar) != hi or any(x not in (0, 1) for x in b_bar):
        raise ValueError(f"b_bar must be a binary vector of length {hi}")
    La = antiregular(hi).laplacian
    s1 = kalman_rank(La, ControlMatrix(tuple((x,) for x in b_bar), "binary")) == hi
    a = _ceil_half(hi) - 1
    s2 = b_bar[a] + b_bar[a + 1] == 1
    b = list(b_bar) + [0] * (k - hi)
    s3 = kalman_rank(combine(k).L, ControlMatrix(tuple((x,) for x in b), "binary")) == k
    if not s1 == s2 == s3:
        raise AssertionError(f"equivalence violated for k={k}, b_bar={tuple(b_bar)}: {(s1, s2, s3)}")
    return s1, s2, s3


def graph_stats(L: Sequence[Sequence[int]]) -> tuple[int, int]:
    """(diameter, maximum degree) of the graph with Laplacian ``L``."""
    k = len(L)
    adj = [[j for j in range(k) if j != i and L[i][j] != 0] for i in range(k)]
    diameter = 0
    for src in range(k):
        dist = [-1] * k
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        if min(dist) < 0:
            raise DisconnectedGraphError("graph is disconnected: diameter is infinite")
        diameter = max(diameter, max(dist))
    return diameter, max(L[i][i] for i in range(k))


def path_laplacian(k: int) -> Matrix:
    L = [[0] * k for _ in range(k)]
    for i in range(k - 1):
        L[i][i + 1] = L[i + 1][i] = -1
    for i in range(k):
        L[i][i] = -sum(L[i])
    return L
