"""Integer orthogonal Laplacian eigenbasis of a connected threshold graph.

The basis is read off the Laplacian itself: flip the strict upper triangle
(``v -> -1 - v``), rebalance each diagonal entry so its column sums to
zero, drop the one column that vanishes and append the constant vector
for eigenvalue 0.  Column ``j`` then pairs with the ``j``-th conjugate
degree ``d*_j``.  The constant column is stored as all ``-1`` so that every
off-diagonal block of ``V`` is ``-1`` or ``0``, the sign the other columns
already carry.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .exactla import Matrix, dot, mat_mul, mat_vec, transpose
from .threshold import DegreeSequence, conjugate, is_canonical_threshold_laplacian, value_classes


@dataclass(frozen=True)
class EigenBasis:
    V: Matrix
    eigenvalues: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.eigenvalues)

    def column(self, j: int) -> list[int]:
        return [row[j] for row in self.V]

    def columns(self) -> list[list[int]]:
        return transpose(self.V)

    def eigenspaces(self) -> dict[int, list[int]]:
        """Eigenvalue -> indices of the basis columns carrying it."""
        groups: dict[int, list[int]] = {}
        for j, lam in enumerate(self.eigenvalues):
            groups.setdefault(lam, []).append(j)
        return groups

    def to_json(self) -> dict:
        return {"eigenvalues": list(self.eigenvalues), "V": [list(r) for r in self.V]}


def eigvecs_algorithm1(L: Sequence[Sequence[int]], counters: dict | None = None) -> EigenBasis:
    """Eigenbasis of a canonical threshold Laplacian.

    If ``counters`` is given it receives the number of flipped upper
    entries (``"flips"``) and additions spent on the diagonal updates
    (``"diag_additions"``).
    """
    if not is_canonical_threshold_laplacian(L):
        raise ValueError("input is not a threshold Laplacian in canonical nested form")
    k = len(L)
    if k >= 2 and L[0][0] != k - 1:
        raise ValueError("graph is disconnected (no dominating vertex)")
    V = [list(row) for row in L]
    flips = adds = 0
    for j in range(1, k):
        for i in range(j):
            V[i][j] = -1 - V[i][j]
            flips += 1
        V[j][j] = -sum(V[i][j] for i in range(k) if i != j)
        adds += k - 2
    zero_cols = [j for j in range(k) if all(V[i][j] == 0 for i in range(k))]
    if len(zero_cols) != 1:
        raise AssertionError(f"expected exactly one zero column, found {zero_cols}")
    drop = zero_cols[0]
    V = [[x for j, x in enumerate(row) if j != drop] + [-1] for row in V]
    if counters is not None:
        counters["flips"] = flips
        counters["diag_additions"] = adds
        counters["zero_column"] = drop
    dstar = conjugate([L[i][i] for i in range(k)])
    return EigenBasis(V, tuple(dstar))


class BasisCheck(NamedTuple):
    ok: bool
    column: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def verify_eigenbasis(L: Sequence[Sequence[int]], basis: EigenBasis) -> BasisCheck:
    """Exact check of ``L V = V D*`` and pairwise orthogonality of columns."""
    V = basis.V
    k = len(L)
    if len(V) != k or any(len(r) != k for r in V) or len(basis.eigenvalues) != k:
        return BasisCheck(False, None, "shape mismatch")
    LV = mat_mul(L, V)
    for j, lam in enumerate(basis.eigenvalues):
        col = [V[i][j] for i in range(k)]
        if not any(col):
            return BasisCheck(False, j, "zero column")
        if any(LV[i][j] != lam * col[i] for i in range(k)):
            return BasisCheck(False, j, "not an eigenvector")
    G = mat_mul(transpose(V), V)
    for a in range(k):
        for b in range(a + 1, k):
            if G[a][b]:
                return BasisCheck(False, b, f"columns {a} and {b} not orthogonal")
    return BasisCheck(True)


def swap_entries_eigvec(v: Sequence[int], i: int, j: int, d: Sequence[int]) -> list[int]:
    """Exchange entries ``i`` and ``j`` (0-based) of an eigenvector.

    Vertices of equal degree in a threshold graph are twins, so the swap
    is an automorphism and keeps ``v`` an eigenvector for the same value.
    """
    if d[i] != d[j]:
        raise ValueError(f"vertices {i} and {j} have different degrees ({d[i]} != {d[j]})")
    w = list(v)
    w[i], w[j] = w[j], w[i]
    return w


def is_eigenvector(L: Sequence[Sequence[int]], v: Sequence[int], lam) -> bool:
    return any(v) and all(a == lam * b for a, b in zip(mat_vec(L, v), v))


def closed_form_column(d: Sequence[int], ell: int) -> list[int]:
    """Column for vertex ``ell`` (1-based, past the trace) in closed form:
    zeros on the ``d_ell`` neighbours, -1 on the non-neighbours before it,
    and the balancing entry on the diagonal."""
    k = len(d)
    de = d[ell - 1]
    gap = ell - 1 - de
    return [0] * de + [-1] * gap + [gap] + [0] * (k - ell)


@dataclass
class BlockReport:
    n: int
    zero_sum_nn: bool
    zero_in: bool
    ones_nj: bool
    uniform_ij: bool
    failures: list[str]

    @property
    def ok(self) -> bool:
        return self.zero_sum_nn and self.zero_in and self.ones_nj and self.uniform_ij


def lemma1_block_report(basis: EigenBasis, d: Sequence[int] | DegreeSequence) -> BlockReport:
    """Block structure of the Algorithm-1 basis.

    Rows are grouped by degree class and columns by conjugate class (the
    trailing eigenvalue-0 column is left out).  ``n`` is the class holding
    ``d_{tau+1}``; the report checks that column block ``n`` sums to zero
    on row block ``n`` and vanishes elsewhere, that row block ``n`` is all
    -1 outside it, and that every other off-diagonal block is constant
    -1 or constant 0.
    """
    ds = d if isinstance(d, DegreeSequence) else DegreeSequence(tuple(d))
    k = ds.k
    failures: list[str] = []
    row_b = ds.prefix
    col_classes = value_classes(list(basis.eigenvalues))
    if col_classes and col_classes[-1][0] == 0:
        col_classes = col_classes[:-1]
    col_b = [0]
    for _, m in col_classes:
        col_b.append(col_b[-1] + m)
    kt = len(ds.classes)
    if k == 1 or len(col_classes) != kt:
        return BlockReport(-1, k == 1, k == 1, k == 1, k == 1,
                           [] if k == 1 else ["column classes do not align with degree classes"])
    tau = ds.trace
    n = ds.distinct.index(ds.d[tau])

    def block(i, j):
        return [basis.V[r][col_b[j]:col_b[j + 1]] for r in range(row_b[i], row_b[i + 1])]

    nn = block(n, n)
    zero_sum = all(sum(row[c] for row in nn) == 0 for c in range(col_b[n + 1] - col_b[n]))
    if not zero_sum:
        failures.append("V_nn columns do not sum to zero")
    zero_in = all(all(x == 0 for row in block(i, n) for x in row) for i in range(kt) if i != n)
    if not zero_in:
        failures.append("V_in not zero")
    ones_nj = all(all(x == -1 for row in block(n, j) for x in row) for j in range(kt) if j != n)
    if not ones_nj:
        failures.append("V_nj not all -1")
    uniform = True
    for i in range(kt):
        for j in range(kt):
            if j == n or i == j:
                continue
            vals = {x for row in block(i, j) for x in row}
            if not (vals <= {-1} or vals <= {0}):
                uniform = False
                failures.append(f"V_{i + 1}{j + 1} mixes values {sorted(vals)}")
    return BlockReport(n + 1, zero_sum, zero_in, ones_nj, uniform, failures)


def orthogonal(u: Sequence[int], v: Sequence[int]) -> bool:
    return dot(u, v) == 0
