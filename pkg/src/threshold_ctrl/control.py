"""Controllability of ``(L, B)`` on connected threshold graphs.

Three independent deciders are provided:

* ``kalman_rank``: exact rank of the Krylov matrix ``[B, LB, ..., L^{k-1}B]``;
* ``pbh_check``: eigenvector test against the integer basis from
  :mod:`threshold_ctrl.spectra`, one eigenspace at a time;
* ``theorem4_check``: local rank tests on the essential substrings of the
  construction string (binary ``B`` only).

Vertex indices are 0-based in code and 1-based in the JSON ``columns``
shorthand, matching the usual ``e_i`` notation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .exactla import (
    Matrix,
    hstack,
    integerize_columns,
    mat_mul,
    mat_vec,
    nullspace_exact,
    rank_exact,
    transpose,
)
from .spectra import EigenBasis, eigvecs_algorithm1, verify_eigenbasis
from .threshold import (
    ConstructionString,
    DegreeSequence,
    NotThresholdError,
    Succession,
    ThresholdGraph,
    essential_prefixes,
    format_string,
    graph_from_string,
    parse_string,
    string_from_degrees,
    successions,
)

KINDS = ("general", "binary", "terminal")


@dataclass(frozen=True)
class ControlMatrix:
    """``k x p`` input matrix, stored by rows."""

    B: tuple[tuple, ...]
    kind: str = "general"

    def __post_init__(self):
        rows = tuple(tuple(_num(x) for x in row) for row in self.B)
        object.__setattr__(self, "B", rows)
        if self.kind not in KINDS:
            raise ValueError(f"unknown control matrix kind {self.kind!r}")
        if not rows or not rows[0]:
            raise ValueError("control matrix needs at least one row and one column")
        if len({len(r) for r in rows}) != 1:
            raise ValueError("ragged control matrix")
        if self.kind == "binary" and any(x not in (0, 1) for r in rows for x in r):
            raise ValueError("binary control matrix must have 0/1 entries")
        if self.kind == "terminal":
            for j in range(self.p):
                if sum(1 for r in rows if r[j] != 0) != 1:
                    raise ValueError(f"terminal control column {j + 1} must have exactly one nonzero entry")

    @property
    def k(self) -> int:
        return len(self.B)

    @property
    def p(self) -> int:
        return len(self.B[0])

    @property
    def is_binary(self) -> bool:
        return all(x in (0, 1) for r in self.B for x in r)

    def rows(self) -> list[list]:
        return [list(r) for r in self.B]

    def columns(self) -> list[list]:
        return transpose(self.B)

    def support(self) -> list[list[int]]:
        """1-based vertex lists touched by each column."""
        return [[i + 1 for i, x in enumerate(col) if x != 0] for col in self.columns()]

    @classmethod
    def from_columns(cls, k: int, columns: Iterable[Iterable[int]], kind: str = "binary"):
        """Binary matrix from 1-based vertex lists, one list per controller."""
        cols = [list(c) for c in columns]
        B = [[0] * len(cols) for _ in range(k)]
        for j, verts in enumerate(cols):
            for v in verts:
                if not 1 <= v <= k:
                    raise ValueError(f"vertex {v} out of range 1..{k}")
                B[v - 1][j] = 1
        return cls(tuple(map(tuple, B)), kind)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "B": [[_jsonable(x) for x in r] for r in self.B],
            "columns": self.support(),
        }

    @classmethod
    def from_json(cls, obj: dict, k: int | None = None):
        kind = obj.get("kind")
        if "B" in obj:
            B = [[_parse_entry(x) for x in row] for row in obj["B"]]
            if kind is None:
                kind = "binary" if all(x in (0, 1) for r in B for x in r) else "general"
            return cls(tuple(map(tuple, B)), kind)
        if "columns" in obj:
            k = obj.get("k", k)
            if k is None:
                raise ValueError("'columns' shorthand needs the vertex count k")
            return cls.from_columns(k, obj["columns"], kind or "binary")
        raise ValueError("control matrix JSON needs 'B' or 'columns'")


def _num(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    if isinstance(x, int):
        return x
    if isinstance(x, float) and x.is_integer():
        return int(x)
    raise TypeError(f"control entries must be integers or fractions, got {x!r}")


def _parse_entry(x):
    if isinstance(x, str):
        return Fraction(x)
    return x


def _jsonable(x):
    return x if isinstance(x, int) else str(x)


@dataclass
class ControllabilityReport:
    controllable: bool
    method: str
    witness: list[int] | None = None
    eigenvalue: int | None = None
    failing_substring: ConstructionString | None = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.controllable

    def to_json(self) -> dict:
        out = {"controllable": self.controllable, "method": self.method}
        if self.witness is not None:
            out["witness"] = self.witness
            out["eigenvalue"] = self.eigenvalue
        if self.failing_substring is not None:
            out["failing_substring"] = format_string(self.failing_substring)
        out.update(self.details)
        return out


# -- Kalman oracle ------------------------------------------------------------


def kalman_matrix(L: Sequence[Sequence[int]], B: ControlMatrix) -> Matrix:
    k = len(L)
    if B.k != k:
        raise ValueError(f"B has {B.k} rows, Laplacian has {k}")
    block = integerize_columns(B.rows())
    blocks = [block]
    for _ in range(k - 1):
        block = mat_mul(L, block)
        blocks.append(block)
    return hstack(*blocks)


def kalman_rank(L: Sequence[Sequence[int]], B: ControlMatrix) -> int:
    return rank_exact(kalman_matrix(L, B))


def kalman_check(L: Sequence[Sequence[int]], B: ControlMatrix) -> ControllabilityReport:
    r = kalman_rank(L, B)
    return ControllabilityReport(r == len(L), "kalman", details={"kalman_rank": r})


# -- PBH via the exact eigenbasis ----------------------------------------------


def pbh_check(L: Sequence[Sequence[int]], basis: EigenBasis, B: ControlMatrix,
              verify: bool = True) -> ControllabilityReport:
    """Uncontrollable iff some eigenspace holds a vector orthogonal to every
    column of ``B``; such a vector is returned as an integer witness."""
    if B.k != len(L):
        raise ValueError(f"B has {B.k} rows, Laplacian has {len(L)}")
    if verify and not verify_eigenbasis(L, basis):
        raise ValueError("eigenbasis does not verify for this Laplacian")
    Bt = B.columns()
    cols = basis.columns()
    for lam, idx in basis.eigenspaces().items():
        Vl = [cols[j] for j in idx]
        M = [[sum(b * v for b, v in zip(bcol, vcol)) for vcol in Vl] for bcol in Bt]
        if rank_exact(M) < len(idx):
            c = nullspace_exact(M)[0]
            w = [sum(ci * vcol[i] for ci, vcol in zip(c, Vl)) for i in range(len(L))]
            return ControllabilityReport(False, "pbh", witness=w, eigenvalue=lam)
    return ControllabilityReport(True, "pbh")


def pbh_witness_ok(L, B: ControlMatrix, report: ControllabilityReport) -> bool:
    w = report.witness
    if w is None or not any(w):
        return False
    Lw = mat_vec(L, w)
    if any(a != report.eigenvalue * b for a, b in zip(Lw, w)):
        return False
    return all(sum(b * x for b, x in zip(col, w)) == 0 for col in B.columns())


# -- local checking / control matrices ----------------------------------------


@dataclass(frozen=True)
class LocalCheckingMatrix:
    C: Matrix
    S: ConstructionString
    run: Succession
    eigenvalue: int

    @property
    def m(self) -> int:
        return self.run.length

    @property
    def columns(self) -> int:
        return len(self.C[0]) if self.C else 0


def default_key_run(S: Sequence[int]) -> Succession:
    """The succession an essential substring was cut for.

    A lone terminal 1 after a run of zeros is the join that closes that run,
    so the run of zeros is the key; otherwise the final run of ones is.
    """
    runs = successions(S)
    if len(runs) >= 2 and runs[-1].length == 1 and runs[-2].symbol == 0:
        return runs[-2]
    return runs[-1]


def _checking_columns(S: ConstructionString, run: Succession) -> list[list[int]]:
    n = len(S) + 1
    m = run.length
    first = run.start == 0

    def e(i):
        v = [0] * n
        v[i] = 1
        return v

    def sub(a, b):
        return [x - y for x, y in zip(a, b)]

    if run.symbol == 1:
        if run.end != len(S) - 1:
            raise ValueError("a run of ones must end the substring")
        cols = [sub(e(0), e(j)) for j in range(1, m)]
        if first:
            cols.append(sub(e(0), e(m)))
        else:
            last = [0] * n
            last[0] = n - m
            for j in range(m, n):
                last[j] = -1
            cols.append(last)
    else:
        if run.end != len(S) - 2:
            raise ValueError("a run of zeros must be closed by the final join")
        top = n - 1
        cols = [sub(e(top), e(top - j)) for j in range(1, m)]
        if first:
            cols.append(sub(e(top), e(top - m)))
        else:
            last = [0] * n
            last[top] = n - 1 - m
            for j in range(m + 1, n):
                last[n - j] = -1
            cols.append(last)
    return cols


@lru_cache(maxsize=4096)
def _local_checking_cached(S: ConstructionString, run: Succession) -> LocalCheckingMatrix:
    cols = _checking_columns(S, run)
    L = graph_from_string(S).laplacian
    lam = None
    for j, c in enumerate(cols):
        Lc = mat_vec(L, c)
        i = next((i for i, x in enumerate(c) if x), None)
        if i is None or Lc[i] % c[i]:
            raise AssertionError(f"checking column {j + 1} of {format_string(S)} is not an eigenvector")
        mu = Lc[i] // c[i]
        if any(a != mu * b for a, b in zip(Lc, c)) or (lam is not None and mu != lam):
            raise AssertionError(f"checking column {j + 1} of {format_string(S)} is not an eigenvector")
        lam = mu
    return LocalCheckingMatrix(transpose(cols), S, run, lam)


def local_checking_matrix(S: Sequence[int] | str, run: Succession | None = None) -> LocalCheckingMatrix:
    """Checking matrix of an essential substring, validated column by column
    as eigenvectors of the substring's own Laplacian."""
    S = parse_string(S)
    if not S or S[-1] != 1:
        raise ValueError("substring must be nonempty and end in 1")
    return _local_checking_cached(S, run if run is not None else default_key_run(S))


def local_control_matrix(B: ControlMatrix, S: Sequence[int] | str, graph: ThresholdGraph) -> ControlMatrix:
    """Rows of ``B`` on the vertices built by the prefix ``S`` of ``graph``'s string.

    Those vertices sit in a contiguous block of the canonical order, shifted
    right by the number of joins that come after the prefix.
    """
    S = parse_string(S)
    if tuple(graph.string[: len(S)]) != S:
        raise ValueError(f"{format_string(S)} is not a prefix of {format_string(graph.string)}")
    if B.k != graph.k:
        raise ValueError(f"B has {B.k} rows, graph has {graph.k} vertices")
    off = graph.block_offset(len(S))
    rows = B.B[off: off + len(S) + 1]
    return ControlMatrix(rows, "general" if B.kind == "terminal" else B.kind)


def theorem4_check(s: Sequence[int] | str, B: ControlMatrix) -> ControllabilityReport:
    """Binary ``B``: controllable iff every essential substring passes its
    local rank test ``rank(C^T B_hat) == #columns(C)``."""
    s = parse_string(s)
    if not B.is_binary:
        raise ValueError("the essential-substring test requires a binary control matrix")
    g = graph_from_string(s)
    if B.k != g.k:
        raise ValueError(f"B has {B.k} rows, graph has {g.k} vertices")
    checked = []
    for prefix, run in essential_prefixes(s):
        C = local_checking_matrix(prefix, run)
        Bh = local_control_matrix(B, prefix, g)
        M = mat_mul(transpose(C.C), Bh.rows())
        r = rank_exact(M)
        if format_string(prefix) not in checked:
            checked.append(format_string(prefix))
        if r < C.columns:
            return ControllabilityReport(False, "theorem4", failing_substring=prefix,
                                         details={"local_rank": r, "required_rank": C.columns})
    return ControllabilityReport(True, "theorem4", details={"checked": checked})


# -- minimum controllers ------------------------------------------------------


def _threshold_seq(d) -> DegreeSequence:
    ds = d if isinstance(d, DegreeSequence) else DegreeSequence(tuple(d))
    string_from_degrees(ds)  # raises NotThresholdError
    return ds


def min_controllers(d, kind: str) -> int:
    ds = _threshold_seq(d)
    if kind == "binary":
        return max(m for _, m in ds.conjugate_classes)
    if kind == "terminal":
        return ds.k - len(ds.classes)
    raise ValueError(f"kind must be 'binary' or 'terminal', got {kind!r}")


def _binary_connections(ds: DegreeSequence) -> list[tuple[int, int]]:
    """(vertex, controller) pairs, both 0-based, of the degree-class design."""
    p = min_controllers(ds, "binary")
    tau = ds.trace
    pairs = []
    for j, (value, m) in enumerate(ds.classes):
        base = ds.prefix[j]
        for i in range(m - 2):
            pairs.append((base + i, i))
        if value != tau:
            if m >= 2:
                pairs.append((base + m - 2, m - 2))
        else:
            pairs.append((base + m - 1, p - 1))
    return sorted(pairs)


def design_binary_B(d) -> ControlMatrix:
    ds = _threshold_seq(d)
    p = min_controllers(ds, "binary")
    B = [[0] * p for _ in range(ds.k)]
    for v, c in _binary_connections(ds):
        B[v][c] = 1
    ctrl = ControlMatrix(tuple(map(tuple, B)), "binary")
    if ds.k > 1:
        s = string_from_degrees(ds)
        if not theorem4_check(s, ctrl):
            raise AssertionError(f"binary design failed for {ds.d}")
    return ctrl


def design_terminal_B(d) -> ControlMatrix:
    ds = _threshold_seq(d)
    verts = sorted(v for v, _ in _binary_connections(ds))
    p = len(verts)
    if p == 0:
        raise ValueError("a one-vertex graph needs no controllers")
    B = [[0] * p for _ in range(ds.k)]
    for c, v in enumerate(verts):
        B[v][c] = 1
    ctrl = ControlMatrix(tuple(map(tuple, B)), "terminal")
    L = graph_from_string(string_from_degrees(ds)).laplacian
    if kalman_rank(L, ctrl) != ds.k:
        raise AssertionError(f"terminal design failed for {ds.d}")
    return ctrl


def general_rank_floor_check(d, B: ControlMatrix) -> bool:
    """Each degree-class row block of ``B`` must have rank at least its size
    minus one; ``False`` certifies uncontrollability for any ``B``."""
    ds = _threshold_seq(d)
    rows = B.rows()
    for j, (_, m) in enumerate(ds.classes):
        block = rows[ds.prefix[j]: ds.prefix[j + 1]]
        if rank_exact(block) < m - 1:
            return False
    return True


# -- exhaustive search over binary inputs -------------------------------------


def search_binary_controller(L, basis: EigenBasis, p: int, node_limit: int = 10**6):
    """Branch-and-bound over binary ``B`` with ``p`` columns.

    Controllability only depends on the column span, so it suffices to
    enumerate sets of ``p`` distinct nonzero columns.  A branch is cut when
    some eigenspace can no longer reach full rank with the columns left.
    Returns a controllable ``ControlMatrix`` or ``None`` (none exists).
    """
    k = len(L)
    spaces = [[basis.column(j) for j in idx] for idx in basis.eigenspaces().values()]
    need = [len(s) for s in spaces]
    cands = []
    for n in range(1, 2 ** k):
        b = [(n >> i) & 1 for i in range(k)]
        cands.append((b, [[sum(x * y for x, y in zip(b, v)) for v in sp] for sp in spaces]))
    nodes = 0

    def ranks(chosen):
        return [rank_exact([cands[c][1][s] for c in chosen]) if chosen else 0 for s in range(len(spaces))]

    def rec(start, chosen):
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise RuntimeError("search node limit exceeded")
        r = ranks(chosen)
        left = p - len(chosen)
        if any(ri + left < ni for ri, ni in zip(r, need)):
            return None
        if left == 0:
            return list(chosen)
        for c in range(start, len(cands)):
            found = rec(c + 1, chosen + [c])
            if found is not None:
                return found
        return None

    if p > len(cands):
        p = len(cands)
    found = rec(0, [])
    if found is None:
        return None
    B = [[cands[c][0][i] for c in found] for i in range(k)]
    return ControlMatrix(tuple(map(tuple, B)), "binary")


def brute_force_binary(L, p: int) -> ControlMatrix | None:
    """Plain enumeration of column sets checked with the Kalman oracle."""
    k = len(L)
    cols = [[(n >> i) & 1 for i in range(k)] for n in range(1, 2 ** k)]
    for combo in combinations(cols, min(p, len(cols))):
        B = ControlMatrix(tuple(tuple(c[i] for c in combo) for i in range(k)), "binary")
        if kalman_rank(L, B) == k:
            return B
    return None


def check_all(s: Sequence[int] | str, B: ControlMatrix) -> dict:
    """Run every applicable decider and insist they agree."""
    g = graph_from_string(s)
    basis = eigvecs_algorithm1(g.laplacian)
    reports = {"kalman": kalman_check(g.laplacian, B), "pbh": pbh_check(g.laplacian, basis, B)}
    if B.is_binary:
        reports["theorem4"] = theorem4_check(g.string, B)
    verdicts = {name: r.controllable for name, r in reports.items()}
    if len(set(verdicts.values())) != 1:
        raise RuntimeError(f"deciders disagree: {verdicts}")
    return reports


__all__ = [
    "ControlMatrix",
    "ControllabilityReport",
    "LocalCheckingMatrix",
    "NotThresholdError",
    "check_all",
    "design_binary_B",
    "design_terminal_B",
    "general_rank_floor_check",
    "kalman_rank",
    "local_checking_matrix",
    "local_control_matrix",
    "min_controllers",
    "pbh_check",
    "search_binary_controller",
    "theorem4_check",
]
