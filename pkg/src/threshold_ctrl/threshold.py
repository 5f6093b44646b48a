"""Degree sequences, construction strings and canonical threshold graphs.

A connected threshold graph on ``k`` vertices is encoded by a construction
string of ``k - 1`` bits: bit ``t`` says whether vertex ``t + 1`` joined the
graph as a dominating vertex (1) or as an isolated vertex (0).  Vertices are
laid out on a line while the graph is built; joins go to the left end and
unions to the right end, which leaves the final line sorted by nonincreasing
degree.  That line is the canonical vertex order used everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import accumulate
from typing import Iterable, NamedTuple, Sequence

from .exactla import Matrix

ConstructionString = tuple[int, ...]


class NotThresholdError(ValueError):
    pass


def value_classes(seq: Sequence[int]) -> list[tuple[int, int]]:
    """Distinct values of a nonincreasing sequence with their multiplicities."""
    out: list[tuple[int, int]] = []
    for x in seq:
        if out and out[-1][0] == x:
            out[-1] = (x, out[-1][1] + 1)
        else:
            out.append((x, 1))
    return out


def conjugate(d: Sequence[int]) -> tuple[int, ...]:
    """``d*_i = |{j : d_j >= i}|`` for ``i = 1..k`` (zero padded to length k)."""
    d = list(d)
    return tuple(sum(1 for x in d if x >= i) for i in range(1, len(d) + 1))


def trace_of(d: Sequence[int]) -> int:
    return sum(1 for j, x in enumerate(d, start=1) if x >= j)


def _gap_sums(d: Sequence[int]) -> list[tuple[int, int]]:
    dstar = conjugate(d)
    lhs = list(accumulate(x + 1 for x in d))
    rhs = list(accumulate(dstar))
    return [(lhs[j], rhs[j]) for j in range(trace_of(d))]


def conjugate_inequalities_hold(d: Sequence[int]) -> bool:
    """``sum_{i<=j} (d_i + 1) <= sum_{i<=j} d*_i`` for every ``j`` up to the trace.

    This is the Ferrers diagram half of the graphical test; it does not look
    at the parity of the degree sum.
    """
    d = sorted(d, reverse=True)
    return all(x >= 0 for x in d) and all(a <= b for a, b in _gap_sums(d))


def is_graphical(d: Sequence[int]) -> bool:
    """Conjugate (Ferrers diagram) criterion plus an even degree sum."""
    return sum(d) % 2 == 0 and conjugate_inequalities_hold(d)


def is_threshold(d: Sequence[int]) -> bool:
    """Graphical with equality in every conjugate inequality up to the trace."""
    d = sorted(d, reverse=True)
    return is_graphical(d) and all(a == b for a, b in _gap_sums(d))


@dataclass(frozen=True)
class DegreeSequence:
    """Nonincreasing degree sequence with the derived class bookkeeping."""

    d: tuple[int, ...]

    def __post_init__(self):
        d = tuple(int(x) for x in self.d)
        if any(x < 0 for x in d):
            raise ValueError("degrees must be nonnegative")
        object.__setattr__(self, "d", tuple(sorted(d, reverse=True)))

    def __len__(self):
        return len(self.d)

    def __iter__(self):
        return iter(self.d)

    def __getitem__(self, i):
        return self.d[i]

    @property
    def k(self) -> int:
        return len(self.d)

    @cached_property
    def classes(self) -> list[tuple[int, int]]:
        return value_classes(self.d)

    @property
    def distinct(self) -> list[int]:
        return [v for v, _ in self.classes]

    @property
    def multiplicities(self) -> list[int]:
        return [m for _, m in self.classes]

    @property
    def prefix(self) -> list[int]:
        """``[0, m_1, m_1 + m_2, ...]``: class boundaries in the vertex order."""
        return [0, *accumulate(self.multiplicities)]

    @property
    def trace(self) -> int:
        return trace_of(self.d)

    @cached_property
    def conjugate(self) -> tuple[int, ...]:
        return conjugate(self.d)

    @property
    def conjugate_classes(self) -> list[tuple[int, int]]:
        return value_classes(self.conjugate)

    def is_graphical(self) -> bool:
        return is_graphical(self.d)

    def is_threshold(self) -> bool:
        return is_threshold(self.d)


class Succession(NamedTuple):
    """Maximal constant run ``s[start..end]`` (0-based, inclusive)."""

    start: int
    end: int
    symbol: int

    @property
    def length(self) -> int:
        return self.end - self.start + 1


def parse_string(text: str | Iterable[int]) -> ConstructionString:
    """Accept ``"0011"``, ``"0,0,1,1"`` or an iterable of bits."""
    if isinstance(text, str):
        chars = [c for c in text if c not in " ,()[]"]
        if any(c not in "01" for c in chars):
            raise ValueError(f"construction string must be binary: {text!r}")
        return tuple(int(c) for c in chars)
    bits = tuple(int(b) for b in text)
    if any(b not in (0, 1) for b in bits):
        raise ValueError("construction string must be binary")
    return bits


def format_string(s: Sequence[int]) -> str:
    return "".join(str(b) for b in s)


def check_connected_string(s: Sequence[int]) -> ConstructionString:
    s = tuple(s)
    if not s:
        raise ValueError("empty construction string (use single_vertex_graph for k=1)")
    if s[-1] != 1:
        raise ValueError(f"construction string {format_string(s)} ends in 0: graph is disconnected")
    return s


def successions(s: Sequence[int] | str) -> list[Succession]:
    s = parse_string(s)
    runs: list[Succession] = []
    for i, b in enumerate(s):
        if runs and runs[-1].symbol == b:
            runs[-1] = runs[-1]._replace(end=i)
        else:
            runs.append(Succession(i, i, b))
    return runs


def essential_prefixes(s: Sequence[int] | str) -> list[tuple[ConstructionString, Succession]]:
    """One ``(prefix, succession)`` pair per succession of ``s``.

    The prefix is the shortest one containing the succession and ending in
    1: a run of ones ends its own prefix, a run of zeros is closed by the
    following join.  Distinct successions may share a prefix.
    """
    s = parse_string(s)
    out = []
    for run in successions(s):
        stop = run.end + 1 if run.symbol == 1 else run.end + 2
        if stop > len(s):
            raise ValueError("string must end in 1")
        out.append((s[:stop], run))
    return out


def essential_substrings(s: Sequence[int] | str) -> list[ConstructionString]:
    seen: list[ConstructionString] = []
    for prefix, _ in essential_prefixes(check_connected_string(parse_string(s))):
        if prefix not in seen:
            seen.append(prefix)
    return seen


@dataclass(frozen=True)
class ThresholdGraph:
    """Connected threshold graph in canonical (nonincreasing degree) order.

    ``order[p]`` is the construction index of the vertex at canonical
    position ``p``; vertex 0 is the starting vertex.
    """

    k: int
    degrees: DegreeSequence
    string: ConstructionString
    laplacian: Matrix = field(repr=False)
    order: tuple[int, ...] = field(repr=False)

    def block_offset(self, prefix_len: int) -> int:
        """Canonical position of the first vertex of the subgraph built by
        the first ``prefix_len`` bits.

        The first ``prefix_len + 1`` construction vertices always occupy a
        contiguous block of the line; every later join pushes it one step
        to the right.
        """
        return sum(self.string[prefix_len:])

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "string": format_string(self.string),
            "degrees": list(self.degrees.d),
            "laplacian": [list(r) for r in self.laplacian],
        }


def _line_order(s: Sequence[int]) -> list[int]:
    line = [0]
    for t, b in enumerate(s, start=1):
        if b:
            line.insert(0, t)
        else:
            line.append(t)
    return line


def graph_from_string(s: Sequence[int] | str) -> ThresholdGraph:
    s = check_connected_string(parse_string(s))
    k = len(s) + 1
    line = _line_order(s)
    pos = {v: p for p, v in enumerate(line)}
    L = [[0] * k for _ in range(k)]
    for t, b in enumerate(s, start=1):
        if b:
            for u in range(t):
                i, j = pos[t], pos[u]
                L[i][j] = L[j][i] = -1
    for i in range(k):
        L[i][i] = -sum(L[i])
    degrees = DegreeSequence(tuple(L[i][i] for i in range(k)))
    if tuple(L[i][i] for i in range(k)) != degrees.d:
        raise AssertionError("canonical order is not degree-sorted")
    return ThresholdGraph(k, degrees, s, L, tuple(line))


def single_vertex_graph() -> ThresholdGraph:
    return ThresholdGraph(1, DegreeSequence((0,)), (), [[0]], (0,))


def string_from_degrees(d: Sequence[int] | DegreeSequence) -> ConstructionString:
    """Construction string of the connected threshold graph with degrees ``d``.

    Peels dominating (join) or isolated (union) vertices off the end of the
    construction; the peeling order is forced, so the string is unique.
    """
    degs = sorted((int(x) for x in d), reverse=True)
    if not degs:
        raise NotThresholdError("empty degree sequence")
    if not is_threshold(degs):
        raise NotThresholdError(f"{tuple(degs)} is not a threshold sequence")
    n = len(degs)
    if n > 1 and degs[0] != n - 1:
        raise NotThresholdError(f"{tuple(degs)} is a disconnected threshold sequence")
    rev = []
    while len(degs) > 1:
        size = len(degs)
        if degs[0] == size - 1:
            rev.append(1)
            degs = sorted((x - 1 for x in degs[1:]), reverse=True)
        elif degs[-1] == 0:
            rev.append(0)
            degs = degs[:-1]
        else:
            raise NotThresholdError("no dominating or isolated vertex to peel")
    if degs != [0]:
        raise NotThresholdError("peeling did not end at a single vertex")
    return tuple(reversed(rev))


def graph_from_degrees(d: Sequence[int] | DegreeSequence) -> ThresholdGraph:
    s = string_from_degrees(d)
    if not s:
        return single_vertex_graph()
    return graph_from_string(s)


def all_strings(k: int) -> Iterable[ConstructionString]:
    """Every connected construction string on ``k`` vertices (``k >= 2``)."""
    for n in range(2 ** (k - 2)):
        bits = [(n >> (k - 3 - i)) & 1 for i in range(k - 2)]
        yield tuple(bits) + (1,)


def is_canonical_threshold_laplacian(L: Sequence[Sequence[int]]) -> bool:
    """Symmetric, rows summing to zero, and each vertex adjacent exactly to
    the top-degree vertices other than itself (the nested fill pattern)."""
    k = len(L)
    if any(len(row) != k for row in L):
        return False
    for i in range(k):
        for j in range(k):
            if i != j and (L[i][j] not in (0, -1) or L[i][j] != L[j][i]):
                return False
        if sum(L[i]) != 0:
            return False
    deg = [L[i][i] for i in range(k)]
    if any(deg[i] < deg[i + 1] for i in range(k - 1)):
        return False
    for i in range(k):
        others = [j for j in range(k) if j != i]
        expect = set(others[: deg[i]])
        if {j for j in others if L[i][j] == -1} != expect:
            return False
    return True
