from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from threshold_ctrl.threshold import (
    DegreeSequence,
    NotThresholdError,
    Succession,
    all_strings,
    conjugate,
    conjugate_inequalities_hold,
    essential_prefixes,
    essential_substrings,
    format_string,
    graph_from_degrees,
    graph_from_string,
    is_canonical_threshold_laplacian,
    is_graphical,
    is_threshold,
    parse_string,
    single_vertex_graph,
    string_from_degrees,
    successions,
    trace_of,
)

from reference import EXAMPLE_CONJUGATE, EXAMPLE_DEGREES, EXAMPLE_STRING, EXAMPLE_SUBSTRINGS, L11, parse_negated


# -- independent oracles ----------------------------------------------------

def erdos_gallai(d):
    d = sorted(d, reverse=True)
    if sum(d) % 2 or any(x < 0 for x in d):
        return False
    n = len(d)
    for r in range(1, n + 1):
        if sum(d[:r]) > r * (r - 1) + sum(min(x, r) for x in d[r:]):
            return False
    return True


def degrees_by_construction(bits):
    """Degrees of the union/join graph, tracked per added vertex."""
    deg = [0]
    for b in bits:
        if b:
            deg = [x + 1 for x in deg] + [len(deg)]
        else:
            deg.append(0)
    return tuple(sorted(deg, reverse=True))


def threshold_sequences(k):
    out = set()
    for n in range(2 ** (k - 1)):
        bits = [(n >> i) & 1 for i in range(k - 1)]
        out.add(degrees_by_construction(bits))
    return out


sequences = st.lists(st.integers(0, 9), min_size=1, max_size=10).map(lambda d: sorted(d, reverse=True))


# -- degree sequences --------------------------------------------------------

@pytest.mark.parametrize("d, expected", [
    (EXAMPLE_DEGREES, EXAMPLE_CONJUGATE),
    ((1, 1), (2, 0)),
    ((5, 3, 2, 2, 1, 1), (6, 4, 2, 1, 1, 0)),
])
def test_conjugate(d, expected):
    assert conjugate(d) == expected


@pytest.mark.parametrize("d, expected", [((5, 3, 2, 2, 1, 1), 2), ((5, 2, 2, 2, 1, 1), 2), ((0,), 0)])
def test_trace(d, expected):
    assert trace_of(d) == expected


def test_graphical_and_threshold_examples():
    assert is_graphical((5, 3, 2, 2, 1, 1)) and is_threshold((5, 3, 2, 2, 1, 1))
    # passes the diagram inequalities, but the degree sum 13 is odd
    assert conjugate_inequalities_hold((5, 2, 2, 2, 1, 1))
    assert not is_graphical((5, 2, 2, 2, 1, 1)) and not is_threshold((5, 2, 2, 2, 1, 1))
    assert not is_graphical((3, 1))
    assert is_graphical((2, 2, 2))
    # the triangle is K3, built by two joins
    assert is_threshold((2, 2, 2))
    assert string_from_degrees((2, 2, 2)) == (1, 1)


@settings(max_examples=400, deadline=None)
@given(sequences)
def test_graphical_matches_erdos_gallai(d):
    assert is_graphical(d) == erdos_gallai(d)


@pytest.mark.parametrize("k", range(1, 8))
def test_threshold_matches_construction_exhaustively(k):
    expected = threshold_sequences(k)
    for d in combinations_with_replacement(range(k - 1, -1, -1), k):
        assert is_threshold(d) == (tuple(d) in expected), d


def test_degree_sequence_bookkeeping():
    ds = DegreeSequence((4, 10, 6, 2, 9, 4, 2, 1, 6, 2, 4))
    assert ds.d == EXAMPLE_DEGREES
    assert ds.distinct == [10, 9, 6, 4, 2, 1]
    assert ds.multiplicities == [1, 1, 2, 3, 3, 1]
    assert ds.prefix == [0, 1, 2, 4, 7, 10, 11]
    assert ds.trace == 4
    assert sum(ds.conjugate) == sum(ds.d)
    with pytest.raises(ValueError):
        DegreeSequence((1, -1))


@settings(max_examples=200, deadline=None)
@given(sequences)
def test_conjugate_basic_invariants(d):
    ds = conjugate(d)
    assert len(ds) == len(d)
    assert list(ds) == sorted(ds, reverse=True)
    if max(d) <= len(d):
        assert sum(ds) == sum(d)


def full_conjugate(d):
    """Conjugate without truncation to ``len(d)``."""
    return [x for x in conjugate(list(d) + [0] * max(d, default=0)) if x > 0]


def test_conjugate_involution_on_threshold_sequences():
    for k in range(2, 11):
        for s in all_strings(k):
            d = graph_from_string(s).degrees.d
            assert tuple(full_conjugate(full_conjugate(d))) == tuple(x for x in d if x > 0)


# -- construction strings ------------------------------------------------------

def test_graph_from_string_examples():
    assert graph_from_string("1").laplacian == [[1, -1], [-1, 1]]
    g = graph_from_string(EXAMPLE_STRING)
    assert g.degrees.d == EXAMPLE_DEGREES
    assert g.laplacian == parse_negated(L11)
    star = graph_from_string((0, 0, 1))
    assert [star.laplacian[i][i] for i in range(4)] == [3, 1, 1, 1]


@pytest.mark.parametrize("bad", ["0", "10", "0010", ""])
def test_graph_from_string_rejects_disconnected(bad):
    with pytest.raises(ValueError):
        graph_from_string(bad)


def test_parse_string_forms():
    assert parse_string("0,0,1") == (0, 0, 1)
    assert parse_string([0, 0, 1]) == (0, 0, 1)
    assert parse_string("[0, 1]") == (0, 1)
    with pytest.raises(ValueError):
        parse_string("012")
    with pytest.raises(ValueError):
        parse_string([0, 2])


def test_single_vertex_graph():
    g = single_vertex_graph()
    assert g.k == 1 and g.laplacian == [[0]] and g.string == ()
    assert graph_from_degrees((0,)).laplacian == [[0]]


@pytest.mark.parametrize("d, s", [((1, 1), (1,)), (EXAMPLE_DEGREES, (0, 0, 1, 1, 0, 0, 0, 1, 0, 1)), ((3, 1, 1, 1), (0, 0, 1))])
def test_string_from_degrees(d, s):
    assert string_from_degrees(d) == s


@pytest.mark.parametrize("d", [(5, 2, 2, 2, 1, 1), (3, 1), (2, 2, 1, 1, 0), (1, 1, 1, 1)])
def test_string_from_degrees_rejects(d):
    with pytest.raises(NotThresholdError):
        string_from_degrees(d)


def test_roundtrip_exhaustive():
    for k in range(2, 12):
        for s in all_strings(k):
            g = graph_from_string(s)
            assert string_from_degrees(g.degrees) == s
            assert g.degrees.d == degrees_by_construction(s)


def test_generated_laplacians_are_canonical():
    for k in range(2, 10):
        for s in all_strings(k):
            g = graph_from_string(s)
            L = g.laplacian
            assert is_canonical_threshold_laplacian(L)
            assert is_threshold(g.degrees.d)
            for i in range(k):
                for j in range(i):
                    if L[i][j] == -1:
                        assert all(L[i][m] == -1 for m in range(j))


def test_degree_facts_for_every_small_graph():
    for k in range(2, 11):
        for s in all_strings(k):
            ds = graph_from_string(s).degrees
            d, dstar, tau = ds.d, ds.conjugate, ds.trace
            for i in range(1, tau + 1):
                assert d[i - 1] == dstar[i - 1] - 1
            assert d[tau] == tau
            for i in range(tau + 2, k + 1):
                assert d[i - 1] == dstar[i - 2]
            if tau + 2 <= k:
                assert d[tau - 1] > d[tau + 1]
            assert d.count(d[tau]) >= 2
            # spectrum multiplicities: the trace class loses one, and 0 is simple
            n = ds.distinct.index(d[tau])
            expected = [m - (i == n) for i, m in enumerate(ds.multiplicities)] + [1]
            assert [m for _, m in ds.conjugate_classes] == expected


# -- successions and essential substrings --------------------------------------

def test_successions():
    runs = successions(EXAMPLE_STRING)
    assert [format_string(parse_string(EXAMPLE_STRING)[r.start:r.end + 1]) for r in runs] == ["00", "11", "000", "1", "0", "1"]
    assert successions("1") == [Succession(0, 0, 1)]
    assert [r.symbol for r in successions((0, 1))] == [0, 1]
    assert [r.length for r in runs] == [2, 2, 3, 1, 1, 1]


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=1, max_size=20))
def test_successions_are_maximal_runs(bits):
    runs = successions(bits)
    assert runs[0].start == 0 and runs[-1].end == len(bits) - 1
    for a, b in zip(runs, runs[1:]):
        assert a.end + 1 == b.start and a.symbol != b.symbol
    for r in runs:
        assert set(bits[r.start:r.end + 1]) == {r.symbol}


def test_essential_substrings():
    assert [format_string(p) for p in essential_substrings(EXAMPLE_STRING)] == list(EXAMPLE_SUBSTRINGS)
    assert essential_substrings("1") == [(1,)]
    assert essential_substrings("111") == [(1, 1, 1)]
    with pytest.raises(ValueError):
        essential_substrings("10")


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 1), max_size=14).map(lambda b: b + [1]))
def test_essential_substrings_properties(bits):
    subs = essential_substrings(bits)
    assert subs[-1] == tuple(bits)
    assert all(s[-1] == 1 for s in subs)
    assert [len(s) for s in subs] == sorted({len(s) for s in subs})
    assert len(essential_prefixes(bits)) == len(successions(bits))


def test_essential_substring_graph_is_a_block_of_the_full_graph():
    for k in range(2, 10):
        for s in all_strings(k):
            g = graph_from_string(s)
            for sub in essential_substrings(s):
                h = graph_from_string(sub)
                off = g.block_offset(len(sub))
                n = len(sub) + 1
                block = [row[off:off + n] for row in g.laplacian[off:off + n]]
                # adjacency inside the block is that of the substring graph
                for i in range(n):
                    for j in range(n):
                        if i != j:
                            assert block[i][j] == h.laplacian[i][j]
                if off == 0:
                    assert g.order[:n] == tuple(sorted(g.order[:n], key=h.order.index))
