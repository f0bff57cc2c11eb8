from itertools import combinations

import pytest
from hypothesis import given, settings

from hyperloose import (
    BipartiteColoring,
    EdgeColoredGraph,
    Hypergraph,
    LooseCycle,
    MultiColoredGraph,
    Rainbow,
    check_rainbow,
    codegree,
    extend,
    neighborhood,
    shadow,
    validate_certificate,
)
from hyperloose.core import two_shadow

from strategies import hypergraphs

TRIANGLE = Hypergraph.from_edges(3, 6, [(1, 2, 3), (3, 4, 5), (5, 6, 1)])


def test_edges_are_canonical():
    h = Hypergraph(3, 5, ((3, 2, 1), (1, 5, 4)))
    assert h.edges == ((1, 2, 3), (1, 4, 5))
    assert Hypergraph(3, 5, ((1, 4, 5), (1, 2, 3))) == h


@pytest.mark.parametrize(
    "r,n,edges",
    [
        (3, 5, ((1, 2),)),
        (3, 5, ((1, 1, 2),)),
        (3, 5, ((1, 2, 6),)),
        (3, 5, ((0, 1, 2),)),
        (3, 5, ((1, 2, 3), (3, 2, 1))),
        (4, 3, ()),
    ],
)
def test_invalid_hypergraphs_rejected(r, n, edges):
    with pytest.raises(ValueError):
        Hypergraph(r, n, edges)


def test_from_edges_dedupes():
    h = Hypergraph.from_edges(2, 3, [(1, 2), (2, 1), (2, 3)])
    assert h.edges == ((1, 2), (2, 3))


def test_shadow_examples():
    h = Hypergraph.from_edges(3, 4, [(1, 2, 3), (1, 2, 4)])
    assert shadow(h) == {(1, 2), (1, 3), (2, 3), (1, 4), (2, 4)}
    assert shadow(Hypergraph(3, 4, ())) == frozenset()
    assert shadow(Hypergraph.complete(3, 4)) == set(combinations(range(1, 5), 2))


def test_codegree_examples():
    h = Hypergraph.from_edges(3, 4, [(1, 2, 3), (1, 2, 4)])
    assert codegree(h, {1, 2}) == 2 and neighborhood(h, (2, 1)) == {3, 4}
    assert codegree(h, {3, 4}) == 0 and neighborhood(h, {3, 4}) == frozenset()
    k12 = Hypergraph.complete(3, 12)
    assert all(codegree(k12, s) == 10 for s in [(1, 2), (5, 11), (3, 12)])


def test_codegree_rejects_wrong_size():
    with pytest.raises(ValueError):
        codegree(TRIANGLE, {1, 2, 3})


def test_extend_examples():
    g = EdgeColoredGraph.from_pairs(2, 5, [((1, 2), 5)])
    assert extend(g).edges == ((1, 2, 5),)
    g = EdgeColoredGraph.from_pairs(2, 3, [((1, 2), 3), ((1, 3), 2)])
    assert extend(g).edges == ((1, 2, 3),)
    g = EdgeColoredGraph.from_pairs(2, 5, [((1, 2), 4), ((2, 3), 5)])
    assert extend(g).edges == ((1, 2, 4), (2, 3, 5))


def test_colored_graph_rejects_bad_colors():
    with pytest.raises(ValueError):
        EdgeColoredGraph.from_pairs(2, 5, [((1, 2), 2)])
    with pytest.raises(ValueError):
        EdgeColoredGraph.from_pairs(2, 5, [((1, 2), 6)])


def test_multicolored_capacity():
    base = Hypergraph.from_edges(2, 9, [(1, 2)])
    m = MultiColoredGraph(base, {(1, 2): frozenset({3, 7})}, 9)
    assert extend(m).edges == ((1, 2, 3), (1, 2, 7))
    with pytest.raises(ValueError):
        MultiColoredGraph(base, {(1, 2): frozenset({3, 7})}, 1)
    with pytest.raises(ValueError):
        MultiColoredGraph(base, {(1, 2): frozenset({2})}, 9)


def test_check_rainbow_examples():
    def g(c1, c2):
        return EdgeColoredGraph.from_pairs(2, 9, [((1, 2), c1), ((3, 4), c2)])

    sub = [(1, 2), (3, 4)]
    assert check_rainbow(g(7, 8), sub) is Rainbow.STRONGLY_RAINBOW
    # color 3 sits on the other edge of the subgraph
    assert check_rainbow(g(3, 8), sub) is Rainbow.RAINBOW
    assert check_rainbow(g(7, 7), sub) is Rainbow.NEITHER


def test_validate_loose_cycle_examples():
    cert = LooseCycle(((1, 2, 3), (3, 4, 5), (5, 6, 1)), (3, 5, 1))
    assert validate_certificate(TRIANGLE, cert)
    missing = TRIANGLE.remove([(1, 5, 6)])
    assert not validate_certificate(missing, cert)
    fat = Hypergraph.from_edges(3, 6, [(1, 2, 3), (2, 3, 4), (4, 5, 1)])
    bad = LooseCycle(((1, 2, 3), (2, 3, 4), (1, 4, 5)), (2, 4, 1))
    assert not validate_certificate(fat, bad)


def test_validate_rejects_wrong_connectors():
    cert = LooseCycle(((1, 2, 3), (3, 4, 5), (5, 6, 1)), (3, 5, 6))
    assert not validate_certificate(TRIANGLE, cert)


def test_bipartite_from_colored_graph():
    g = EdgeColoredGraph.from_pairs(2, 9, [((1, 3), 5), ((1, 4), 6), ((2, 3), 7), ((2, 4), 8)])
    b = BipartiteColoring.from_colored_graph(g)
    assert b.X == (1, 2) and b.Y == (3, 4)
    assert b.color(2, 4) == 8
    assert b.to_colored_graph(9) == g
    with pytest.raises(ValueError):
        BipartiteColoring.from_colored_graph(EdgeColoredGraph.from_pairs(2, 9, [((1, 3), 5), ((1, 4), 6), ((2, 3), 7)]))


@settings(max_examples=150, deadline=None)
@given(hypergraphs())
def test_handshake_identity(h):
    assert sum(codegree(h, s) for s in shadow(h)) == h.r * len(h)


@settings(max_examples=150, deadline=None)
@given(hypergraphs())
def test_two_shadow_is_pairs_inside_edges(h):
    expected = {p for e in h.edges for p in combinations(e, 2)}
    assert two_shadow(h) == expected
