from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperloose import (
    EdgeColoredGraph,
    Encoding,
    Hypergraph,
    LooseCycle,
    MultiColoredGraph,
    decode,
    encode,
    encode_phi,
    find_loose_cycle_exact,
    split_psi,
    validate_certificate,
)
from hyperloose.codec import merge_layers, peel, peels_to_empty
from hyperloose.counting import edge_universe, forb_flags, graph_from_mask

from strategies import hypergraphs, random_hypergraph

# Regression pin: largest palette over every C_3-free 3-graph on [6] (k = 3),
# first computed by this package; bounded above by n - 2 = 4.
MAX_PALETTE_FORB_3_6_3 = 4


def test_single_edge():
    h = Hypergraph.from_edges(3, 3, [(1, 2, 3)])
    m = encode_phi(h, 3)
    assert isinstance(m, MultiColoredGraph)
    assert dict(m.palette) == {(1, 2): frozenset({3})}
    enc = encode(h, 3)
    assert len(enc.layers) == 9
    assert decode(enc) == h


def test_loose_triangle_round_trips():
    h = Hypergraph.from_edges(3, 6, [(1, 2, 3), (3, 4, 5), (5, 6, 1)])
    enc = encode(h, 3)
    assert isinstance(enc, Encoding)
    assert decode(enc) == h


def test_complete_twelve_gives_witness():
    h = Hypergraph.complete(3, 12)
    out = encode_phi(h, 3)
    assert isinstance(out, LooseCycle)
    assert validate_certificate(h, out)


def test_split_examples():
    base = Hypergraph.from_edges(2, 9, [(1, 2)])
    m = MultiColoredGraph(base, {(1, 2): frozenset({3, 7})}, 9)
    enc = split_psi(m)
    assert enc.layers[0].coloring == {(1, 2): 3}
    assert enc.layers[1].coloring == {(1, 2): 7}
    assert all(not layer.coloring for layer in enc.layers[2:])
    assert decode(enc).edges == ((1, 2, 3), (1, 2, 7))

    singles = MultiColoredGraph(
        Hypergraph.from_edges(2, 9, [(1, 2), (3, 4)]), {(1, 2): frozenset({5}), (3, 4): frozenset({9})}, 9
    )
    enc = split_psi(singles)
    assert enc.layers[0].coloring == {(1, 2): 5, (3, 4): 9}
    assert all(not layer.coloring for layer in enc.layers[1:])

    empty = MultiColoredGraph(Hypergraph(2, 6, ()), {}, 9)
    enc = split_psi(empty, 3, 3)
    assert len(enc.layers) == 9 and all(not layer.coloring for layer in enc.layers)


def test_encoding_validates_layers():
    layer = EdgeColoredGraph.from_pairs(2, 9, [((1, 2), 3)])
    empty = EdgeColoredGraph(Hypergraph(2, 9, ()), {})
    with pytest.raises(ValueError):
        Encoding(3, 3, 9, (layer,) * 2 + (empty,) * 7)
    with pytest.raises(ValueError):
        Encoding(3, 3, 9, (empty, layer) + (empty,) * 7)
    with pytest.raises(ValueError):
        Encoding(3, 3, 9, (layer,) * 8)


def test_rejects_small_parameters():
    h = Hypergraph.from_edges(3, 3, [(1, 2, 3)])
    with pytest.raises(ValueError):
        encode_phi(h, 2)
    with pytest.raises(ValueError):
        encode_phi(Hypergraph.from_edges(2, 3, [(1, 2)]), 3)


def test_peeling_order_is_lexicographic():
    h = Hypergraph.from_edges(3, 5, [(1, 2, 3), (1, 2, 4), (2, 3, 5)])
    palettes, residual = peel(h, 3)
    assert not residual
    assert list(palettes) == [(1, 2), (2, 3)]
    assert palettes[(1, 2)] == {3, 4} and palettes[(2, 3)] == {5}


@settings(max_examples=200, deadline=None)
@given(hypergraphs(r=3, max_n=9), st.sampled_from([3, 4]))
def test_round_trip_on_peelable(h, k):
    out = encode(h, k)
    if peels_to_empty(h, k):
        assert isinstance(out, Encoding)
        assert decode(out) == h
        assert merge_layers(out) == encode_phi(h, k)
    else:
        assert isinstance(out, LooseCycle)
        assert validate_certificate(h, out)


@settings(max_examples=80, deadline=None)
@given(hypergraphs(r=4, max_n=9), st.sampled_from([3, 4]))
def test_round_trip_four_uniform(h, k):
    out = encode(h, k)
    assert isinstance(out, Encoding) and decode(out) == h


def test_cycle_free_graphs_never_give_witness():
    rng = np.random.default_rng(5)
    for _ in range(150):
        n = int(rng.integers(6, 14))
        h = random_hypergraph(rng, 3, n, float(rng.uniform(0.02, 0.25)))
        out = encode_phi(h, 3)
        if isinstance(out, LooseCycle):
            assert validate_certificate(h, out)
        elif find_loose_cycle_exact(h, 3) is None:
            assert decode(split_psi(out, 3, 3)) == h


def test_dense_random_witnesses_validate():
    rng = np.random.default_rng(9)
    for _ in range(20):
        n = int(rng.integers(12, 16))
        h = random_hypergraph(rng, 3, n, 0.97)
        out = encode_phi(h, 3)
        if isinstance(out, LooseCycle):
            assert validate_certificate(h, out)


def test_max_palette_over_forb_six():
    flags = forb_flags(3, 6, 3)
    universe = edge_universe(3, 6)
    largest = 0
    for mask in np.flatnonzero(flags):
        m = encode_phi(graph_from_mask(3, 6, int(mask), universe), 3)
        largest = max(largest, max((len(p) for p in m.palette.values()), default=0))
    assert largest == MAX_PALETTE_FORB_3_6_3
    assert largest <= 9


def test_distinct_graphs_have_distinct_encodings_on_five():
    universe = edge_universe(3, 5)
    seen = {}
    for mask in range(1 << len(universe)):
        h = graph_from_mask(3, 5, mask, universe)
        enc = encode(h, 3)
        key = tuple(tuple(sorted(layer.coloring.items())) for layer in enc.layers)
        assert key not in seen
        seen[key] = mask
    assert len(seen) == 1 << 10
