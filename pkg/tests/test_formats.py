import pytest
from hypothesis import given, settings

from hyperloose import (
    Canonical,
    GraphCycle,
    Hypergraph,
    LooseCycle,
    Monochromatic,
    RainbowBiclique,
    RainbowCycle,
    decompose_greedy,
    encode,
    encode_phi,
)
from hyperloose.core import EdgeColoredGraph
from hyperloose.formats import (
    FormatError,
    dump_certificate,
    dump_colored,
    dump_decomposition,
    dump_encoding,
    dump_hypergraph,
    load_certificate,
    load_colored,
    load_decomposition,
    load_encoding,
    load_hypergraph,
)

from strategies import hypergraphs


@settings(max_examples=100, deadline=None)
@given(hypergraphs(r=3, max_n=8))
def test_hypergraph_encoding_round_trip(h):
    assert load_hypergraph(dump_hypergraph(h)) == h
    enc = encode(h, 3)
    text = dump_encoding(enc)
    assert load_encoding(text) == enc
    assert dump_encoding(load_encoding(text)) == text
    m = encode_phi(h, 3)
    assert load_colored(dump_colored(m)) == m


@settings(max_examples=60, deadline=None)
@given(hypergraphs(max_n=9))
def test_decomposition_round_trip(h):
    d = decompose_greedy(h, stop_at=0)
    assert load_decomposition(dump_decomposition(d)) == d


@pytest.mark.parametrize(
    "cert",
    [
        LooseCycle(((1, 2, 3), (3, 4, 5), (1, 5, 6)), (3, 5, 1)),
        GraphCycle((1, 2, 3, 4)),
        RainbowCycle((1, 5, 2, 6), (9, 10, 11, 12)),
        RainbowBiclique((1, 2), (3, 4)),
        Canonical((1, 2), (3, 4), (7, 8), "Y"),
        Monochromatic((1, 2), (3, 4), 7),
    ],
)
def test_certificate_round_trip(cert):
    assert load_certificate(dump_certificate(cert)) == cert


def test_comments_and_blank_lines():
    text = "# a loose triangle\n3 6\n\n1 2 3  # first\n3 4 5\n1 5 6\n"
    assert load_hypergraph(text).edges == ((1, 2, 3), (1, 5, 6), (3, 4, 5))


@pytest.mark.parametrize(
    "loader,text",
    [
        (load_hypergraph, ""),
        (load_hypergraph, "3\n1 2 3\n"),
        (load_hypergraph, "3 6\n1 2 x\n"),
        (load_hypergraph, "3 6\n1 2\n"),
        (load_colored, "2 5\n1 2\n"),
        (load_colored, "2 5\n1 2 : 3 4\n"),
        (load_colored, "2 5\n1 2 : 2\n"),
        (load_encoding, "ENC 3 3 6\n"),
        (load_certificate, "CERT LOOSE 3\n1 2 3\n"),
        (load_certificate, "CERT WHAT 3\nEND\n"),
        (load_decomposition, "DEC 2 4 1 1/1\n1 | 1 | 2\n1 | 1 | 3\n"),
    ],
)
def test_malformed_input_rejected(loader, text):
    with pytest.raises(FormatError):
        loader(text)


def test_colored_dump_is_sorted():
    g = EdgeColoredGraph.from_pairs(2, 6, [((3, 4), 1), ((1, 2), 5)])
    assert dump_colored(g) == "2 6\n1 2 : 5\n3 4 : 1\n"


def test_single_edge_encoding_text():
    text = dump_encoding(encode(Hypergraph.from_edges(3, 3, [(1, 2, 3)]), 3))
    lines = text.splitlines()
    assert lines[:4] == ["ENC 3 3 3", "LAYER 1 1", "2 3", "1 2 : 3"]
    assert lines.count("2 3") == 9
