import math
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from hyperloose import OutOfBudget, count_colored_bicliques, count_forb, growth_table
from hyperloose.counting import (
    bicliques,
    count_forb_naive,
    cycle_masks,
    edge_universe,
    forb_flags,
    format_table,
    graph_from_mask,
)

import oracles

# Regression pin: |Forb_3(6, C_3)|, first computed by this package's bitmask
# sweep; the cycle copies are cross-checked below against a naive enumerator.
FORB_3_6_3 = 20467

# Labeled triangle-free graphs on n = 2..7 vertices (published integer sequence).
TRIANGLE_FREE = [2, 7, 41, 388, 5789, 133501]


def test_shortcut_regime():
    assert count_forb(3, 5, 3).count == 1024
    assert count_forb(3, 7, 4).count == 2**35
    rep = count_forb(3, 5, 3)
    assert rep.log2 == 10 and rep.search_nodes == 0


def test_pinned_six_vertex_count():
    assert count_forb(3, 6, 3).count == FORB_3_6_3


def test_cycle_copies_match_naive_enumerator():
    universe = edge_universe(3, 6)
    index = {e: i for i, e in enumerate(universe)}
    naive = {sum(1 << index[e] for e in s) for s in oracles.naive_loose_cycle_sets(universe, 3)}
    assert set(cycle_masks(3, 6, 3)) == naive
    assert len(naive) == 120


def test_sweep_agrees_with_naive_tester_on_samples():
    flags = forb_flags(3, 6, 3)
    universe = edge_universe(3, 6)
    rng = np.random.default_rng(2)
    for mask in rng.integers(0, 1 << 20, size=400):
        h = graph_from_mask(3, 6, int(mask), universe)
        assert bool(flags[mask]) == (not oracles.naive_has_loose_cycle(h.edges, 3))


def test_graph_case_matches_triangle_free_counts():
    assert [count_forb(2, n, 3).count for n in range(2, 8)] == TRIANGLE_FREE


def test_naive_count_matches_sweep_on_small_graphs():
    for n in (4, 5):
        for k in (3, 4):
            assert count_forb(2, n, k).count == count_forb_naive(2, n, k)


def test_worker_count_does_not_change_result():
    assert count_forb(3, 6, 3, workers=3).count == FORB_3_6_3
    assert count_forb(2, 7, 3, workers=2).count == TRIANGLE_FREE[-1]


def test_downward_closure():
    flags = forb_flags(3, 6, 3)
    rng = np.random.default_rng(6)
    free = np.flatnonzero(flags)
    for mask in rng.choice(free, size=300):
        mask = int(mask)
        for i in range(20):
            if mask >> i & 1:
                assert flags[mask & ~(1 << i)]


def test_refusals():
    with pytest.raises(OutOfBudget):
        count_forb(3, 7, 3)
    with pytest.raises(OutOfBudget):
        count_forb(3, 6, 3, node_limit=1000)
    with pytest.raises(OutOfBudget):
        count_colored_bicliques(9, 4, 1, 1)
    with pytest.raises(OutOfBudget):
        count_colored_bicliques(8, 4, 2, 5)
    with pytest.raises(ValueError):
        count_forb(3, 6, 2)


def test_log2_is_rational_to_micro_units():
    rep = count_forb(3, 6, 3)
    assert rep.log2 == Fraction(round(math.log2(FORB_3_6_3) * 10**6), 10**6)
    assert rep.count >= 1


@pytest.mark.parametrize("n", [5, 6])
def test_colored_single_edges(n):
    expected = math.comb(n, 2) * (n - 2)
    assert count_colored_bicliques(n, 4, 1, 1).count == expected


def test_colored_bicliques_match_naive():
    for n, s, t in [(4, 2, 2), (5, 1, 2), (5, 2, 2), (6, 1, 3)]:
        total = 0
        for A, B in bicliques(n, s, t):
            edges = [tuple(sorted((a, b))) for a in A for b in B]
            choices = [[c for c in range(1, n + 1) if c not in e] for e in edges]
            for colors in _product(choices):
                triples = list({tuple(sorted(e + (c,))) for e, c in zip(edges, colors)})
                total += not oracles.naive_has_loose_cycle(triples, 4)
        assert count_colored_bicliques(n, 4, s, t).count == total


def _product(choices):
    if not choices:
        yield ()
        return
    for c in choices[0]:
        for rest in _product(choices[1:]):
            yield (c, *rest)


def test_bicliques_unordered_when_balanced():
    pairs = list(bicliques(4, 2, 2))
    assert len(pairs) == 3
    assert len(list(bicliques(5, 1, 2))) == 5 * 6


def test_growth_examples():
    rows = growth_table(3, 3, range(4, 7))
    logs = [row.log2 for row in rows]
    assert logs == sorted(logs)
    rows = growth_table(3, 4, range(5, 8))
    assert [row.log2 for row in rows] == [math.comb(n, 3) for n in range(5, 8)]
    assert rows[-1].extra["lower"] == 15
    assert all(row.extra["holds"] for row in rows)


def test_growth_lower_bound_graphs_are_cycle_free():
    # all triples meeting a fixed vertex: no loose C_3 or C_4 fits
    for n, k in [(6, 3), (6, 4)]:
        edges = [e for e in combinations(range(1, n + 1), 3) if 1 in e]
        assert not oracles.naive_has_loose_cycle(edges, k)


def test_format_table_and_records():
    rows = growth_table(3, 4, range(5, 7))
    table = format_table(rows)
    assert table.splitlines()[0].split() == ["r", "n", "k", "count", "log2", "lower", "holds"]
    assert rows[0].record() == "r=3 n=5 k=4 count=1024 log2=10.000000 lower=6 holds=True"
