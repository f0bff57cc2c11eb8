"""Hypothesis strategies and seeded generators shared by the tests."""

from itertools import combinations

import numpy as np
from hypothesis import strategies as st

from hyperloose import BipartiteColoring, Hypergraph


@st.composite
def hypergraphs(draw, r=None, max_n=8, max_edges=None):
    r = draw(st.integers(2, 4)) if r is None else r
    n = draw(st.integers(r, max_n))
    universe = list(combinations(range(1, n + 1), r))
    cap = len(universe) if max_edges is None else min(max_edges, len(universe))
    chosen = draw(st.lists(st.sampled_from(universe), max_size=cap, unique=True))
    return Hypergraph.from_edges(r, n, chosen)


def random_hypergraph(rng: np.random.Generator, r: int, n: int, density: float) -> Hypergraph:
    universe = list(combinations(range(1, n + 1), r))
    keep = rng.random(len(universe)) < density
    return Hypergraph._trusted(r, n, tuple(e for e, k in zip(universe, keep) if k))


def random_graph_min_edges(rng: np.random.Generator, n: int, m: int) -> Hypergraph:
    pairs = list(combinations(range(1, n + 1), 2))
    idx = rng.choice(len(pairs), size=m, replace=False)
    return Hypergraph.from_edges(2, n, [pairs[i] for i in idx])


def random_bipartite(rng: np.random.Generator, s: int, t: int, palette_size: int, n: int | None = None):
    """Complete bipartite X=[1..s], Y=[s+1..s+t]; colors drawn from a random palette off the edge."""
    X = tuple(range(1, s + 1))
    Y = tuple(range(s + 1, s + t + 1))
    palette_size = max(3, palette_size)  # an edge excludes at most two colors
    n = s + t + palette_size if n is None else n
    palette = rng.choice(np.arange(1, n + 1), size=min(palette_size, n), replace=False)
    colors = {}
    for x in X:
        for y in Y:
            choices = [int(c) for c in palette if c not in (x, y)]
            colors[(x, y)] = choices[int(rng.integers(len(choices)))]
    return BipartiteColoring(X, Y, colors)


def matching_class_coloring(rng: np.random.Generator, p: int) -> BipartiteColoring:
    """K_{p,p} colored by p random perfect matchings (a Latin square), colors off the vertex set.

    Rows and columns of the cyclic square are shuffled and colors relabeled,
    so every color class is a perfect matching.
    """
    X = tuple(range(1, p + 1))
    Y = tuple(range(p + 1, 2 * p + 1))
    rows = rng.permutation(p)
    cols = rng.permutation(p)
    names = rng.permutation(p) + 2 * p + 1
    colors = {(X[i], Y[j]): int(names[(rows[i] + cols[j]) % p]) for i in range(p) for j in range(p)}
    return BipartiteColoring(X, Y, colors)


def near_injective_bipartite(rng: np.random.Generator, s: int, t: int, n: int, repeat: float):
    """Mostly distinct colors from [n]; each edge reuses an earlier color with probability ``repeat``."""
    X = tuple(range(1, s + 1))
    Y = tuple(range(s + 1, s + t + 1))
    fresh = [int(c) for c in rng.permutation(np.arange(1, n + 1))]
    used: list[int] = []
    colors = {}
    for x in X:
        for y in Y:
            old = [c for c in used if c not in (x, y)]
            if old and rng.random() < repeat:
                colors[(x, y)] = old[int(rng.integers(len(old)))]
                continue
            c = next(c for c in fresh if c not in (x, y))
            fresh.remove(c)
            used.append(c)
            colors[(x, y)] = c
    return BipartiteColoring(X, Y, colors)
