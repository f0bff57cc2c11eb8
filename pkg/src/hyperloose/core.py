"""Hypergraphs, edge-colored graphs and the basic set-system operations.

Vertices are 1-based integers. Every edge is stored as an ascending tuple and
every edge collection as a lexicographically sorted tuple, so two objects with
the same content always have the same canonical form (and the same bytes once
serialized, see :mod:`hyperloose.formats`).

All values are immutable after construction.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Mapping

Edge = tuple[int, ...]


def as_edge(vertices: Iterable[int]) -> Edge:
    return tuple(sorted(vertices))


def _check_edge(e: Edge, size: int, n: int) -> None:
    if len(e) != size:
        raise ValueError(f"edge {e} does not have {size} vertices")
    if len(set(e)) != size:
        raise ValueError(f"edge {e} repeats a vertex")
    if e and (e[0] < 1 or e[-1] > n):
        raise ValueError(f"edge {e} leaves the vertex range [1, {n}]")


@dataclass(frozen=True)
class Hypergraph:
    """An ``r``-uniform hypergraph on the vertex range ``[1, n]``."""

    r: int
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError("uniformity must be positive")
        if self.n < self.r:
            raise ValueError(f"vertex bound n={self.n} is smaller than r={self.r}")
        canon = sorted(as_edge(e) for e in self.edges)
        for e in canon:
            _check_edge(e, self.r, self.n)
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(canon))

    @classmethod
    def from_edges(cls, r: int, n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
        """Build from any iterable of vertex collections, merging duplicates."""
        return cls(r, n, tuple({as_edge(e) for e in edges}))

    @classmethod
    def _trusted(cls, r: int, n: int, edges: tuple[Edge, ...]) -> Hypergraph:
        # Hot-path constructor: edges must already be canonical and valid.
        obj = object.__new__(cls)
        object.__setattr__(obj, "r", r)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "edges", edges)
        return obj

    @classmethod
    def complete(cls, r: int, n: int) -> Hypergraph:
        return cls._trusted(r, n, tuple(combinations(range(1, n + 1), r)))

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        """Non-isolated vertices, ascending."""
        return tuple(sorted({v for e in self.edges for v in e}))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __contains__(self, e) -> bool:
        return as_edge(e) in self.edge_set

    def __bool__(self) -> bool:
        return bool(self.edges)

    def restrict(self, edges: Iterable[Iterable[int]]) -> Hypergraph:
        """Sub-hypergraph on the given edges (each must already be present)."""
        sub = Hypergraph.from_edges(self.r, self.n, edges)
        missing = [e for e in sub.edges if e not in self.edge_set]
        if missing:
            raise ValueError(f"edges {missing} are not in the hypergraph")
        return sub

    def remove(self, edges: Iterable[Iterable[int]]) -> Hypergraph:
        drop = {as_edge(e) for e in edges}
        return Hypergraph._trusted(
            self.r, self.n, tuple(e for e in self.edges if e not in drop)
        )

    @cached_property
    def _links(self) -> dict[Edge, frozenset[int]]:
        links: dict[Edge, set[int]] = defaultdict(set)
        for e in self.edges:
            for i, v in enumerate(e):
                links[e[:i] + e[i + 1 :]].add(v)
        return {s: frozenset(vs) for s, vs in links.items()}


def shadow(h: Hypergraph) -> frozenset[Edge]:
    """All ``(r-1)``-sets with positive codegree."""
    return frozenset(h._links)


def _subedge_key(h: Hypergraph, s: Iterable[int]) -> Edge:
    key = as_edge(s)
    if len(key) != h.r - 1 or len(set(key)) != len(key):
        raise ValueError(f"{key} is not an {h.r - 1}-set")
    if key and (key[0] < 1 or key[-1] > h.n):
        raise ValueError(f"{key} leaves the vertex range [1, {h.n}]")
    return key


def neighborhood(h: Hypergraph, s: Iterable[int]) -> frozenset[int]:
    """Vertices ``v`` outside ``s`` with ``s + {v}`` an edge."""
    return h._links.get(_subedge_key(h, s), frozenset())


def codegree(h: Hypergraph, s: Iterable[int]) -> int:
    return len(neighborhood(h, s))


def two_shadow(h: Hypergraph) -> frozenset[tuple[int, int]]:
    """Pairs covered by some edge."""
    return frozenset(p for e in h.edges for p in combinations(e, 2))


@dataclass(frozen=True)
class EdgeColoredGraph:
    """A uniform hypergraph with one color per edge, the color never in the edge."""

    base: Hypergraph
    coloring: Mapping[Edge, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        coloring = {as_edge(e): c for e, c in self.coloring.items()}
        if set(coloring) != self.base.edge_set:
            raise ValueError("coloring must be defined on exactly the base edges")
        for e, c in coloring.items():
            if not 1 <= c <= self.base.n:
                raise ValueError(f"color {c} of {e} leaves [1, {self.base.n}]")
            if c in e:
                raise ValueError(f"color {c} lies in its own edge {e}")
        object.__setattr__(self, "coloring", coloring)

    @classmethod
    def from_pairs(
        cls, r: int, n: int, pairs: Iterable[tuple[Iterable[int], int]]
    ) -> EdgeColoredGraph:
        coloring = {as_edge(e): c for e, c in pairs}
        return cls(Hypergraph(r, n, tuple(coloring)), coloring)

    @property
    def r(self) -> int:
        return self.base.r

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.base.edges

    def color(self, e: Iterable[int]) -> int:
        return self.coloring[as_edge(e)]

    def colors(self) -> frozenset[int]:
        return frozenset(self.coloring.values())

    def items(self) -> Iterator[tuple[Edge, int]]:
        for e in self.base.edges:
            yield e, self.coloring[e]


@dataclass(frozen=True)
class MultiColoredGraph:
    """A uniform hypergraph with a nonempty palette of at most ``capacity`` colors per edge."""

    base: Hypergraph
    palette: Mapping[Edge, frozenset[int]] = field(default_factory=dict)
    capacity: int = 1

    def __post_init__(self) -> None:
        palette = {as_edge(e): frozenset(cs) for e, cs in self.palette.items()}
        if set(palette) != self.base.edge_set:
            raise ValueError("palette must be defined on exactly the base edges")
        for e, cs in palette.items():
            if not 1 <= len(cs) <= self.capacity:
                raise ValueError(f"palette of {e} has {len(cs)} colors, capacity {self.capacity}")
            if cs & set(e):
                raise ValueError(f"palette of {e} meets the edge")
            if min(cs) < 1 or max(cs) > self.base.n:
                raise ValueError(f"palette of {e} leaves [1, {self.base.n}]")
        object.__setattr__(self, "palette", palette)

    @classmethod
    def _trusted(
        cls, base: Hypergraph, palette: dict[Edge, frozenset[int]], capacity: int
    ) -> MultiColoredGraph:
        obj = object.__new__(cls)
        object.__setattr__(obj, "base", base)
        object.__setattr__(obj, "palette", palette)
        object.__setattr__(obj, "capacity", capacity)
        return obj

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.base.edges


def extend(g: EdgeColoredGraph | MultiColoredGraph) -> Hypergraph:
    """The extension ``{e + {color}}``; colliding extensions merge.

    A multi-colored graph extends by every color of each palette.
    """
    if isinstance(g, MultiColoredGraph):
        out = {as_edge(e + (c,)) for e, cs in g.palette.items() for c in cs}
    else:
        out = {as_edge(e + (c,)) for e, c in g.coloring.items()}
    return Hypergraph._trusted(g.base.r + 1, g.base.n, tuple(sorted(out)))


class Rainbow(str, enum.Enum):
    STRONGLY_RAINBOW = "strongly_rainbow"
    RAINBOW = "rainbow"
    NEITHER = "neither"


def check_rainbow(g: EdgeColoredGraph, sub: Iterable[Iterable[int]]) -> Rainbow:
    edges = [as_edge(e) for e in sub]
    for e in edges:
        if e not in g.coloring:
            raise ValueError(f"{e} is not an edge of the colored graph")
    colors = [g.coloring[e] for e in edges]
    if len(set(colors)) != len(colors):
        return Rainbow.NEITHER
    support = {v for e in edges for v in e}
    if support.isdisjoint(colors):
        return Rainbow.STRONGLY_RAINBOW
    return Rainbow.RAINBOW


@dataclass(frozen=True)
class BipartiteColoring:
    """An edge coloring of the complete bipartite graph between ``X`` and ``Y``.

    ``colors`` is keyed by ``(x, y)`` with ``x`` in ``X`` and ``y`` in ``Y``.
    """

    X: tuple[int, ...]
    Y: tuple[int, ...]
    colors: Mapping[tuple[int, int], int]

    def __post_init__(self) -> None:
        X, Y = tuple(sorted(self.X)), tuple(sorted(self.Y))
        if len(set(X)) != len(X) or len(set(Y)) != len(Y):
            raise ValueError("sides repeat a vertex")
        if set(X) & set(Y):
            raise ValueError("sides must be disjoint")
        colors = dict(self.colors)
        if len(colors) != len(X) * len(Y):
            raise ValueError("coloring must be total on X x Y")
        for x in X:
            for y in Y:
                c = colors.get((x, y))
                if c is None:
                    raise ValueError(f"edge ({x}, {y}) is uncolored")
                if c in (x, y):
                    raise ValueError(f"color {c} is an endpoint of ({x}, {y})")
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)
        object.__setattr__(self, "colors", colors)

    @classmethod
    def from_rows(cls, X, Y, rows) -> BipartiteColoring:
        """``rows[i][j]`` colors the edge ``(X[i], Y[j])``."""
        X, Y = list(X), list(Y)
        return cls(tuple(X), tuple(Y), {
            (x, y): rows[i][j] for i, x in enumerate(X) for j, y in enumerate(Y)
        })

    @classmethod
    def from_colored_graph(cls, g: EdgeColoredGraph) -> BipartiteColoring:
        """Recover the bipartition of a complete bipartite colored graph.

        ``X`` is the side holding the smallest vertex.
        """
        if g.r != 2:
            raise ValueError("a bipartite coloring needs a 2-uniform base")
        adj: dict[int, set[int]] = defaultdict(set)
        for u, v in g.edges:
            adj[u].add(v)
            adj[v].add(u)
        if not adj:
            raise ValueError("empty graph has no bipartition")
        start = min(adj)
        side = {start: 0}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in side:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    raise ValueError("base graph is not bipartite")
        if len(side) != len(adj):
            raise ValueError("base graph is disconnected")
        X = tuple(sorted(v for v, s in side.items() if s == 0))
        Y = tuple(sorted(v for v, s in side.items() if s == 1))
        if len(g.edges) != len(X) * len(Y):
            raise ValueError("base graph is not complete bipartite")
        colors = {}
        for (u, v), c in g.coloring.items():
            colors[(u, v) if side[u] == 0 else (v, u)] = c
        return cls(X, Y, colors)

    @property
    def s(self) -> int:
        return len(self.X)

    @property
    def t(self) -> int:
        return len(self.Y)

    def color(self, x: int, y: int) -> int:
        return self.colors[(x, y)]

    def palette(self) -> frozenset[int]:
        return frozenset(self.colors.values())

    def transpose(self) -> BipartiteColoring:
        return BipartiteColoring(self.Y, self.X, {(y, x): c for (x, y), c in self.colors.items()})

    def restrict(self, X, Y) -> BipartiteColoring:
        return BipartiteColoring(tuple(X), tuple(Y), {(x, y): self.colors[(x, y)] for x in X for y in Y})

    def vertex_bound(self) -> int:
        return max([*self.X, *self.Y, *self.colors.values()])

    def to_colored_graph(self, n: int | None = None) -> EdgeColoredGraph:
        n = self.vertex_bound() if n is None else n
        return EdgeColoredGraph.from_pairs(2, max(n, 2), ((xy, c) for xy, c in self.colors.items()))
