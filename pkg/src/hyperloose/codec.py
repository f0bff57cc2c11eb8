"""Injective encoding of loose-cycle-free r-graphs by peeling low-codegree sub-edges.

``encode_phi`` repeatedly takes the lexicographically smallest sub-edge whose
codegree is positive but at most ``r*k``, records its neighborhood as a color
palette and deletes every edge through it. If the residual graph ever has all
codegrees above ``r*k`` it must contain a loose ``k``-cycle, which is returned
instead. ``split_psi`` turns the palettes into ``r*k`` singly-colored layers and
``decode`` inverts both steps.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Union

from .certificates import LooseCycle
from .core import Edge, EdgeColoredGraph, Hypergraph, MultiColoredGraph, extend
from .detect import find_loose_cycle_via_codegree


@dataclass(frozen=True)
class Encoding:
    """``r*k`` edge-colored ``(r-1)``-graphs; layer ``i`` holds the ``i``-th smallest color."""

    r: int
    k: int
    n: int
    layers: tuple[EdgeColoredGraph, ...]

    def __post_init__(self) -> None:
        if len(self.layers) != self.r * self.k:
            raise ValueError(f"need exactly {self.r * self.k} layers, got {len(self.layers)}")
        for prev, layer in zip(self.layers, self.layers[1:]):
            if not layer.base.edge_set <= prev.base.edge_set:
                raise ValueError("layer edge sets must be nested")
        seen: dict[Edge, set[int]] = {}
        for layer in self.layers:
            for e, c in layer.coloring.items():
                colors = seen.setdefault(e, set())
                if c in colors:
                    raise ValueError(f"edge {e} repeats color {c} across layers")
                colors.add(c)

    @classmethod
    def _trusted(cls, r: int, k: int, n: int, layers: tuple[EdgeColoredGraph, ...]) -> Encoding:
        obj = object.__new__(cls)
        for name, value in (("r", r), ("k", k), ("n", n), ("layers", layers)):
            object.__setattr__(obj, name, value)
        return obj


EncodeOutcome = Union[MultiColoredGraph, LooseCycle]


def peel(h: Hypergraph, k: int) -> tuple[dict[Edge, frozenset[int]], list[Edge]]:
    """Run the searching-and-deleting loop.

    Returns the palettes in peeling order and the residual edges (empty when
    the graph peels away completely).
    """
    r = h.r
    cap = r * k
    links: dict[Edge, set[int]] = {}
    for e in h.edges:
        for i in range(r):
            key = e[:i] + e[i + 1 :]
            nb = links.get(key)
            if nb is None:
                links[key] = {e[i]}
            else:
                nb.add(e[i])
    # Codegrees only decrease, so a sub-edge enters the heap once: at the
    # start, or when its codegree drops from cap + 1 to cap.
    heap = [s for s, nb in links.items() if len(nb) <= cap]
    heapq.heapify(heap)
    palettes: dict[Edge, frozenset[int]] = {}
    remaining = len(h.edges)
    while heap:
        s = heapq.heappop(heap)
        nb = links[s]
        if not nb:
            continue
        palettes[s] = frozenset(nb)
        for v in sorted(nb):
            e = tuple(sorted(s + (v,)))
            remaining -= 1
            for i in range(r):
                key = e[:i] + e[i + 1 :]
                other = links[key]
                if len(other) == cap + 1:
                    heapq.heappush(heap, key)
                other.discard(e[i])
    residual: list[Edge] = []
    if remaining:
        for e in h.edges:
            if all(e[i] in links[e[:i] + e[i + 1 :]] for i in range(r)):
                residual.append(e)
    return palettes, residual


def encode_phi(h: Hypergraph, k: int) -> EncodeOutcome:
    """Encode ``h`` as a multi-colored ``(r-1)``-graph, or return a loose ``k``-cycle of ``h``."""
    if k < 3:
        raise ValueError("k must be at least 3")
    if h.r < 3:
        raise ValueError("encoding needs r >= 3")
    palettes, residual = peel(h, k)
    if residual:
        return find_loose_cycle_via_codegree(Hypergraph._trusted(h.r, h.n, tuple(residual)), k)
    base = Hypergraph._trusted(h.r - 1, h.n, tuple(sorted(palettes)))
    return MultiColoredGraph._trusted(base, palettes, h.r * k)


def split_psi(m: MultiColoredGraph, r: int | None = None, k: int | None = None) -> Encoding:
    """Split palettes into ``capacity`` layers, colors peeled smallest first.

    ``r`` defaults to the base uniformity plus one; ``k`` to ``capacity / r``.
    """
    r = m.base.r + 1 if r is None else r
    k = m.capacity // r if k is None else k
    if r * k != m.capacity:
        raise ValueError(f"capacity {m.capacity} is not r*k for r={r}")
    n = m.base.n
    ordered = {e: sorted(cs) for e, cs in m.palette.items()}
    layers = []
    for i in range(m.capacity):
        coloring = {e: cs[i] for e, cs in ordered.items() if len(cs) > i}
        base = Hypergraph._trusted(r - 1, n, tuple(e for e in m.base.edges if e in coloring))
        layer = object.__new__(EdgeColoredGraph)
        object.__setattr__(layer, "base", base)
        object.__setattr__(layer, "coloring", coloring)
        layers.append(layer)
    return Encoding._trusted(r, k, n, tuple(layers))


def merge_layers(enc: Encoding) -> MultiColoredGraph:
    """Inverse of :func:`split_psi`."""
    palette: dict[Edge, set[int]] = {}
    for layer in enc.layers:
        for e, c in layer.coloring.items():
            palette.setdefault(e, set()).add(c)
    base = Hypergraph._trusted(enc.r - 1, enc.n, tuple(sorted(palette)))
    return MultiColoredGraph(base, {e: frozenset(cs) for e, cs in palette.items()}, enc.r * enc.k)


def decode(enc: Encoding) -> Hypergraph:
    """Union of the extensions of all layers."""
    out: set[Edge] = set()
    for layer in enc.layers:
        out.update(extend(layer).edges)
    return Hypergraph._trusted(enc.r, enc.n, tuple(sorted(out)))


def encode(h: Hypergraph, k: int) -> Encoding | LooseCycle:
    """``encode_phi`` followed by ``split_psi``."""
    out = encode_phi(h, k)
    if isinstance(out, LooseCycle):
        return out
    return split_psi(out, h.r, k)


def peels_to_empty(h: Hypergraph, k: int) -> bool:
    """Whether the peeling removes every edge, computed round by round.

    Independent of :func:`peel`: each round deletes, all at once, every edge
    containing any sub-edge of codegree at most ``r*k``. Since codegrees only
    drop as edges go, the order of deletion does not change what survives.
    """
    cap = h.r * k
    edges = set(h.edges)
    while edges:
        degree: dict[Edge, int] = {}
        for e in edges:
            for i in range(len(e)):
                key = e[:i] + e[i + 1 :]
                degree[key] = degree.get(key, 0) + 1
        low = {s for s, d in degree.items() if d <= cap}
        if not low:
            return False
        edges = {e for e in edges if not any(e[:i] + e[i + 1 :] in low for i in range(len(e)))}
    return True
