"""Witness objects returned by the finders, and their independent validators.

Validators never trust the finder that produced a certificate: they re-derive
every defining condition from the certificate and the host alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import singledispatch
from itertools import combinations
from typing import Mapping, Union

from .core import BipartiteColoring, Edge, EdgeColoredGraph, Hypergraph, as_edge


@dataclass(frozen=True)
class LooseCycle:
    """Edges ``e_1..e_k`` in cyclic order; ``connectors[i]`` joins ``edges[i]`` and ``edges[i+1]``."""

    edges: tuple[Edge, ...]
    connectors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(as_edge(e) for e in self.edges))
        object.__setattr__(self, "connectors", tuple(self.connectors))

    @property
    def k(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class GraphCycle:
    """A cycle ``x_0 x_1 ... x_{m-1} x_0`` in a 2-graph."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[Edge]:
        m = len(self.vertices)
        return [as_edge((self.vertices[i], self.vertices[(i + 1) % m])) for i in range(m)]


@dataclass(frozen=True)
class RainbowCycle:
    """A strongly rainbow cycle in an edge-colored 2-graph.

    ``colors[i]`` is the color of the edge ``vertices[i] vertices[i+1]``.
    """

    vertices: tuple[int, ...]
    colors: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[Edge]:
        return GraphCycle(self.vertices).edges()


@dataclass(frozen=True)
class RainbowBiclique:
    """A complete bipartite subgraph ``A x B`` whose edges all have distinct colors."""

    A: tuple[int, ...]
    B: tuple[int, ...]


@dataclass(frozen=True)
class Canonical:
    """``Q x R`` where each ``E(x, R)`` is monochromatic in ``colors[i]``, all distinct.

    ``side`` records whether ``Q`` came from the ``X`` or the ``Y`` side.
    """

    Q: tuple[int, ...]
    R: tuple[int, ...]
    colors: tuple[int, ...]
    side: str = "X"


@dataclass(frozen=True)
class Monochromatic:
    """``Q x R`` in a single color."""

    Q: tuple[int, ...]
    R: tuple[int, ...]
    color: int
    side: str = "X"


Certificate = Union[LooseCycle, GraphCycle, RainbowCycle, RainbowBiclique, Canonical, Monochromatic]


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


_OK = Verdict(True)


def _fail(reason: str) -> Verdict:
    return Verdict(False, reason)


def validate_certificate(host, cert) -> Verdict:
    """Check ``cert`` against ``host``; returns a falsy verdict with the first failure."""
    try:
        return _validate(cert, host)
    except TypeError as exc:
        return _fail(str(exc))


@singledispatch
def _validate(cert, host) -> Verdict:
    return _fail(f"unknown certificate type {type(cert).__name__}")


@_validate.register
def _(cert: LooseCycle, host: Hypergraph) -> Verdict:
    k = len(cert.edges)
    if k < 3:
        return _fail("a loose cycle needs at least 3 edges")
    if len(cert.connectors) != k:
        return _fail("need exactly one connector per edge")
    if len(set(cert.connectors)) != k:
        return _fail("connectors are not distinct")
    if len(set(cert.edges)) != k:
        return _fail("edges are not distinct")
    for e in cert.edges:
        if len(e) != host.r or len(set(e)) != host.r:
            return _fail(f"{e} is not an {host.r}-set")
        if e not in host.edge_set:
            return _fail(f"{e} is not an edge of the host")
    sets = [set(e) for e in cert.edges]
    for i in range(k):
        j = (i + 1) % k
        if sets[i] & sets[j] != {cert.connectors[i]}:
            return _fail(f"edges {i + 1} and {j + 1} do not meet exactly in {cert.connectors[i]}")
    for i, j in combinations(range(k), 2):
        if j - i not in (1, k - 1) and sets[i] & sets[j]:
            return _fail(f"non-consecutive edges {i + 1} and {j + 1} intersect")
    return _OK


@_validate.register
def _(cert: GraphCycle, host: Hypergraph) -> Verdict:
    if host.r != 2:
        return _fail("a graph cycle needs a 2-uniform host")
    if cert.length < 3:
        return _fail("a simple cycle has at least 3 vertices")
    if len(set(cert.vertices)) != cert.length:
        return _fail("cycle repeats a vertex")
    for e in cert.edges():
        if e not in host.edge_set:
            return _fail(f"{e} is not an edge of the host")
    return _OK


def _pair_colors(host) -> Mapping[Edge, int]:
    if isinstance(host, BipartiteColoring):
        return {as_edge(xy): c for xy, c in host.colors.items()}
    if isinstance(host, EdgeColoredGraph):
        if host.r != 2:
            raise TypeError("host must be 2-uniform")
        return host.coloring
    raise TypeError(f"cannot read edge colors from {type(host).__name__}")


@_validate.register
def _(cert: RainbowCycle, host) -> Verdict:
    colors = _pair_colors(host)
    m = cert.length
    if m < 3 or len(cert.colors) != m:
        return _fail("malformed cycle")
    if len(set(cert.vertices)) != m:
        return _fail("cycle repeats a vertex")
    for e, c in zip(cert.edges(), cert.colors):
        if e not in colors:
            return _fail(f"{e} is not an edge of the host")
        if colors[e] != c:
            return _fail(f"{e} has color {colors[e]}, certificate says {c}")
    if len(set(cert.colors)) != m:
        return _fail("colors repeat")
    if set(cert.colors) & set(cert.vertices):
        return _fail("a color lies on the cycle")
    return _OK


def _biclique_colors(host, Q, R) -> dict[tuple[int, int], int] | Verdict:
    colors = _pair_colors(host)
    if not Q or not R:
        return _fail("empty side")
    if len(set(Q)) != len(Q) or len(set(R)) != len(R) or set(Q) & set(R):
        return _fail("sides repeat a vertex or overlap")
    out = {}
    for q in Q:
        for r in R:
            c = colors.get(as_edge((q, r)))
            if c is None:
                return _fail(f"({q}, {r}) is not an edge of the host")
            out[(q, r)] = c
    return out


@_validate.register
def _(cert: RainbowBiclique, host) -> Verdict:
    got = _biclique_colors(host, cert.A, cert.B)
    if isinstance(got, Verdict):
        return got
    if len(set(got.values())) != len(got):
        return _fail("two edges share a color")
    return _OK


@_validate.register
def _(cert: Canonical, host) -> Verdict:
    got = _biclique_colors(host, cert.Q, cert.R)
    if isinstance(got, Verdict):
        return got
    if len(cert.colors) != len(cert.Q):
        return _fail("need one canonical color per vertex of Q")
    for q, z in zip(cert.Q, cert.colors):
        for r in cert.R:
            if got[(q, r)] != z:
                return _fail(f"row {q} is not monochromatic in {z}")
    if len(set(cert.colors)) != len(cert.colors):
        return _fail("canonical colors repeat")
    return _OK


@_validate.register
def _(cert: Monochromatic, host) -> Verdict:
    got = _biclique_colors(host, cert.Q, cert.R)
    if isinstance(got, Verdict):
        return got
    if set(got.values()) != {cert.color}:
        return _fail(f"not monochromatic in {cert.color}")
    return _OK


def check_cycle_residue(cert: GraphCycle, h: int) -> bool:
    """Whether the cycle length is 2 modulo ``h``."""
    return cert.length % h == 2 % h
