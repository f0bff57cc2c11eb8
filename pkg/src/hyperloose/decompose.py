"""Greedy decomposition of an r-graph into balanced complete r-partite blocks,
and the constants that bound it."""

from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator

import numpy as np
from scipy.special import gamma, gammaincc

from .certificates import Verdict
from .core import Edge, Hypergraph

C1_TERMS = 10**6
_ROUNDING_SLACK = 1e-12


@dataclass(frozen=True)
class Enclosure:
    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= Fraction(x) <= self.hi


def _series_terms(r: int, start: int, stop: int) -> np.ndarray:
    k = np.arange(start, stop + 1, dtype=np.float64)
    return np.log2(k + 1) ** (1.0 / (r - 1)) / (k * (k + 1))


def c1_partial_sum(r: int, terms: int) -> float:
    """``1 + sum_{k=1}^{terms} log2(k+1)^(1/(r-1)) / (k(k+1))`` in floating point."""
    total = [1.0]
    chunk = 10**6
    for start in range(1, terms + 1, chunk):
        total.append(math.fsum(_series_terms(r, start, min(terms, start + chunk - 1))))
    return math.fsum(total)


def _log_tail_integral(p: float, m: float) -> float:
    # int_m^inf log2(u)^p / u^2 du = Gamma(p + 1, ln m) / ln(2)^p
    return gamma(p + 1) * gammaincc(p + 1, math.log(m)) / math.log(2) ** p


@lru_cache(maxsize=None)
def compute_c1(r: int, terms: int = C1_TERMS) -> Enclosure:
    """Rigorous enclosure of ``1 + sum_k log2(k+1)^(1/(r-1)) / (k(k+1))``.

    The first ``terms`` terms are summed directly. The remainder is squeezed
    between integrals of the (decreasing) summand: with ``u = x + 1`` the
    summand lies between ``log2(u)^p / u^2`` and ``(N+1)^2/N^2`` times that,
    which integrates to an upper incomplete gamma function.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    if terms < 10:
        raise ValueError("need at least 10 explicit terms")
    p = 1.0 / (r - 1)
    head = c1_partial_sum(r, terms)
    tail_lo = _log_tail_integral(p, terms + 2)
    tail_hi = ((terms + 1) / terms) ** 2 * _log_tail_integral(p, terms + 1)
    lo = Fraction(head + tail_lo) - Fraction(_ROUNDING_SLACK)
    hi = Fraction(head + tail_hi) + Fraction(_ROUNDING_SLACK)
    return Enclosure(lo, hi)


def compute_c2prime(r: int, k: int) -> Fraction:
    """``floor(k/2) * r^(r-1) / (r-1)!``."""
    if r < 3 or k < 3:
        raise ValueError("need r >= 3 and k >= 3")
    return Fraction((k // 2) * r ** (r - 1), math.factorial(r - 1))


def s_max(n: int, r: int) -> int:
    """Largest block size allowed: ``max(1, floor(log2(n)^(1/(r-1))))``, in exact integers."""
    s = 1
    while n >= 2 ** ((s + 1) ** (r - 1)):
        s += 1
    return s


def budget_bound(n: int, r: int, c1_hi: float) -> float:
    return c1_hi * n**r / math.log2(n) ** (1.0 / (r - 1))


@dataclass(frozen=True)
class PartiteBlock:
    """A balanced complete ``r``-partite block ``K_{s:r}``; parts sorted by first vertex."""

    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        parts = tuple(sorted(tuple(sorted(p)) for p in self.parts))
        object.__setattr__(self, "parts", parts)

    @property
    def r(self) -> int:
        return len(self.parts)

    @property
    def s(self) -> int:
        return len(self.parts[0]) if self.parts else 0

    def is_valid(self) -> bool:
        if not self.parts or any(len(p) != self.s or len(p) == 0 for p in self.parts):
            return False
        flat = [v for p in self.parts for v in p]
        return len(flat) == len(set(flat))

    def edges(self) -> Iterator[Edge]:
        for combo in product(*self.parts):
            yield tuple(sorted(combo))


@dataclass(frozen=True)
class Decomposition:
    r: int
    source_n: int
    blocks: tuple[PartiteBlock, ...]

    @property
    def budget(self) -> Fraction:
        return Fraction(sum(b.s ** (self.r - 1) for b in self.blocks))


def _shadows(h: Hypergraph) -> list[set[Edge]]:
    levels: list[set[Edge]] = [set() for _ in range(h.r + 1)]
    for e in h.edges:
        for j in range(1, h.r + 1):
            levels[j].update(combinations(e, j))
    return levels


def _find_block(h: Hypergraph, s: int, levels: list[set[Edge]]) -> PartiteBlock | None:
    r = h.r
    verts = sorted(v for (v,) in levels[1])
    parts: list[tuple[int, ...]] = []

    def candidates() -> list[int]:
        used = {v for p in parts for v in p}
        level = levels[len(parts) + 1]
        transversals = list(product(*parts)) if parts else [()]
        return [
            v for v in verts
            if v not in used and all(tuple(sorted(t + (v,))) in level for t in transversals)
        ]

    def dfs() -> bool:
        if len(parts) == r:
            return True
        pool = candidates()
        floor = parts[-1][0] if parts else 0
        for combo in combinations(pool, s):
            if combo[0] <= floor:
                continue
            parts.append(combo)
            if dfs():
                return True
            parts.pop()
        return False

    return PartiteBlock(tuple(parts)) if dfs() else None


def find_max_balanced_partite(h: Hypergraph, s_cap: int) -> PartiteBlock | None:
    """Largest ``K_{s:r}`` inside ``h`` with ``s <= s_cap``; lexicographically smallest on ties."""
    if s_cap < 1:
        raise ValueError("s_cap must be positive")
    if not h:
        return None
    levels = _shadows(h)
    for s in range(min(s_cap, h.n // h.r), 0, -1):
        block = _find_block(h, s, levels)
        if block is not None:
            return block
    raise AssertionError("a nonempty hypergraph always holds a single-edge block")


def stopping_threshold(n: int, r: int) -> float:
    return n**r / math.log2(n) ** (1.0 / (r - 1))


def decompose_greedy(h: Hypergraph, stop_at: float | None = None) -> Decomposition:
    """Peel maximum blocks while the residual exceeds the stopping threshold, then emit singles.

    ``stop_at`` overrides the residual-size threshold ``n^r / log2(n)^(1/(r-1))``;
    ``stop_at=0`` runs the block search until the graph is exhausted.
    """
    n, r = h.n, h.r
    if n < 2 * r:
        return Decomposition(r, n, tuple(PartiteBlock(tuple((v,) for v in e)) for e in h.edges))
    cap = s_max(n, r)
    threshold = stopping_threshold(n, r) if stop_at is None else stop_at
    residual = set(h.edges)
    blocks: list[PartiteBlock] = []
    while residual and len(residual) > threshold:
        current = Hypergraph._trusted(r, n, tuple(sorted(residual)))
        block = find_max_balanced_partite(current, cap)
        blocks.append(block)
        residual.difference_update(block.edges())
    blocks.extend(PartiteBlock(tuple((v,) for v in e)) for e in sorted(residual))
    return Decomposition(r, n, tuple(blocks))


def verify_decomposition(h: Hypergraph, d: Decomposition, c1_hi: float | None = None) -> Verdict:
    """Independently recheck a decomposition of ``h``."""
    if d.r != h.r or d.source_n != h.n:
        return Verdict(False, "decomposition parameters do not match the hypergraph")
    cap = s_max(h.n, h.r) if h.n >= 2 else 1
    seen: set[Edge] = set()
    for i, block in enumerate(d.blocks):
        if not block.is_valid() or block.r != h.r:
            return Verdict(False, f"block {i} is not a balanced {h.r}-partite block")
        if block.s > cap:
            return Verdict(False, f"block {i} has s={block.s} above the cap {cap}")
        for e in block.edges():
            if e not in h.edge_set:
                return Verdict(False, f"block {i} edge {e} is not in the hypergraph")
            if e in seen:
                return Verdict(False, f"edge {e} is covered twice")
            seen.add(e)
    if len(seen) != len(h.edges):
        missing = sorted(h.edge_set - seen)
        return Verdict(False, f"edges {missing[:5]} are not covered")
    budget = sum(b.s ** (h.r - 1) for b in d.blocks)
    if h.n >= 2 and h.edges:
        hi = float(compute_c1(h.r).hi) if c1_hi is None else c1_hi
        bound = budget_bound(h.n, h.r, hi)
        if budget > bound:
            return Verdict(False, f"budget {budget} exceeds {bound:.6f}")
    return Verdict(True)
