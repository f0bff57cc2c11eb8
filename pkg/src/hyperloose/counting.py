"""Exact desk-scale counts of loose-cycle-free hypergraphs and colored bicliques.

Counts are exact integers; infeasible parameter ranges are refused with
:class:`OutOfBudget` rather than approximated.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

import numpy as np

from .core import Hypergraph
from .detect import find_loose_cycle_exact, iter_loose_cycles
from .errors import OutOfBudget

MAX_SWEEP_EDGES = 24
MAX_COLORINGS = 5_000_000
_CHUNK_BITS = 20


def log2_rational(count: int) -> Fraction:
    """``log2(count)`` rounded to a multiple of ``1e-6``."""
    return Fraction(round(math.log2(count) * 10**6), 10**6)


@dataclass(frozen=True)
class CountReport:
    params: dict
    count: int
    elapsed: float = 0.0
    search_nodes: int = 0
    extra: dict = field(default_factory=dict)

    @property
    def log2(self) -> Fraction:
        return log2_rational(self.count)

    def record(self) -> str:
        fields = [f"{k}={v}" for k, v in self.params.items()]
        fields += [f"count={self.count}", f"log2={float(self.log2):.6f}"]
        fields += [f"{k}={v}" for k, v in self.extra.items()]
        return " ".join(fields)


def edge_universe(r: int, n: int) -> list[tuple[int, ...]]:
    """All ``r``-subsets of ``[n]`` in lexicographic order; bit ``i`` of a mask is edge ``i``."""
    return list(combinations(range(1, n + 1), r))


def graph_from_mask(r: int, n: int, mask: int, universe=None) -> Hypergraph:
    universe = edge_universe(r, n) if universe is None else universe
    return Hypergraph._trusted(r, n, tuple(e for i, e in enumerate(universe) if mask >> i & 1))


def cycle_masks(r: int, n: int, k: int) -> list[int]:
    """Bitmasks of every loose ``k``-cycle inside the complete ``r``-graph on ``[n]``."""
    universe = edge_universe(r, n)
    index = {e: i for i, e in enumerate(universe)}
    masks = set()
    for cyc in iter_loose_cycles(Hypergraph._trusted(r, n, tuple(universe)), k):
        masks.add(sum(1 << index[e] for e in cyc.edges))
    return sorted(masks)


def _free_flags(masks: np.ndarray, copies: list[int]) -> np.ndarray:
    hit = np.zeros(masks.shape, dtype=bool)
    for c in copies:
        cm = np.uint64(c)
        hit |= (masks & cm) == cm
    return ~hit


def _count_range(args) -> int:
    lo, hi, copies = args
    masks = np.arange(lo, hi, dtype=np.uint64)
    return int(np.count_nonzero(_free_flags(masks, copies)))


def forb_flags(r: int, n: int, k: int) -> np.ndarray:
    """Boolean array over all edge masks: ``True`` where the graph is ``C_k``-free."""
    m = math.comb(n, r)
    if m > MAX_SWEEP_EDGES:
        raise OutOfBudget(f"binom({n},{r}) = {m} edges exceeds the sweep limit {MAX_SWEEP_EDGES}")
    copies = cycle_masks(r, n, k)
    return _free_flags(np.arange(1 << m, dtype=np.uint64), copies)


def count_forb(r: int, n: int, k: int, workers: int = 1, node_limit: int | None = None) -> CountReport:
    """Number of loose-``C_k``-free ``r``-graphs on the labeled vertex set ``[n]``.

    A loose ``C_k`` spans ``k(r-1)`` vertices, so below that every graph
    counts. Otherwise all ``2^binom(n,r)`` edge masks are swept against the
    precomputed cycle copies, split into fixed high-bit prefixes so that the
    result does not depend on ``workers``.
    """
    if r < 2 or k < 3 or n < r:
        raise ValueError("need r >= 2, k >= 3 and n >= r")
    start = time.perf_counter()
    params = {"r": r, "n": n, "k": k}
    m = math.comb(n, r)
    if n < k * (r - 1):
        return CountReport(params, 2**m, time.perf_counter() - start, 0)
    if m > MAX_SWEEP_EDGES:
        raise OutOfBudget(f"binom({n},{r}) = {m} edges exceeds the sweep limit {MAX_SWEEP_EDGES}")
    if node_limit is not None and 2**m > node_limit:
        raise OutOfBudget(f"sweep of 2^{m} graphs exceeds node limit {node_limit}")
    copies = cycle_masks(r, n, k)
    step = 1 << min(m, _CHUNK_BITS)
    jobs = [(lo, lo + step, copies) for lo in range(0, 1 << m, step)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            total = sum(pool.map(_count_range, jobs))
    else:
        total = sum(map(_count_range, jobs))
    return CountReport(params, total, time.perf_counter() - start, 1 << m)


def count_forb_naive(r: int, n: int, k: int) -> int:
    """Same count, one exact search per graph. Only for tiny cases."""
    universe = edge_universe(r, n)
    return sum(
        find_loose_cycle_exact(graph_from_mask(r, n, mask, universe), k) is None
        for mask in range(1 << len(universe))
    )


def bicliques(n: int, s: int, t: int):
    """Complete bipartite edge sets ``A x B`` with ``A, B`` disjoint in ``[n]``.

    With ``s == t`` the two sides are unordered, so each edge set appears once.
    """
    vertices = range(1, n + 1)
    for A in combinations(vertices, s):
        rest = [v for v in vertices if v not in A]
        for B in combinations(rest, t):
            if s == t and B[0] < A[0]:
                continue
            yield A, B


def count_colored_bicliques(
    n: int, k: int, s: int, t: int, node_limit: int | None = None
) -> CountReport:
    """Edge-colored ``K_{s,t}`` on vertices of ``[n]`` whose 3-uniform extension is ``C_k``-free.

    Every coloring (each edge colored by a vertex outside it) is enumerated
    and its extension checked with the exact loose-cycle search.
    """
    if s < 1 or t < 1 or k < 3:
        raise ValueError("need s, t >= 1 and k >= 3")
    if s * t > 9 or n > 8:
        raise OutOfBudget("colored biclique sweep needs s*t <= 9 and n <= 8")
    if s + t > n:
        raise ValueError("parts do not fit in [n]")
    start = time.perf_counter()
    pairs = list(bicliques(n, s, t))
    work = len(pairs) * (n - 2) ** (s * t)
    limit = MAX_COLORINGS if node_limit is None else node_limit
    if work > limit:
        raise OutOfBudget(f"{work} colorings exceed the limit {limit}")
    total = 0
    for A, B in pairs:
        edges = [(a, b) if a < b else (b, a) for a in A for b in B]
        choices = [[c for c in range(1, n + 1) if c not in e] for e in edges]
        for colors in product(*choices):
            triples = {tuple(sorted(e + (c,))) for e, c in zip(edges, colors)}
            ext = Hypergraph._trusted(3, n, tuple(sorted(triples)))
            if find_loose_cycle_exact(ext, k) is None:
                total += 1
    params = {"n": n, "k": k, "s": s, "t": t}
    return CountReport(params, total, time.perf_counter() - start, work)


def turan_lower_bound(n: int, r: int, k: int) -> int:
    """Edges meeting a fixed set of ``floor((k-1)/2)`` vertices; such a graph has no loose ``C_k``."""
    return math.comb(n, r) - math.comb(n - (k - 1) // 2, r)


def growth_table(r: int, k: int, n_range, workers: int = 1) -> list[CountReport]:
    """``log2 |Forb_r(n, C_k)|`` for each ``n`` beside the lower bound from the star-like construction."""
    rows = []
    for n in n_range:
        rep = count_forb(r, n, k, workers=workers)
        lb = turan_lower_bound(n, r, k)
        extra = {"lower": lb, "holds": rep.log2 >= lb}
        rows.append(CountReport(rep.params, rep.count, rep.elapsed, rep.search_nodes, extra))
    return rows


def format_table(rows: list[CountReport]) -> str:
    """Aligned text table of count reports."""
    if not rows:
        return ""
    header = [*rows[0].params, "count", "log2", *rows[0].extra]
    body = [
        [*(str(v) for v in row.params.values()), str(row.count), f"{float(row.log2):.6f}",
         *(str(v) for v in row.extra.values())]
        for row in rows
    ]
    widths = [max(len(h), *(len(r[i]) for r in body)) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in body]
    return "\n".join(lines) + "\n"
