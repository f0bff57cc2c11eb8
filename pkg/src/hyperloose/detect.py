"""Cycle finders: exact loose-cycle search, the high-codegree constructive
finder, cycles of length 2 modulo h, and strongly rainbow even cycles."""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterator

from .certificates import GraphCycle, LooseCycle, RainbowCycle, validate_certificate
from .core import (
    BipartiteColoring,
    Edge,
    EdgeColoredGraph,
    Hypergraph,
    as_edge,
    neighborhood,
    shadow,
    two_shadow,
)
from .errors import BudgetExhausted, PreconditionViolated


@dataclass(frozen=True)
class SearchBudget:
    """Limits for backtracking searches; ``node_limit=None`` means unbounded."""

    node_limit: int | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive")


UNBOUNDED = SearchBudget()


class _Counter:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit: int | None) -> None:
        self.nodes = 0
        self.limit = limit

    def tick(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExhausted(self.nodes - 1)


# ---------------------------------------------------------------------------
# exact loose-cycle search
# ---------------------------------------------------------------------------


def iter_loose_cycles(h: Hypergraph, k: int, budget: SearchBudget = UNBOUNDED) -> Iterator[LooseCycle]:
    """Yield every loose ``k``-cycle of ``h`` exactly once.

    Rotations and reflections are pruned by requiring the first edge to be the
    smallest edge of the cycle and the second edge to come after the last one.
    """
    if k < 3:
        raise ValueError("loose cycles have at least 3 edges")
    edges = h.edges
    masks = [sum(1 << v for v in e) for e in edges]
    incident: dict[int, list[int]] = defaultdict(list)
    for idx, e in enumerate(edges):
        for v in e:
            incident[v].append(idx)
    counter = _Counter(budget.node_limit)
    path: list[int] = []
    conn: list[int] = []

    def grow(used: int) -> Iterator[LooseCycle]:
        counter.tick()
        first = path[0]
        last = path[-1]
        closing = len(path) == k - 1
        prev = conn[-1] if conn else 0
        first_free = masks[first] & ~(1 << conn[0]) if conn else masks[first]
        for v in edges[last]:
            if v == prev:
                continue
            vbit = 1 << v
            for b in incident[v]:
                if b <= first:
                    continue
                meet = masks[b] & used
                if not closing:
                    if meet != vbit:
                        continue
                    path.append(b)
                    conn.append(v)
                    yield from grow(used | masks[b])
                    path.pop()
                    conn.pop()
                else:
                    rest = meet & ~vbit
                    if meet & vbit == 0 or rest == 0 or rest & (rest - 1):
                        continue
                    if rest & first_free != rest or b > path[1]:
                        continue
                    w = rest.bit_length() - 1
                    yield LooseCycle(
                        tuple(edges[i] for i in path) + (edges[b],),
                        tuple(conn) + (v, w),
                    )

    for first in range(len(edges)):
        path.append(first)
        yield from grow(masks[first])
        path.pop()


def find_loose_cycle_exact(
    h: Hypergraph, k: int, budget: SearchBudget = UNBOUNDED
) -> LooseCycle | None:
    """Backtracking search for a loose ``k``-cycle.

    Returns ``None`` only after the whole symmetry-reduced space is explored;
    raises :class:`BudgetExhausted` if ``budget.node_limit`` is hit first.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    if len(h) < k or len(h.vertices) < k * (h.r - 1):
        return None
    return next(iter_loose_cycles(h, k, budget), None)


# ---------------------------------------------------------------------------
# constructive finder under the high-codegree hypothesis
# ---------------------------------------------------------------------------


def check_codegree_condition(h: Hypergraph, threshold: int) -> None:
    """Raise unless every sub-edge of ``h`` has codegree above ``threshold``."""
    if not h:
        raise PreconditionViolated("empty hypergraph has no sub-edges to support a cycle")
    for s in sorted(shadow(h)):
        if len(h._links[s]) <= threshold:
            raise PreconditionViolated(
                f"sub-edge {s} has codegree {len(h._links[s])} <= {threshold}", witness=s
            )


def find_loose_cycle_via_codegree(h: Hypergraph, k: int) -> LooseCycle:
    """Build a loose ``k``-cycle when every sub-edge has codegree above ``r*k``.

    First a ``k``-cycle is grown in the 2-shadow by repeatedly swapping one
    cycle edge for the two other sides of a triangle that avoids the cycle.
    Each cycle pair is then completed to an edge of ``h``; while two completed
    edges overlap outside their designated pairs, one offending vertex is
    traded for a vertex outside the current union, which the codegree bound
    always provides. Every choice takes the lexicographically smallest option.
    """
    r = h.r
    if r < 3:
        raise ValueError("the codegree construction needs r >= 3")
    if k < 3:
        raise ValueError("k must be at least 3")
    check_codegree_condition(h, r * k)

    pairs = two_shadow(h)
    adj: dict[int, set[int]] = defaultdict(set)
    for a, b in pairs:
        adj[a].add(b)
        adj[b].add(a)

    cycle = _smallest_triangle(pairs, adj)
    while len(cycle) < k:
        on_cycle = set(cycle)
        m = len(cycle)
        slots = sorted(range(m), key=lambda i: as_edge((cycle[i], cycle[(i + 1) % m])))
        for i in slots:
            x, y = cycle[i], cycle[(i + 1) % m]
            common = (adj[x] & adj[y]) - on_cycle
            if common:
                cycle.insert(i + 1, min(common))
                break
        else:  # pragma: no cover - excluded by the codegree bound
            raise AssertionError("no triangle extends the shadow cycle")

    by_pair: dict[Edge, list[Edge]] = defaultdict(list)
    for e in h.edges:
        for i, a in enumerate(e):
            for b in e[i + 1 :]:
                by_pair[(a, b)].append(e)
    fixed = [as_edge((cycle[i], cycle[(i + 1) % k])) for i in range(k)]
    chosen = [list(by_pair[f][0]) for f in fixed]

    for _ in range(k * r + 1):
        count: dict[int, int] = defaultdict(int)
        for e in chosen:
            for v in e:
                count[v] += 1
        bad = None
        for i, e in enumerate(chosen):
            for v in e:
                if v not in fixed[i] and count[v] > 1:
                    bad = (i, v)
                    break
            if bad:
                break
        if bad is None:
            break
        i, v = bad
        base = [u for u in chosen[i] if u != v]
        fresh = neighborhood(h, base) - count.keys()
        chosen[i] = sorted(base + [min(fresh)])
    else:  # pragma: no cover - each repair grows the vertex union
        raise AssertionError("overlap repair did not terminate")

    cert = LooseCycle(tuple(tuple(e) for e in chosen), tuple(cycle[(i + 1) % k] for i in range(k)))
    verdict = validate_certificate(h, cert)
    assert verdict, verdict.reason
    return cert


def _smallest_triangle(pairs, adj) -> list[int]:
    for a, b in sorted(pairs):
        common = [c for c in adj[a] & adj[b] if c > b]
        if common:
            return [a, b, min(common)]
    raise PreconditionViolated("2-shadow has no triangle")


# ---------------------------------------------------------------------------
# cycles of length 2 modulo h
# ---------------------------------------------------------------------------

EXACT_PATH_LIMIT = 20
EXACT_PATH_NODES = 200_000


def min_degree_core(g: Hypergraph, min_degree: int) -> dict[int, set[int]]:
    """Adjacency of what survives repeatedly deleting vertices of degree below ``min_degree``."""
    adj: dict[int, set[int]] = defaultdict(set)
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    queue = deque(v for v in sorted(adj) if len(adj[v]) < min_degree)
    gone = set(queue)
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            adj[w].discard(v)
            if w not in gone and len(adj[w]) < min_degree:
                gone.add(w)
                queue.append(w)
        adj[v] = set()
    return {v: nb for v, nb in adj.items() if v not in gone}


def _closed_path(adj: dict[int, set[int]]) -> list[int]:
    """A path whose first vertex has every neighbor on the path.

    Below ``EXACT_PATH_LIMIT`` vertices this is an exact longest path (node
    capped); otherwise a greedy path extended at its front, with rotations
    tried when the front gets stuck, until the front is closed.
    """
    if len(adj) < EXACT_PATH_LIMIT:
        path = _longest_path_exact(adj)
        if path is not None:
            return path
    return _greedy_rotation_path(adj)


def _longest_path_exact(adj) -> list[int] | None:
    n = len(adj)
    best: list[int] = []
    nodes = 0

    def dfs(path: list[int], seen: set[int]) -> bool:
        nonlocal best, nodes
        nodes += 1
        if nodes > EXACT_PATH_NODES:
            raise BudgetExhausted(nodes)
        if len(path) > len(best):
            best = list(path)
            if len(best) == n:
                return True
        for w in sorted(adj[path[-1]]):
            if w not in seen:
                path.append(w)
                seen.add(w)
                if dfs(path, seen):
                    return True
                path.pop()
                seen.discard(w)
        return False

    try:
        for start in sorted(adj):
            if dfs([start], {start}):
                break
    except BudgetExhausted:
        return None
    best.reverse()
    return best


def _greedy_rotation_path(adj) -> list[int]:
    path = [min(adj)]
    on_path = {path[0]}
    while True:
        front = path[0]
        ext = adj[front] - on_path
        if ext:
            w = min(ext)
            path.insert(0, w)
            on_path.add(w)
            continue
        # Posa rotation: reversing a prefix can expose a new, extendable front.
        pos = {v: i for i, v in enumerate(path)}
        rotated = None
        for w in sorted(adj[front]):
            j = pos[w]
            if j >= 2:
                cand = path[j - 1]
                if adj[cand] - on_path:
                    rotated = path[:j][::-1] + path[j:]
                    break
        if rotated is None:
            return path
        path = rotated


def find_cycle_2_mod_h(g: Hypergraph, h: int) -> GraphCycle | None:
    """Find a cycle whose length is 2 modulo ``h``.

    Vertices of degree at most ``h`` are peeled off; in the remaining core
    (minimum degree at least ``h + 1``) a path ``x_0 .. x_l`` is taken whose
    end ``x_0`` has all its neighbors on the path. Either some neighbor
    ``x_i`` gives ``i - 1 = 0 (mod h)`` and closes ``x_0 .. x_i``, or two
    neighbors share a residue and close a cycle through ``x_0``. Success is
    guaranteed when the graph has at least ``(h + 1) * n`` edges; ``None``
    means the core is empty.
    """
    if g.r != 2:
        raise ValueError("cycle search needs a 2-uniform graph")
    if h < 2:
        raise ValueError("h must be at least 2")
    core = min_degree_core(g, h + 1)
    if not core:
        return None
    path = _closed_path(core)
    x0 = path[0]
    assert core[x0] <= set(path)
    index = {v: i for i, v in enumerate(path)}
    hits = sorted(index[w] for w in core[x0])
    residue_seen: dict[int, int] = {}
    cycle = None
    for i in hits:
        if i == 1:
            continue
        if (i - 1) % h == 0:
            cycle = path[: i + 1]
            break
    if cycle is None:
        for i in hits:
            if i == 1:
                continue
            res = (i - 1) % h
            if res in residue_seen:
                j0 = residue_seen[res]
                cycle = [x0] + path[j0 : i + 1]
                break
            residue_seen[res] = i
    assert cycle is not None, "pigeonhole failed on a core of minimum degree h + 1"
    cert = GraphCycle(tuple(cycle))
    assert cert.length % h == 2 % h and cert.length >= 3
    return cert


# ---------------------------------------------------------------------------
# strongly rainbow even cycles in colored complete bipartite graphs
# ---------------------------------------------------------------------------


def strongly_rainbow_spanning_choice(g: EdgeColoredGraph) -> list[Edge]:
    """One edge per color that avoids the vertex set, smallest edge first."""
    support = set(g.base.vertices)
    pick: dict[int, Edge] = {}
    for e, c in g.items():
        if c not in support and c not in pick:
            pick[c] = e
    return [pick[c] for c in sorted(pick)]


def find_strongly_rainbow_even_cycle(g: EdgeColoredGraph, l: int) -> RainbowCycle | None:
    """A strongly rainbow ``2l``-cycle in a colored complete bipartite graph.

    One edge per color outside ``V(G)`` forms a strongly rainbow subgraph;
    a cycle of length 2 modulo ``2l - 2`` in it is shortened through chords
    of the host until it has exactly ``2l`` edges. Guaranteed to succeed
    when the number of colors is at least ``2l(s + t)``.
    """
    if l < 2:
        raise ValueError("l must be at least 2")
    try:
        BipartiteColoring.from_colored_graph(g)
    except ValueError as exc:
        raise PreconditionViolated(f"base must be complete bipartite: {exc}") from exc
    chosen = strongly_rainbow_spanning_choice(g)
    if len(chosen) < 2 * l:
        return None
    sub = Hypergraph._trusted(2, g.n, tuple(sorted(chosen)))
    found = find_cycle_2_mod_h(sub, 2 * l - 2)
    if found is None:
        return None
    cycle = list(found.vertices)
    while len(cycle) > 2 * l:
        cycle = _shorten(g, cycle, l)
    colors = tuple(g.color((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle)))
    cert = RainbowCycle(tuple(cycle), colors)
    verdict = validate_certificate(g, cert)
    assert verdict, verdict.reason
    return cert


def _shorten(g: EdgeColoredGraph, cycle: list[int], l: int) -> list[int]:
    # The chord c_0 c_{2l-1} splits the cycle into a (2l-1)-path P1 and the
    # rest P2; its color is new to one of the two sides.
    first, last = cycle[0], cycle[2 * l - 1]
    chord_color = g.color((first, last))
    p1 = cycle[: 2 * l]
    p1_colors = {g.color((p1[i], p1[i + 1])) for i in range(2 * l - 1)}
    inner = set(p1) - {first, last}
    if chord_color not in p1_colors and chord_color not in inner:
        return p1
    return cycle[2 * l - 1 :] + [first]
