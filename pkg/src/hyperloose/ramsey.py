"""Canonical Ramsey structures in edge-colored complete bipartite graphs."""

from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .certificates import (
    Canonical,
    Monochromatic,
    RainbowBiclique,
    RainbowCycle,
    validate_certificate,
)
from .core import BipartiteColoring, Hypergraph
from .decompose import find_max_balanced_partite
from .detect import UNBOUNDED, SearchBudget, _Counter, find_strongly_rainbow_even_cycle
from .errors import InternalContradiction, PreconditionViolated

SAMPLE_ATTEMPTS = 64

__all__ = [
    "BipartiteColoring",
    "ColorBoundReport",
    "Pattern",
    "canonical_search",
    "classify",
    "color_count_bound_check",
    "extract_canonical_or_mono",
    "find_rainbow_biclique",
]


class Pattern(str, enum.Enum):
    MONOCHROMATIC = "monochromatic"
    X_CANONICAL = "X_canonical"
    WEAKLY_X_CANONICAL = "weakly_X_canonical"
    NONE = "none_of_these"


def _row_colors(b: BipartiteColoring) -> list[int] | None:
    rows = []
    for x in b.X:
        seen = {b.colors[(x, y)] for y in b.Y}
        if len(seen) != 1:
            return None
        rows.append(seen.pop())
    return rows


def classify(b: BipartiteColoring) -> Pattern:
    """Strongest pattern that holds with ``X`` as the distinguished side."""
    rows = _row_colors(b)
    if rows is None:
        return Pattern.NONE
    if len(set(rows)) == 1:
        return Pattern.MONOCHROMATIC
    if len(set(rows)) == len(rows):
        return Pattern.X_CANONICAL
    return Pattern.WEAKLY_X_CANONICAL


def extract_canonical_or_mono(b: BipartiteColoring, side: str = "X") -> Canonical | Monochromatic:
    """From a weakly ``X``-canonical coloring, a canonical or monochromatic sub-biclique.

    Taking one row per distinct row color gives a maximal canonical set; the
    largest class of equal row colors gives a monochromatic one. Their sizes
    multiply to at least ``|X|``, so the larger one has at least
    ``ceil(sqrt(|X|))`` rows.
    """
    rows = _row_colors(b)
    if rows is None:
        raise PreconditionViolated("coloring is not weakly X-canonical")
    first: dict[int, int] = {}
    classes: dict[int, list[int]] = {}
    for x, z in zip(b.X, rows):
        first.setdefault(z, x)
        classes.setdefault(z, []).append(x)
    canon_q = tuple(first[z] for z in first)
    canon_colors = tuple(first)
    mono_color = max(classes, key=lambda z: (len(classes[z]), -b.X.index(classes[z][0])))
    mono_q = tuple(classes[mono_color])
    if len(canon_q) >= max(len(mono_q), 2):
        return Canonical(canon_q, b.Y, canon_colors, side)
    return Monochromatic(mono_q, b.Y, mono_color, side)


def _is_rainbow(b: BipartiteColoring, A, B) -> bool:
    seen = set()
    for x in A:
        for y in B:
            c = b.colors[(x, y)]
            if c in seen:
                return False
            seen.add(c)
    return True


def find_rainbow_biclique(
    b: BipartiteColoring, c: int, budget: SearchBudget = UNBOUNDED
) -> RainbowBiclique | None:
    """A rainbow ``K_{c,c}`` by random sampling, then exhaustive search.

    Sampling draws ``c``-subsets of both sides uniformly; when every color
    class is a matching and the sides exceed ``c^4`` a single draw already
    fails with probability below one half. The exhaustive phase picks ``A``
    in lexicographic order and grows ``B`` vertex by vertex while colors stay
    distinct.
    """
    if c < 2:
        raise ValueError("c must be at least 2")
    if b.s < c or b.t < c:
        return None
    rng = np.random.Generator(np.random.Philox(budget.seed))
    X, Y = np.array(b.X), np.array(b.Y)
    for _ in range(SAMPLE_ATTEMPTS):
        A = tuple(sorted(int(v) for v in rng.choice(X, size=c, replace=False)))
        B = tuple(sorted(int(v) for v in rng.choice(Y, size=c, replace=False)))
        if _is_rainbow(b, A, B):
            return RainbowBiclique(A, B)

    counter = _Counter(budget.node_limit)
    for A in combinations(b.X, c):
        counter.tick()
        found = _grow_rainbow_side(b, A, c, counter)
        if found is not None:
            return RainbowBiclique(A, found)
    return None


def _grow_rainbow_side(b: BipartiteColoring, A, c: int, counter: _Counter):
    # Columns that are rainbow on A on their own; then pick c with disjoint color sets.
    cols = []
    for y in b.Y:
        colors = [b.colors[(x, y)] for x in A]
        if len(set(colors)) == len(colors):
            cols.append((y, frozenset(colors)))
    chosen: list[int] = []

    def dfs(start: int, used: frozenset) -> bool:
        counter.tick()
        if len(chosen) == c:
            return True
        for i in range(start, len(cols) - (c - len(chosen)) + 1):
            y, colors = cols[i]
            if used.isdisjoint(colors):
                chosen.append(y)
                if dfs(i + 1, used | colors):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if dfs(0, frozenset()) else None


# ---------------------------------------------------------------------------
# asymmetric canonical Ramsey pipeline
# ---------------------------------------------------------------------------


def _target_q(s: int, l: int) -> int:
    return max(1, math.ceil(s ** (1.0 / (18 * l)) - 1e-12))


def _meets(cert, q: int) -> bool:
    if isinstance(cert, Canonical):
        return len(cert.Q) >= max(q, 2)
    return len(cert.Q) >= q


def _weakly_from_rows(b: BipartiteColoring, rows, R, side: str, q: int):
    """Extract from the weakly canonical block ``rows x R`` of ``b`` if big enough."""
    if len(rows) < q:
        return None
    cert = extract_canonical_or_mono(b.restrict(rows, R), side)
    return cert if _meets(cert, q) else None


def _mono_rows(b: BipartiteColoring, rows, R) -> list[int]:
    return [x for x in rows if len({b.colors[(x, y)] for y in R}) == 1]


def _pipeline(b: BipartiteColoring, l: int, q: int, flipped: bool):
    X, Y = b.X, b.Y
    s, t = len(X), len(Y)
    two_l = 2 * l
    side_x, side_y = ("Y", "X") if flipped else ("X", "Y")
    y_prime = Y[: min(t, max(math.ceil(t ** (1.0 / (4 * l))), two_l))]
    if len(y_prime) < two_l:
        return None

    def repeated(colors) -> bool:
        return any(v >= two_l for v in Counter(colors).values())

    W = [x for x in X if repeated(b.colors[(x, y)] for y in y_prime)]
    if len(W) > s / two_l:
        best = max(combinations(y_prime, two_l), key=lambda R: len(_mono_rows(b, W, R)))
        return _weakly_from_rows(b, _mono_rows(b, W, best), best, side_x, q)

    rest = [x for x in X if x not in set(W)]
    per_row = math.ceil(len(y_prime) / two_l)
    g1: dict[tuple[int, int], int] = {}
    for x in rest:
        taken: set[int] = set()
        for y in y_prime:
            c = b.colors[(x, y)]
            if c not in taken and len(taken) < per_row:
                taken.add(c)
                g1[(x, y)] = c
    x_prime = rest[: max(math.ceil(s ** (1.0 / (16 * l * l))), two_l)]
    if len(x_prime) < two_l:
        return None

    def column(y) -> list[int]:
        return [g1[(x, y)] for x in x_prime if (x, y) in g1]

    Z = [y for y in y_prime if repeated(column(y))]
    if len(Z) > len(y_prime) / (20 * l):
        bt = b.transpose()

        def mono_cols(Xpp) -> list[int]:
            return [y for y in Z if all((x, y) in g1 for x in Xpp) and len({g1[(x, y)] for x in Xpp}) == 1]

        best = max(combinations(x_prime, two_l), key=lambda Xpp: len(mono_cols(Xpp)))
        return _weakly_from_rows(bt, mono_cols(best), best, side_y, q)

    # Dense part: one edge per color in every remaining column, so inside any
    # complete bipartite piece every color class is a matching.
    g2 = []
    for y in (y for y in y_prime if y not in set(Z)):
        taken = set()
        for x in x_prime:
            c = g1.get((x, y))
            if c is not None and c not in taken:
                taken.add(c)
                g2.append((x, y))
    if not g2:
        return None
    n = max(max(b.X), max(b.Y))
    block = find_max_balanced_partite(Hypergraph.from_edges(2, n, g2), min(len(x_prime), len(y_prime)))
    if block is None or block.s < 4 * l:
        return None
    xs = set(X)
    A = next(p for p in block.parts if p[0] in xs)
    B = next(p for p in block.parts if p[0] not in xs)
    found = find_rainbow_biclique(b.restrict(A, B), 4 * l)
    if found is None:
        return None
    return RainbowBiclique(*((found.B, found.A) if flipped else (found.A, found.B)))


def _exhaustive(b: BipartiteColoring, l: int, q: int, budget: SearchBudget):
    counter = _Counter(budget.node_limit)
    for flipped, bb in ((False, b), (True, b.transpose())):
        side = "Y" if flipped else "X"
        for R in combinations(bb.Y, 2 * l):
            counter.tick()
            cert = _weakly_from_rows(bb, _mono_rows(bb, bb.X, R), R, side, q)
            if cert is not None:
                return cert
    found = find_rainbow_biclique(b, 4 * l, budget)
    return found


def canonical_search(
    b: BipartiteColoring, l: int, budget: SearchBudget = UNBOUNDED
) -> RainbowBiclique | Canonical | Monochromatic | None:
    """Find a rainbow ``K_{4l,4l}``, a canonical ``K_{q,2l}`` or a monochromatic ``K_{q,2l}``.

    ``q = ceil(s^(1/18l))`` for the larger side ``s`` (at least 2 for the
    canonical outcome). The staged construction (rows repeating a color on a
    small column set, then columns repeating a color on a small row set,
    then a rainbow biclique among rows with distinct colors) is tried first;
    its thresholds only bite for very large sides, so a budgeted exhaustive
    search over all ``2l``-sets backs it up.
    """
    if l < 2:
        raise ValueError("l must be at least 2")
    flipped = b.t > b.s
    oriented = b.transpose() if flipped else b
    q = _target_q(oriented.s, l)
    cert = _pipeline(oriented, l, q, flipped)
    if cert is None:
        cert = _exhaustive(b, l, q, budget)
    if cert is not None:
        verdict = validate_certificate(b, cert)
        assert verdict, verdict.reason
    return cert


# ---------------------------------------------------------------------------
# number of colors without a strongly rainbow even cycle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ColorBoundReport:
    holds: bool
    colors: int
    bound: int
    witness: RainbowCycle | None = None

    @property
    def status(self) -> str:
        return "bound_holds" if self.holds else "rainbow_cycle"


def color_count_bound_check(b: BipartiteColoring, l: int) -> ColorBoundReport:
    """Compare the number of colors with ``2l(s + t)``; above it, produce the witness cycle."""
    if l < 2:
        raise ValueError("l must be at least 2")
    colors = len(b.palette())
    bound = 2 * l * (b.s + b.t)
    if colors < bound:
        return ColorBoundReport(True, colors, bound)
    g = b.to_colored_graph()
    witness = find_strongly_rainbow_even_cycle(g, l)
    if witness is None or not validate_certificate(b, witness):
        raise InternalContradiction(
            f"{colors} >= {bound} colors but no strongly rainbow C_{2 * l} was found"
        )
    return ColorBoundReport(False, colors, bound, witness)
