"""Plain-text formats.

UHG   hypergraph: ``r n`` then one ascending edge per line.
CHG   colored graph: ``r n`` then ``v1 .. vr : c`` per edge; a multi-colored
      graph lists several colors after the colon and adds its capacity to the
      header (``r n capacity``).
ENC   encoding: ``ENC r k n`` then, for each layer, ``LAYER i m`` and a CHG section.
DEC   decomposition: ``DEC r n blocks budget_num/budget_den`` then ``s | part | part ..``.
CERT  certificates: ``CERT <TAG> ...`` header, body lines, ``END``.

``#`` starts a comment. Every writer emits sorted, newline-terminated text,
so equal objects serialize to equal bytes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .certificates import (
    Canonical,
    Certificate,
    GraphCycle,
    LooseCycle,
    Monochromatic,
    RainbowBiclique,
    RainbowCycle,
)
from .codec import Encoding
from .core import EdgeColoredGraph, Hypergraph, MultiColoredGraph
from .decompose import Decomposition, PartiteBlock


class FormatError(ValueError):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise FormatError(f"expected integers in {text!r}") from exc


def _lines(text: str) -> Iterator[str]:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def _join(vs) -> str:
    return " ".join(map(str, vs))


# -- hypergraphs -------------------------------------------------------------


def dump_hypergraph(h: Hypergraph) -> str:
    return "".join([f"{h.r} {h.n}\n", *(f"{_join(e)}\n" for e in h.edges)])


def _parse_hypergraph_lines(lines: list[str]) -> Hypergraph:
    if not lines:
        raise FormatError("missing header")
    head = _ints(lines[0])
    if len(head) != 2:
        raise FormatError("UHG header must be 'r n'")
    r, n = head
    try:
        return Hypergraph(r, n, tuple(tuple(_ints(line)) for line in lines[1:]))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def load_hypergraph(text: str) -> Hypergraph:
    return _parse_hypergraph_lines(list(_lines(text)))


# -- colored graphs ----------------------------------------------------------


def dump_colored(g: EdgeColoredGraph | MultiColoredGraph) -> str:
    if isinstance(g, MultiColoredGraph):
        head = f"{g.base.r} {g.base.n} {g.capacity}\n"
        body = (f"{_join(e)} : {_join(sorted(g.palette[e]))}\n" for e in g.base.edges)
    else:
        head = f"{g.base.r} {g.base.n}\n"
        body = (f"{_join(e)} : {g.coloring[e]}\n" for e in g.base.edges)
    return "".join([head, *body])


def _parse_colored_lines(lines: list[str]) -> EdgeColoredGraph | MultiColoredGraph:
    if not lines:
        raise FormatError("missing header")
    head = _ints(lines[0])
    if len(head) not in (2, 3):
        raise FormatError("CHG header must be 'r n' or 'r n capacity'")
    r, n = head[:2]
    entries = []
    for line in lines[1:]:
        if ":" not in line:
            raise FormatError(f"missing ':' in {line!r}")
        left, right = line.split(":", 1)
        entries.append((tuple(_ints(left)), _ints(right)))
    try:
        base = Hypergraph(r, n, tuple(e for e, _ in entries))
        if len(head) == 3:
            return MultiColoredGraph(base, {e: frozenset(cs) for e, cs in entries}, head[2])
        coloring = {}
        for e, cs in entries:
            if len(cs) != 1:
                raise FormatError(f"edge {e} needs exactly one color")
            coloring[e] = cs[0]
        return EdgeColoredGraph(base, coloring)
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def load_colored(text: str) -> EdgeColoredGraph | MultiColoredGraph:
    return _parse_colored_lines(list(_lines(text)))


# -- encodings ---------------------------------------------------------------


def dump_encoding(enc: Encoding) -> str:
    out = [f"ENC {enc.r} {enc.k} {enc.n}\n"]
    for i, layer in enumerate(enc.layers, 1):
        out.append(f"LAYER {i} {len(layer.base.edges)}\n")
        out.append(dump_colored(layer))
    return "".join(out)


def load_encoding(text: str) -> Encoding:
    lines = list(_lines(text))
    if not lines or not lines[0].startswith("ENC "):
        raise FormatError("missing ENC header")
    head = _ints(lines[0][4:])
    if len(head) != 3:
        raise FormatError("ENC header must be 'ENC r k n'")
    r, k, n = head
    layers = []
    pos = 1
    for i in range(1, r * k + 1):
        if pos >= len(lines) or not lines[pos].startswith("LAYER "):
            raise FormatError(f"missing LAYER {i}")
        idx, m = _ints(lines[pos][6:])
        if idx != i:
            raise FormatError(f"expected LAYER {i}, got {idx}")
        section = lines[pos + 1 : pos + 2 + m]
        layer = _parse_colored_lines(section)
        if not isinstance(layer, EdgeColoredGraph) or layer.base.r != r - 1 or layer.base.n != n:
            raise FormatError(f"layer {i} has the wrong shape")
        layers.append(layer)
        pos += 2 + m
    if pos != len(lines):
        raise FormatError("trailing content after the last layer")
    try:
        return Encoding(r, k, n, tuple(layers))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


# -- decompositions ----------------------------------------------------------


def dump_decomposition(d: Decomposition) -> str:
    b = d.budget
    out = [f"DEC {d.r} {d.source_n} {len(d.blocks)} {b.numerator}/{b.denominator}\n"]
    for block in d.blocks:
        parts = " | ".join(_join(p) for p in block.parts)
        out.append(f"{block.s} | {parts}\n")
    return "".join(out)


def load_decomposition(text: str) -> Decomposition:
    lines = list(_lines(text))
    if not lines or not lines[0].startswith("DEC "):
        raise FormatError("missing DEC header")
    fields = lines[0].split()
    if len(fields) != 5:
        raise FormatError("DEC header must be 'DEC r n m budget'")
    r, n, m = map(int, fields[1:4])
    budget = Fraction(fields[4])
    blocks = []
    for line in lines[1:]:
        cells = [c.strip() for c in line.split("|")]
        s = int(cells[0])
        parts = tuple(tuple(_ints(c)) for c in cells[1:])
        block = PartiteBlock(parts)
        if block.s != s:
            raise FormatError(f"block {line!r} declares s={s}")
        blocks.append(block)
    if len(blocks) != m:
        raise FormatError(f"header declares {m} blocks, found {len(blocks)}")
    d = Decomposition(r, n, tuple(blocks))
    if d.budget != budget:
        raise FormatError(f"header budget {budget} does not match blocks ({d.budget})")
    return d


# -- certificates ------------------------------------------------------------


def dump_certificate(cert: Certificate) -> str:
    if isinstance(cert, LooseCycle):
        body = [f"CERT LOOSE {cert.k}", *(_join(e) for e in cert.edges), f"CONNECTORS {_join(cert.connectors)}"]
    elif isinstance(cert, GraphCycle):
        body = [f"CERT GRAPHCYCLE {cert.length}", _join(cert.vertices)]
    elif isinstance(cert, RainbowCycle):
        body = [f"CERT SRCYCLE {cert.length}", f"VERTICES {_join(cert.vertices)}", f"COLORS {_join(cert.colors)}"]
    elif isinstance(cert, RainbowBiclique):
        body = [f"CERT RAINBOW {len(cert.A)} {len(cert.B)}", f"A {_join(cert.A)}", f"B {_join(cert.B)}"]
    elif isinstance(cert, Canonical):
        body = [
            f"CERT CANON {len(cert.Q)} {len(cert.R)} {cert.side}",
            f"Q {_join(cert.Q)}",
            f"R {_join(cert.R)}",
            f"COLORS {_join(cert.colors)}",
        ]
    elif isinstance(cert, Monochromatic):
        body = [
            f"CERT MONO {len(cert.Q)} {len(cert.R)} {cert.side}",
            f"Q {_join(cert.Q)}",
            f"R {_join(cert.R)}",
            f"COLOR {cert.color}",
        ]
    else:
        raise TypeError(f"cannot serialize {type(cert).__name__}")
    return "".join(line + "\n" for line in [*body, "END"])


def _tagged(lines: list[str], tag: str) -> list[int]:
    for line in lines:
        if line.split()[0] == tag:
            return _ints(line[len(tag) :])
    raise FormatError(f"missing {tag} line")


def load_certificate(text: str) -> Certificate:
    lines = list(_lines(text))
    if not lines or not lines[0].startswith("CERT "):
        raise FormatError("missing CERT header")
    if lines[-1] != "END":
        raise FormatError("missing END")
    head = lines[0].split()
    tag = head[1]
    body = lines[1:-1]
    if tag == "LOOSE":
        k = int(head[2])
        edges = tuple(tuple(_ints(line)) for line in body[:k])
        return LooseCycle(edges, tuple(_tagged(body[k:], "CONNECTORS")))
    if tag == "GRAPHCYCLE":
        return GraphCycle(tuple(_ints(body[0])))
    if tag == "SRCYCLE":
        return RainbowCycle(tuple(_tagged(body, "VERTICES")), tuple(_tagged(body, "COLORS")))
    if tag == "RAINBOW":
        return RainbowBiclique(tuple(_tagged(body, "A")), tuple(_tagged(body, "B")))
    if tag == "CANON":
        return Canonical(
            tuple(_tagged(body, "Q")), tuple(_tagged(body, "R")), tuple(_tagged(body, "COLORS")), head[4]
        )
    if tag == "MONO":
        return Monochromatic(tuple(_tagged(body, "Q")), tuple(_tagged(body, "R")), _tagged(body, "COLOR")[0], head[4])
    raise FormatError(f"unknown certificate tag {tag!r}")
