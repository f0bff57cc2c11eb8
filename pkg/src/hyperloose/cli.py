"""Command-line entry point.

Exit codes: 0 found / success, 1 none or a negative answer, 2 usage or input
error, 3 budget exhausted. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .certificates import validate_certificate
from .codec import decode, encode
from .core import BipartiteColoring, EdgeColoredGraph
from .counting import count_colored_bicliques, count_forb, format_table, growth_table
from .decompose import compute_c1, compute_c2prime, decompose_greedy, verify_decomposition
from .detect import SearchBudget, find_cycle_2_mod_h, find_loose_cycle_exact
from .errors import BudgetExhausted, HyperlooseError, OutOfBudget, PreconditionViolated
from .formats import (
    FormatError,
    dump_certificate,
    dump_decomposition,
    dump_encoding,
    dump_hypergraph,
    load_certificate,
    load_colored,
    load_encoding,
    load_hypergraph,
)
from .ramsey import canonical_search, color_count_bound_check

EXIT_FOUND, EXIT_NONE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Usage(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from exc


def _budget(args) -> SearchBudget:
    return SearchBudget(node_limit=args.node_limit, seed=args.seed)


def _bipartite(path: str) -> BipartiteColoring:
    g = load_colored(_read(path))
    if not isinstance(g, EdgeColoredGraph):
        raise _Usage("expected a singly colored graph")
    try:
        return BipartiteColoring.from_colored_graph(g)
    except ValueError as exc:
        raise _Usage(str(exc)) from exc


def _load_host(text: str):
    # A CHG body has ':' on its edge lines; a UHG body never does.
    body = "".join(line.split("#", 1)[0] for line in text.splitlines())
    return load_colored(text) if ":" in body else load_hypergraph(text)


def cmd_detect(args, out) -> int:
    h = load_hypergraph(_read(args.host))
    cert = find_loose_cycle_exact(h, args.k, _budget(args))
    if cert is None:
        out.write("NONE\n")
        return EXIT_NONE
    out.write(dump_certificate(cert))
    return EXIT_FOUND


def cmd_cycle2mod(args, out) -> int:
    g = load_hypergraph(_read(args.host))
    cert = find_cycle_2_mod_h(g, args.h)
    if cert is None:
        out.write("NONE\n")
        return EXIT_NONE
    out.write(dump_certificate(cert))
    return EXIT_FOUND


def cmd_decompose(args, out) -> int:
    h = load_hypergraph(_read(args.host))
    d = decompose_greedy(h)
    verdict = verify_decomposition(h, d)
    out.write(dump_decomposition(d))
    if not verdict:
        print(f"decomposition check failed: {verdict.reason}", file=sys.stderr)
        return EXIT_NONE
    return EXIT_FOUND


def cmd_encode(args, out) -> int:
    h = load_hypergraph(_read(args.host))
    result = encode(h, args.k)
    out.write(dump_certificate(result) if hasattr(result, "connectors") else dump_encoding(result))
    return EXIT_FOUND


def cmd_decode(args, out) -> int:
    out.write(dump_hypergraph(decode(load_encoding(_read(args.encoding)))))
    return EXIT_FOUND


def cmd_verify(args, out) -> int:
    host = _load_host(_read(args.host))
    cert = load_certificate(_read(args.cert))
    verdict = validate_certificate(host, cert)
    if verdict:
        out.write("VALID\n")
        return EXIT_FOUND
    out.write(f"INVALID {verdict.reason}\n")
    return EXIT_NONE


def cmd_ramsey(args, out) -> int:
    cert = canonical_search(_bipartite(args.host), args.l, _budget(args))
    if cert is None:
        out.write("NONE\n")
        return EXIT_NONE
    out.write(dump_certificate(cert))
    return EXIT_FOUND


def cmd_colorbound(args, out) -> int:
    report = color_count_bound_check(_bipartite(args.host), args.l)
    out.write(f"status={report.status} colors={report.colors} bound={report.bound}\n")
    if report.witness is None:
        return EXIT_NONE
    out.write(dump_certificate(report.witness))
    return EXIT_FOUND


def _emit(rows, fmt: str, out) -> None:
    if fmt == "records":
        out.writelines(row.record() + "\n" for row in rows)
    else:
        out.write(format_table(rows))


def cmd_count_forb(args, out) -> int:
    rep = count_forb(args.r, args.n, args.k, workers=args.workers, node_limit=args.node_limit)
    if args.format == "table" and args.table:
        out.write(format_table([rep]))
    else:
        out.write(f"count={rep.count} log2={float(rep.log2):.6f}\n")
    return EXIT_FOUND


def cmd_count_colored(args, out) -> int:
    rep = count_colored_bicliques(args.n, 2 * args.l, args.s, args.t, node_limit=args.node_limit)
    out.write(f"count={rep.count} log2={float(rep.log2):.6f}\n")
    return EXIT_FOUND


def cmd_growth(args, out) -> int:
    if args.n_to < args.n_from:
        raise _Usage("--n-to must not be below --n-from")
    rows = growth_table(args.r, args.k, range(args.n_from, args.n_to + 1), workers=args.workers)
    _emit(rows, args.format, out)
    return EXIT_FOUND if all(row.extra["holds"] for row in rows) else EXIT_NONE


def cmd_constants(args, out) -> int:
    enc = compute_c1(args.r)
    out.write(f"c1_lo={float(enc.lo):.12f} c1_hi={float(enc.hi):.12f}\n")
    if args.k is not None:
        c2 = compute_c2prime(args.r, args.k)
        out.write(f"c2prime={c2} ({float(c2):.6f})\n")
    return EXIT_FOUND


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text} is not a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--node-limit", type=_positive, default=None)
    common.add_argument("--workers", type=_positive, default=1)
    common.add_argument("--format", choices=("table", "records"), default="table")

    parser = argparse.ArgumentParser(prog="hyperloose", description="Loose cycle tools for uniform hypergraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, **params):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for flag, kw in params.items():
            p.add_argument(flag, **kw)
        p.set_defaults(func=func)
        return p

    host = {"help": "input file, '-' for stdin"}
    add("detect", cmd_detect, "find a loose k-cycle", host=host, **{"--k": dict(type=int, required=True)})
    add("cycle2mod", cmd_cycle2mod, "find a graph cycle of length 2 mod h", host=host,
        **{"--h": dict(type=int, required=True)})
    add("decompose", cmd_decompose, "greedy balanced partite decomposition", host=host)
    add("encode", cmd_encode, "peeling encoder", host=host, **{"--k": dict(type=int, required=True)})
    add("decode", cmd_decode, "decode an ENC container", encoding=host)
    add("verify", cmd_verify, "check a certificate against its host", host=host,
        cert={"help": "certificate file"})
    add("ramsey", cmd_ramsey, "canonical Ramsey search on a bipartite coloring", host=host,
        **{"--l": dict(type=int, required=True)})
    add("colorbound", cmd_colorbound, "color count versus strongly rainbow cycles", host=host,
        **{"--l": dict(type=int, required=True)})
    p = add("count-forb", cmd_count_forb, "count loose-cycle-free r-graphs",
            **{f"--{x}": dict(type=int, required=True) for x in "rnk"})
    p.add_argument("--table", action="store_true", help="print a table row instead of the summary line")
    add("count-colored", cmd_count_colored, "count colored bicliques with cycle-free extension",
        **{f"--{x}": dict(type=int, required=True) for x in "nlst"})
    add("growth", cmd_growth, "growth table against the lower bound",
        **{"--r": dict(type=int, required=True), "--k": dict(type=int, required=True),
           "--n-from": dict(type=int, required=True), "--n-to": dict(type=int, required=True)})
    add("constants", cmd_constants, "print the decomposition constants",
        **{"--r": dict(type=int, required=True), "--k": dict(type=int, default=None)})
    return parser


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_FOUND if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except (BudgetExhausted, OutOfBudget) as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except PreconditionViolated as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (_Usage, FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HyperlooseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
