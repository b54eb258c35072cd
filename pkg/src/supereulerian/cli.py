"""Command-line front end.

Graph arguments are graph6 strings; commands that take a graph read
graph6 lines from standard input (or ``--input``) when none is given.
Exit status: 0 success/PASS, 1 counterexample or negative answer under
``verify``, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Iterator

from .collapse import is_collapsible, reduce
from .enumeration import enumerate_connected
from .families import recognize
from .graph_core import Graph, Graph6Error, GraphError, graph6_decode, graph6_encode, is_connected, xi
from .linegraph import is_hamiltonian, k_hamiltonian_check, line_graph
from .trails import (
    has_dominating_closed_trail,
    has_spanning_closed_trail,
    has_spanning_trail,
    trail_through_X,
)
from .verify import THEOREMS, check_theorem, emit_report

EXIT_OK, EXIT_FOUND, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _graphs(args) -> Iterator[Graph]:
    if getattr(args, "graph", None):
        yield graph6_decode(args.graph)
        return
    stream = open(args.input) if getattr(args, "input", None) else sys.stdin
    try:
        for line in stream:
            line = line.strip()
            if line and not line.startswith("#"):
                yield graph6_decode(line)
    finally:
        if stream is not sys.stdin:
            stream.close()


def _connected(g: Graph) -> Graph:
    if not is_connected(g):
        raise UsageError(f"graph {graph6_encode(g)} is not connected")
    return g


def _cert(c):
    return None if c is None else c.to_record()


def _emit(rows: Iterable[dict]) -> None:
    for row in rows:
        print(json.dumps(row, sort_keys=True))


def _parse_edges(text: str) -> list[tuple[int, int]]:
    out = []
    for item in filter(None, text.split(",")):
        try:
            a, b = item.split("-")
            out.append((int(a), int(b)))
        except ValueError:
            raise UsageError(f"bad edge {item!r}; expected u-v") from None
    return out


def dossier(g: Graph) -> dict:
    g = _connected(g)
    red = reduce(g)
    tag = recognize(g) if g.n >= 2 else None
    return {
        "graph6": graph6_encode(g),
        "n": g.n,
        "m": g.m,
        "xi": xi(g) if g.m else None,
        "collapsible": red.reduced.n == 1,
        "reduction": red.to_record(),
        "supereulerian": _cert(has_spanning_closed_trail(g)),
        "dominating_closed_trail": _cert(has_dominating_closed_trail(g)),
        "family": None if tag is None else str(tag),
    }


def cmd_analyze(args) -> int:
    _emit(dossier(g) for g in _graphs(args))
    return EXIT_OK


def cmd_reduce(args) -> int:
    _emit({"graph6": graph6_encode(g), **reduce(_connected(g)).to_record()} for g in _graphs(args))
    return EXIT_OK


def cmd_collapsible(args) -> int:
    _emit({"graph6": graph6_encode(g), "collapsible": is_collapsible(_connected(g))} for g in _graphs(args))
    return EXIT_OK


def cmd_supereulerian(args) -> int:
    rows = []
    for g in _graphs(args):
        cert = has_spanning_closed_trail(_connected(g))
        rows.append({"graph6": graph6_encode(g), "supereulerian": cert is not None, "trail": _cert(cert)})
    _emit(rows)
    return EXIT_OK


def cmd_trail(args) -> int:
    if args.through is None and (args.source is None or args.target is None):
        raise UsageError("trail needs --from and --to, or --through")
    if args.through is not None and (args.source is not None or args.target is not None):
        raise UsageError("--through cannot be combined with --from/--to")
    rows = []
    for g in _graphs(args):
        g = _connected(g)
        if args.through is not None:
            xs = _parse_edges(args.through)
            cert = trail_through_X(g, xs)
            rows.append({"graph6": graph6_encode(g), "through": [f"{u}-{v}" for u, v in xs], "trail": _cert(cert)})
        else:
            for v in (args.source, args.target):
                if not 0 <= v < g.n:
                    raise UsageError(f"vertex {v} out of range for n={g.n}")
            cert = has_spanning_trail(g, args.source, args.target)
            rows.append({"graph6": graph6_encode(g), "from": args.source, "to": args.target, "trail": _cert(cert)})
    _emit(rows)
    return EXIT_OK


def cmd_linegraph(args) -> int:
    rows = []
    for g in _graphs(args):
        lmap = line_graph(g)
        row = {"graph6": graph6_encode(g), "line_graph": graph6_encode(lmap.lg)}
        if args.check_ham:
            if args.k is None:
                cycle = is_hamiltonian(lmap.lg)
                row["hamiltonian"] = cycle is not None
                row["cycle"] = None if cycle is None else list(cycle)
            else:
                res = k_hamiltonian_check(_connected(g), args.k)
                row.update(k=args.k, k_hamiltonian=res.ok, deletions=res.checked,
                           failing=None if res.failing is None else [f"{u}-{v}" for u, v in res.failing],
                           route_disagreements=len(res.disagreements))
        rows.append(row)
    _emit(rows)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    for g in enumerate_connected(args.n, args.min_xi):
        print(graph6_encode(g))
    return EXIT_OK


def cmd_verify(args) -> int:
    source = None
    if args.input:
        with open(args.input) as fh:
            source = fh.read().splitlines()
    report = check_theorem(args.theorem, args.n_min, args.n_max, k=args.k, source=source,
                           workers=args.workers)
    data = emit_report(report, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return EXIT_OK if report.status == "PASS" else EXIT_FOUND


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="supereulerian", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph", nargs="?", help="graph6 string (default: read lines from stdin)")
        p.add_argument("--input", help="file of graph6 lines")
        p.set_defaults(func=func)
        return p

    graph_cmd("analyze", cmd_analyze, "xi, reduction, trails and family tag")
    graph_cmd("reduce", cmd_reduce, "contract maximal collapsible subgraphs")
    graph_cmd("collapsible", cmd_collapsible, "decide collapsibility")
    graph_cmd("supereulerian", cmd_supereulerian, "find a spanning closed trail")
    p = graph_cmd("trail", cmd_trail, "spanning (u,v)-trail or closed trail through given edges")
    p.add_argument("--from", dest="source", type=int)
    p.add_argument("--to", dest="target", type=int)
    p.add_argument("--through", help="comma-separated edges, e.g. 0-1,2-3")
    p = graph_cmd("linegraph", cmd_linegraph, "line graph, optionally with a Hamilton check")
    p.add_argument("--check-ham", action="store_true")
    p.add_argument("--k", type=int, help="check k-hamiltonicity instead")

    p = sub.add_parser("enumerate", help="connected graphs up to isomorphism, as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-xi", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="exhaustive theorem check")
    p.add_argument("--theorem", required=True, type=str.upper, choices=THEOREMS)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--input", help="graph6 file to check instead of the built-in enumeration")
    p.add_argument("--out")
    p.add_argument("--format", choices=("records", "summary"), default="records")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, Graph6Error, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
