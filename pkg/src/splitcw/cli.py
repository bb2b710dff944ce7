"""Command-line interface.

Subcommands mirror the library: classify, classify-labelled, cw, recognize,
enumerate, verify, reduce-thm7.  Graph arguments accept graph6 strings, or
``@name`` resolved through the catalog where stated.  All output is
deterministic; nothing reads the environment.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import graph6
from .catalog import catalog
from .classify import (
    classify_bipartite,
    classify_chordal,
    classify_split,
    classify_weakly_bip,
    classify_weakly_chordal,
)
from .claims import UnknownClaimError, verify_claim
from .cliquewidth import clique_width, cw_at_most, serialize_expression
from .graphs import Graph
from .harness import enumerate_graphs, thm7_reduce
from .modular import is_prime
from .split import SplitPartition, is_split, split_partitions
from .subgraph import LabelledBipartiteGraph, is_free


def _graph_arg(text: str) -> Graph:
    if text.startswith("@"):
        return catalog(text[1:])
    return graph6.decode(text)


def _emit(data: dict) -> None:
    print(json.dumps(data, sort_keys=True))


_FAMILIES = {
    "split": classify_split,
    "chordal": classify_chordal,
    "bipartite": classify_bipartite,
    "weakly-chordal": classify_weakly_chordal,
}


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="splitcw")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="boundedness verdict for a forbidden graph")
    p.add_argument("--family", required=True, choices=sorted(_FAMILIES))
    p.add_argument("--h", required=True, metavar="GRAPH6|@NAME")

    p = sub.add_parser("classify-labelled", help="verdict for a labelled bipartite forbidden graph")
    p.add_argument("--h", required=True, metavar="JSON")

    p = sub.add_parser("cw", help="exact clique-width")
    p.add_argument("--graph", required=True, metavar="GRAPH6")
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--emit-expr", action="store_true")

    p = sub.add_parser("recognize", help="split recognition and partitions")
    p.add_argument("--graph", required=True, metavar="GRAPH6")

    p = sub.add_parser("enumerate", help="graphs up to isomorphism as TSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--split", action="store_true")
    p.add_argument("--free", default=None, metavar="@NAME,...")
    p.add_argument("--prime", action="store_true")
    p.add_argument("--report", choices=["cw"], default=None)

    p = sub.add_parser("verify", help="run a registered claim verifier")
    p.add_argument("--claim", required=True)
    p.add_argument("--max-n", type=int, required=True)

    p = sub.add_parser("reduce-thm7", help="run the star-forest reduction pipeline")
    p.add_argument("--graph", required=True, metavar="GRAPH6")
    p.add_argument("--partition", required=True, metavar="JSON")

    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "classify":
        h = _graph_arg(args.h)
        verdict = _FAMILIES[args.family](h)
        _emit(verdict.to_json_dict())
        return 0

    if args.command == "classify-labelled":
        data = json.loads(args.h)
        h = LabelledBipartiteGraph.from_json_dict(data)
        _emit(classify_weakly_bip(h).to_json_dict())
        return 0

    if args.command == "cw":
        g = _graph_arg(args.graph)
        if args.max_k is not None:
            expr = cw_at_most(g, args.max_k) if g.n else None
            if g.n == 0:
                print(0)
                return 0
            if expr is None:
                print(-1)
                return 1
            value = clique_width(g)
            print(value)
            if args.emit_expr:
                best = cw_at_most(g, value)
                print(serialize_expression(best))
            return 0
        value = clique_width(g)
        print(value)
        if args.emit_expr and g.n:
            print(serialize_expression(cw_at_most(g, value)))
        return 0

    if args.command == "recognize":
        g = _graph_arg(args.graph)
        parts = split_partitions(g)
        _emit(
            {
                "split": bool(parts),
                "partitions": [p.to_json_dict() for p in parts],
            }
        )
        return 0

    if args.command == "enumerate":
        patterns = []
        if args.free:
            for name in args.free.split(","):
                name = name.strip()
                patterns.append(catalog(name[1:] if name.startswith("@") else name))
        header = ["graph6", "n", "m"]
        if args.report == "cw":
            header.append("cw")
        print("\t".join(header))
        for g in enumerate_graphs(args.n):
            if args.split and not is_split(g):
                continue
            if patterns and not is_free(g, patterns):
                continue
            if args.prime and not is_prime(g):
                continue
            row = [graph6.encode(g), str(g.n), str(g.m)]
            if args.report == "cw":
                row.append(str(clique_width(g)))
            print("\t".join(row))
        return 0

    if args.command == "verify":
        try:
            report = verify_claim(args.claim, args.max_n)
        except UnknownClaimError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        _emit(report.to_json_dict())
        return 0 if report.holds else 1

    if args.command == "reduce-thm7":
        g = _graph_arg(args.graph)
        p = SplitPartition.from_json_dict(json.loads(args.partition))
        print(graph6.encode(thm7_reduce(g, p)))
        return 0

    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    raise SystemExit(main())
