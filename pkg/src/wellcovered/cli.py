"""Command line interface.

Exit codes: 0 for a positive answer (or successful output), 1 for a
negative answer, 2 for any error (bad input, missing file, budget
exhausted, bad usage).
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from .cnf import parse_dimacs, serialize_dimacs, solve
from .graphs import Graph, contains_cycle_k, is_bipartite, is_k1t_free, parse_graph, serialize_graph
from .independent_sets import (
    Budget,
    is_w_well_covered,
    is_well_covered,
    parse_weight_function,
    set_weight,
)
from .reductions import dsat_to_gs, sat_to_usat, serialize_sidecar, threesat_to_dsat, usat_to_re
from .wcw import serialize_weight_space, wcw_basis_definitional, wcw_basis_generating, wcw_basis_local
from .witness import Bipartition, is_generating, is_relating


def _fmt_set(vertices) -> str:
    return "{" + ",".join(str(v) for v in sorted(vertices)) + "}"


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _parse_vertex_list(text: str) -> frozenset[int]:
    try:
        return frozenset(int(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise ValueError(f"bad vertex list {text!r}") from exc


def _cmd_check(args: argparse.Namespace, budget: Budget) -> int:
    g = _load_graph(args.graph)
    if args.weights is None:
        pair = is_well_covered(g, budget)
        if pair is None:
            print("well-covered: yes")
            return 0
        print("well-covered: no")
        print(f"counterexample: {_fmt_set(pair[0])} vs {_fmt_set(pair[1])}")
        return 1
    w = parse_weight_function(_read(args.weights), g.n)
    pair = is_w_well_covered(g, w, budget)
    if pair is None:
        print("w-well-covered: yes")
        return 0
    print("w-well-covered: no")
    print(
        f"counterexample: {_fmt_set(pair[0])} ({set_weight(w, pair[0])})"
        f" vs {_fmt_set(pair[1])} ({set_weight(w, pair[1])})"
    )
    return 1


_WCW_METHODS = {
    "definitional": wcw_basis_definitional,
    "generating": wcw_basis_generating,
    "local": wcw_basis_local,
}


def _cmd_wcw(args: argparse.Namespace, budget: Budget) -> int:
    g = _load_graph(args.graph)
    space = _WCW_METHODS[args.method](g, budget)
    sys.stdout.write(serialize_weight_space(space))
    return 0


def _cmd_relating(args: argparse.Namespace, budget: Budget) -> int:
    g = _load_graph(args.graph)
    witness = is_relating(g, args.u, args.v, budget)
    if witness is None:
        print("relating: no")
        return 1
    print("relating: yes")
    print(f"witness: {_fmt_set(witness)}")
    return 0


def _cmd_generating(args: argparse.Namespace, budget: Budget) -> int:
    g = _load_graph(args.graph)
    b = Bipartition(_parse_vertex_list(args.bx), _parse_vertex_list(args.by))
    witness = is_generating(g, b, budget)
    if witness is None:
        print("generating: no")
        return 1
    print("generating: yes")
    print(f"witness: {_fmt_set(witness)}")
    return 0


def _cmd_reduce(args: argparse.Namespace, budget: Budget) -> int:
    del budget  # rewrites are polynomial, no budget involved
    instance = parse_dimacs(_read(args.input))
    prefix = args.out_prefix
    if args.kind in ("sat2usat", "3sat2dsat"):
        out = sat_to_usat(instance) if args.kind == "sat2usat" else threesat_to_dsat(instance)
        path = Path(f"{prefix}.cnf")
        path.write_text(serialize_dimacs(out), encoding="utf-8")
        print(f"wrote {path}")
        return 0
    built = usat_to_re(instance) if args.kind == "usat2re" else dsat_to_gs(instance)
    graph_path = Path(f"{prefix}.graph")
    side_path = Path(f"{prefix}.instance")
    graph_path.write_text(serialize_graph(built.graph), encoding="utf-8")
    side_path.write_text(serialize_sidecar(built), encoding="utf-8")
    print(f"wrote {graph_path}")
    print(f"wrote {side_path}")
    return 0


def _cmd_solve(args: argparse.Namespace, budget: Budget) -> int:
    del budget
    instance = parse_dimacs(_read(args.input))
    phi = solve(instance)
    if phi is None:
        print("sat: no")
        return 1
    print("sat: yes")
    parts = [str(v if phi[v] else -v) for v in range(1, instance.n_vars + 1)] + ["0"]
    print("assignment: " + " ".join(parts))
    return 0


def _cmd_props(args: argparse.Namespace, budget: Budget) -> int:
    del budget
    g = _load_graph(args.graph)
    for k in range(3, 8):
        print(f"C{k}: {'yes' if contains_cycle_k(g, k) else 'no'}")
    print(f"bipartite: {'yes' if is_bipartite(g) is not None else 'no'}")
    print(f"maxdeg: {g.max_degree}")
    for t in (3, 4):
        print(f"K1,{t}-free: {'yes' if is_k1t_free(g, t) else 'no'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wellcovered",
        description="Exact tools for well-covered graphs.",
    )
    parser.add_argument(
        "--max-sets",
        type=int,
        default=Budget().max_sets,
        help="abort after enumerating this many maximal independent sets",
    )
    parser.add_argument(
        "--max-subsets",
        type=int,
        default=Budget().max_subsets,
        help="abort after examining this many candidate subsets",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="seed the RNG (reserved for sampling subcommands; all current commands are deterministic)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="is the graph (w-)well-covered")
    p.add_argument("graph", help="graph file")
    p.add_argument("--weights", help="weight file 'v value' per line; checks w-well-coveredness")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("wcw", help="basis of the space of equalizing weight functions")
    p.add_argument("graph", help="graph file")
    p.add_argument(
        "--method",
        choices=sorted(_WCW_METHODS),
        default="local",
        help="how to assemble the constraint system (default: local)",
    )
    p.set_defaults(func=_cmd_wcw)

    p = sub.add_parser("relating", help="does an edge have an equalizing witness")
    p.add_argument("graph", help="graph file")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.set_defaults(func=_cmd_relating)

    p = sub.add_parser("generating", help="is an induced complete bipartite subgraph generating")
    p.add_argument("graph", help="graph file")
    p.add_argument("--bx", required=True, help="comma separated vertices of one side")
    p.add_argument("--by", required=True, help="comma separated vertices of the other side")
    p.set_defaults(func=_cmd_generating)

    p = sub.add_parser("reduce", help="rewrite a CNF instance into a harder-shaped one or a graph")
    p.add_argument("kind", choices=["sat2usat", "usat2re", "3sat2dsat", "dsat2gs"])
    p.add_argument("input", help="DIMACS CNF file")
    p.add_argument("out_prefix", help="output path prefix")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("solve", help="satisfiability by exhaustive search (small instances)")
    p.add_argument("input", help="DIMACS CNF file")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("props", help="structural facts: short cycles, bipartiteness, degrees")
    p.add_argument("graph", help="graph file")
    p.set_defaults(func=_cmd_props)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
    try:
        budget = Budget(max_sets=args.max_sets, max_subsets=args.max_subsets)
        return args.func(args, budget)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
