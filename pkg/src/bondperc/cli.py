"""Command-line interface.

Subcommands: ``gen`` (graph generators), ``sim`` (run one cascade),
``construct`` (the explicit percolating sets), ``dim`` (exact dimension
lower bound), ``brute`` (exhaustive minimum), ``table`` (consistency
report).  Every command is deterministic given its flags, emits exact
integers or rational strings only (never floats), exits 0 on success and
nonzero with a one-line diagnostic on any error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import constructions, formulas, hyperperc, oracle, percolation, witness
from .graphs import (
    dump_graph,
    graph_from_json_dict,
    graph_to_json_dict,
    load_graph,
    make_grid,
    make_hypercube,
    make_path,
    make_cycle,
    make_random_graph,
    make_torus,
)

__all__ = ["main"]


def _parse_dims(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x != ""]
    except ValueError as exc:
        raise ValueError(f"bad dimension list {text!r}") from exc


def _emit(data: dict, out: str | None) -> None:
    text = json.dumps(data, indent=2)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# ======================================================================
# gen
# ======================================================================


def _cmd_gen(args) -> int:
    kind = args.kind
    if kind in ("path", "cycle"):
        if args.dims is None:
            raise ValueError(f"--kind {kind} needs --dims K")
        dims = _parse_dims(args.dims)
        if len(dims) != 1:
            raise ValueError(f"--kind {kind} takes a single dimension")
        graph = make_path(dims[0]) if kind == "path" else make_cycle(dims[0])
    elif kind in ("grid", "torus"):
        if args.dims is None:
            raise ValueError(f"--kind {kind} needs --dims a1,a2,...")
        dims = _parse_dims(args.dims)
        graph = make_grid(dims) if kind == "grid" else make_torus(dims)
    elif kind == "hypercube":
        if args.d is None:
            raise ValueError("--kind hypercube needs --d")
        graph = make_hypercube(args.d)
    elif kind == "random":
        if args.n is None or args.p is None or args.seed is None:
            raise ValueError("--kind random needs --n, --p and --seed")
        graph = make_random_graph(args.n, Fraction(args.p), args.seed)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown kind {kind}")
    if args.out:
        dump_graph(graph, args.out)
    else:
        print(json.dumps(graph_to_json_dict(graph)))
    return 0


# ======================================================================
# sim
# ======================================================================


def _load_seed_set(spec: str) -> list:
    text = spec.strip()
    if not text.startswith("["):
        with open(text, "r", encoding="utf-8") as fh:
            return json.load(fh)
    return json.loads(text)


def _as_edge_indices(graph, raw) -> set[int]:
    out: set[int] = set()
    for item in raw:
        if isinstance(item, int):
            out.add(item)
        else:
            out.update(constructions.edge_set_from_pairs(graph, [item]))
    return out


def _cmd_sim(args) -> int:
    raw = _load_seed_set(args.seed_set)
    with open(args.graph, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if args.process == "hyper":
        hg = hyperperc.hypergraph_from_json_dict(data)
        state = hyperperc.hyper_closure(hg, set(raw), args.r)
        percolated = len(state.infected) == hg.n
    elif args.process == "vertex":
        graph = graph_from_json_dict(data)
        state = percolation.neighbour_closure(graph, set(raw), args.r)
        percolated = len(state.infected) == graph.n
    else:
        graph = graph_from_json_dict(data)
        seeds = _as_edge_indices(graph, raw)
        state = percolation.bond_closure(graph, seeds, args.r)
        percolated = len(state.infected) == graph.num_edges
    _emit(percolation.state_to_json_dict(state, percolated), args.out)
    return 0


# ======================================================================
# construct
# ======================================================================


def _cmd_construct(args) -> int:
    if args.kind == "hypercube":
        if args.d is None:
            raise ValueError("--kind hypercube needs --d")
        graph = make_hypercube(args.d)
        edge_set = constructions.build_hypercube_set(args.d, args.r)
        instance = f"hypercube[{args.d}]"
    else:
        if args.dims is None:
            raise ValueError(f"--kind {args.kind} needs --dims")
        dims = _parse_dims(args.dims)
        if args.kind == "torus":
            graph = make_torus(dims)
            edge_set = constructions.build_torus_set(dims, args.r)
        else:
            graph = make_grid(dims)
            edge_set = constructions.build_grid_set(dims, args.r)
        instance = f"{args.kind}[{args.dims}]"
    _emit(
        {
            "instance": instance,
            "r": args.r,
            "size": len(edge_set),
            "edges": constructions.edge_set_to_pairs(graph, edge_set),
        },
        args.out,
    )
    return 0


# ======================================================================
# dim
# ======================================================================


def _cmd_dim(args) -> int:
    if args.colouring == "product":
        if args.kind is None:
            raise ValueError(
                "--colouring product needs --kind (and --dims/--d): a bare "
                "graph file does not carry its product structure"
            )
        if args.kind == "hypercube":
            if args.d is None:
                raise ValueError("--kind hypercube needs --d")
            dims, kind = [2] * args.d, "path"
        else:
            if args.dims is None:
                raise ValueError(f"--kind {args.kind} needs --dims")
            dims = _parse_dims(args.dims)
            kind = "cycle" if args.kind == "torus" else "path"
        graph, colouring = witness.recursive_product_colouring(dims, kind)
        if args.graph:
            if load_graph(args.graph) != graph:
                raise ValueError("--graph file does not match --kind/--dims")
        source = "product"
    else:
        if args.graph is None:
            raise ValueError("--graph is required unless --colouring product")
        graph = load_graph(args.graph)
        if args.colouring == "greedy":
            colouring = witness.greedy_colouring(graph)
            source = "greedy"
        else:
            with open(args.colouring, "r", encoding="utf-8") as fh:
                colouring = tuple(json.load(fh))
            source = args.colouring
    value = witness.witness_dimension(graph, colouring, args.r)
    _emit(
        {
            "dim": value,
            "r": args.r,
            "colouring_source": source,
            "colouring": list(colouring),
        },
        args.out,
    )
    return 0


# ======================================================================
# brute
# ======================================================================


def _cmd_brute(args) -> int:
    with open(args.graph, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if args.process == "hyper":
        hg = hyperperc.hypergraph_from_json_dict(data)
        result = hyperperc.min_percolating_hyper(hg, args.r, budget=args.budget)
    else:
        graph = graph_from_json_dict(data)
        if args.process == "vertex":
            result = oracle.min_percolating_vertex(graph, args.r, budget=args.budget)
        else:
            result = oracle.min_percolating_bond(graph, args.r, budget=args.budget)
    _emit(result.to_json_dict(), args.out)
    return 0


# ======================================================================
# table
# ======================================================================


def _parse_range(text: str) -> list[int]:
    if ":" in text:
        lo, hi = text.split(":")
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _table_instances(args) -> list:
    if args.family == "hypercube":
        return _parse_range(args.dims_range)
    return [_parse_dims(part) for part in args.dims_range.split(";") if part]


def _cmd_table(args) -> int:
    rows = [
        formulas.consistency_report(inst, r, args.family,
                                    oracle_budget=args.oracle_budget)
        for inst in _table_instances(args)
        for r in _parse_range(args.r_range)
    ]
    if args.format == "json":
        _emit({"rows": [row.to_json_dict() for row in rows]}, args.out)
    else:
        lines = [",".join(formulas.REPORT_COLUMNS)]
        lines += [",".join(row.to_csv_row()) for row in rows]
        text = "\n".join(lines)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        else:
            print(text)
    return 0


# ======================================================================
# parser
# ======================================================================


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bondperc",
        description="bootstrap percolation: cascades, constructions, exact bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph as JSON")
    p.add_argument("--kind", required=True,
                   choices=["path", "cycle", "grid", "torus", "hypercube", "random"])
    p.add_argument("--dims", help="comma-separated sizes (path/cycle take one)")
    p.add_argument("--d", type=int, help="hypercube dimension")
    p.add_argument("--n", type=int, help="random graph vertex count")
    p.add_argument("--p", help="random graph edge probability (e.g. 1/2)")
    p.add_argument("--seed", type=int, help="random graph seed")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("sim", help="run one cascade to its closure")
    p.add_argument("--graph", required=True, help="graph or hypergraph JSON file")
    p.add_argument("--seed-set", required=True,
                   help="JSON file or inline JSON list of seed indices "
                        "(bond also accepts [u,v] pairs)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--process", default="bond", choices=["bond", "vertex", "hyper"])
    p.add_argument("--out")
    p.set_defaults(func=_cmd_sim)

    p = sub.add_parser("construct", help="build the explicit percolating set")
    p.add_argument("--kind", required=True, choices=["grid", "torus", "hypercube"])
    p.add_argument("--dims")
    p.add_argument("--d", type=int)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("dim", help="exact dimension lower bound")
    p.add_argument("--graph", help="graph JSON file")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--colouring", default="greedy",
                   help="'greedy', 'product', or a JSON file with one colour per edge")
    p.add_argument("--kind", choices=["grid", "torus", "hypercube"],
                   help="instance family (required for --colouring product)")
    p.add_argument("--dims")
    p.add_argument("--d", type=int)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("brute", help="exhaustive minimum percolating set")
    p.add_argument("--graph", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--process", default="bond", choices=["bond", "vertex", "hyper"])
    p.add_argument("--budget", type=int, help="max closure evaluations")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_brute)

    p = sub.add_parser("table", help="formula consistency table")
    p.add_argument("--family", required=True, choices=["grid", "torus", "hypercube"])
    p.add_argument("--dims-range", required=True,
                   help="grid/torus: ';'-separated dims lists (e.g. '3,3;3,4'); "
                        "hypercube: d or lo:hi")
    p.add_argument("--r-range", required=True, help="r or lo:hi")
    p.add_argument("--format", default="csv", choices=["csv", "json"])
    p.add_argument("--oracle-budget", type=int, default=2_000_000)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"bondperc: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
