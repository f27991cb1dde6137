"""Command-line entry point.

Exit codes: 0 success, 1 parse or validation error, 2 infeasible instance.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__
from .bench import BenchConfig, parse_grid_range, run_benchmark, write_csv, write_plot_data
from .diversity import SolutionSet, diversity_pairwise
from .errors import InfeasibleError
from .graph import (
    generate_grid,
    graph_from_json,
    parse_dimacs_gr,
    parse_snap_edgelist,
    parse_undirected_edgelist,
)
from .matching import diverse_bipartite_matchings, parse_bipartite
from .matroid import graphic_matroid, weighted_diverse_bases
from .paths import diverse_shortest_paths

EXIT_OK, EXIT_ERROR, EXIT_INFEASIBLE = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _report(problem: str, k: int, sol: SolutionSet, **extra) -> dict:
    doc = {
        "problem": problem,
        "k": k,
        "diversity": sol.diversity,
        "packing_weight": sol.packing_weight,
        "solutions": [list(s) for s in sol.sets],
        "multiplicity": {str(e): m for e, m in sol.multiplicity.items()},
    }
    doc.update(extra)
    return doc


def _emit(doc: dict, args, weights) -> int:
    if args.verify:
        again = diversity_pairwise(doc["solutions"], weights)
        if again != doc["diversity"] or doc["packing_weight"] != again:
            print(f"verify failed: recomputed diversity {again}, reported {doc['diversity']}",
                  file=sys.stderr)
            return EXIT_ERROR
    if args.text:
        print(f"problem: {doc['problem']}")
        print(f"k: {doc['k']}")
        print(f"diversity: {doc['diversity']}")
        for i, s in enumerate(doc["solutions"], 1):
            print(f"solution {i}: {' '.join(map(str, s))}")
        if "paths" in doc:
            for i, p in enumerate(doc["paths"], 1):
                print(f"path {i}: {' '.join(map(str, p))}")
    else:
        print(json.dumps(doc, indent=2))
    return EXIT_OK


def cmd_paths(args) -> int:
    if args.grid is not None:
        g, s, t = generate_grid(args.grid)
        s = s if args.s is None else args.s
        t = t if args.t is None else args.t
    else:
        if args.input is None:
            raise ValueError("either --input or --grid is required")
        text = _read(args.input)
        if args.format == "dimacs":
            g = parse_dimacs_gr(text, round100=args.round100, weight=args.weight)
        elif args.format == "snap":
            g = parse_snap_edgelist(text)
        elif args.format == "json":
            g = graph_from_json(text)
        else:
            raise ValueError(f"--format {args.format} needs --grid")
        if args.s is None or args.t is None:
            raise ValueError("--s and --t are required with --input")
        s, t = args.s, args.t
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise ValueError(f"--s/--t must be in [0, {g.n})")
    res = diverse_shortest_paths(g, s, t, args.k, backend=args.backend)
    doc = _report(
        "paths", args.k, res.solutions,
        length=res.length,
        paths=[list(p) for p in res.paths],
        timings_ms={k: round(v * 1e3, 3) for k, v in res.timings.items()},
    )
    return _emit(doc, args, g.weights.tolist())


def cmd_matchings(args) -> int:
    g = parse_bipartite(_read(args.input))
    sol = diverse_bipartite_matchings(g, args.k, args.p, backend=args.backend)
    return _emit(_report("matchings", args.k, sol, p=args.p), args, g.weights)


def cmd_trees(args) -> int:
    text = _read(args.input)
    if args.format == "json":
        g = graph_from_json(text)
        if not hasattr(g, "us"):
            raise ValueError("trees needs an undirected graph ('edges' key)")
    else:
        g = parse_undirected_edgelist(text)
    oracle = graphic_matroid(g)
    w = g.weights.tolist()
    sol = weighted_diverse_bases(oracle, w, args.k)
    return _emit(_report("trees", args.k, sol, oracle_queries=oracle.queries), args, w)


def _file_format(path: str, fmt: str | None) -> str:
    if fmt:
        return fmt
    return "dimacs" if path.endswith(".gr") else "snap"


def cmd_bench(args) -> int:
    k_list = [int(x) for x in args.k_list.split(",") if x.strip()]
    config = BenchConfig(
        k_list=k_list,
        grid_range=parse_grid_range(args.grid_range) if args.grid_range else None,
        files=[(f, _file_format(f, args.file_format)) for f in args.files],
        n_pairs=args.n,
        seed=args.seed,
        round100=args.round100,
        workers=args.workers,
        timing=not args.no_timing,
        backend=args.backend,
    )
    rows = run_benchmark(config)
    if args.out in (None, "-"):
        write_csv(rows, sys.stdout, config.timing)
    else:
        with open(args.out, "w") as fh:
            write_csv(rows, fh, config.timing)
    if args.plot_dir:
        write_plot_data(rows, args.plot_dir)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diverse-opt", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    parser.add_argument("--backend", choices=["compiled", "python"], default=None,
                        help="kernel implementation (default: compiled when built)")
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flags(p):
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", help="JSON report (default)")
        fmt.add_argument("--text", action="store_true", help="plain-text report")
        p.add_argument("--verify", action="store_true",
                       help="recompute diversity from the listed solutions")
        p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("paths", help="diverse shortest s-t paths")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", help="graph file, '-' for stdin")
    src.add_argument("--grid", type=int, metavar="P", help="unit P x P grid, corner to corner")
    p.add_argument("--format", choices=["dimacs", "snap", "json", "grid"], default="dimacs")
    p.add_argument("--s", type=int, help="0-based source id")
    p.add_argument("--t", type=int, help="0-based sink id")
    p.add_argument("--round100", action="store_true", help="round DIMACS lengths to 100s")
    p.add_argument("--weight", choices=["length", "unit"], default="length",
                   help="DIMACS arc weight: the length itself or 1")
    output_flags(p)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("matchings", help="diverse bipartite matchings of size p")
    p.add_argument("--input", required=True)
    p.add_argument("--p", type=int, required=True)
    output_flags(p)
    p.set_defaults(func=cmd_matchings)

    p = sub.add_parser("trees", help="diverse spanning trees (graphic matroid bases)")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=["edgelist", "json"], default="edgelist")
    output_flags(p)
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("bench", help="grid / file benchmark against the Yen baseline")
    p.add_argument("--grid-range", help="a:b[:step], inclusive")
    p.add_argument("--k-list", default="10,50,100")
    p.add_argument("--files", nargs="*", default=[])
    p.add_argument("--file-format", choices=["dimacs", "snap"])
    p.add_argument("--n", type=int, default=400, help="s-t pairs per file")
    p.add_argument("--seed", type=int, default=2021)
    p.add_argument("--round100", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-timing", action="store_true", help="write 0 for time_ms")
    p.add_argument("--out", help="CSV path (default stdout)")
    p.add_argument("--plot-dir", help="directory for two-column plot data files")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
