"""Command-line interface.

Exit status is 0 on success, 1 on domain errors (bad matrix, budget
exceeded, ...) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from .errors import GeomGridError
from .experiments import cycle_table, negate_cell_sweep, run_subdivision
from .graph import load_edge_list, parity_report, render_edge_list, row_column_graph
from .growth import compare_classes, geom_growth_rate
from .matching import fully_expand, matching_root, spectral_radius
from .matrix import double_refinement, load_matrix
from .oracle import enumerate_counts
from .polynomial import DEFAULT_TOLERANCE


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _num(x: float) -> float:
    return float(_fmt(x))


def _emit(payload) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _cmd_gr(args) -> None:
    res = geom_growth_rate(load_matrix(args.matrix), args.tolerance)
    if args.json:
        _emit(res.to_json())
        return
    print(f"geom growth rate:     {_fmt(res.growth_rate)}")
    print(f"monotone growth rate: {_fmt(res.monotone_growth_rate)}")
    print(f"graph used:           {res.used_graph}")
    print(f"negative cycle:       {'yes' if res.negative_cycle_present else 'no'}")
    print(f"matching polynomial:  {res.matching_poly}")


def _cmd_compare(args) -> None:
    _emit(compare_classes(load_matrix(args.matrix), args.tolerance).to_json())


def _cmd_parity(args) -> None:
    _emit(parity_report(row_column_graph(load_matrix(args.matrix))).to_json())


def _cmd_enumerate(args) -> None:
    counts = enumerate_counts(load_matrix(args.matrix), args.max_n, budget=args.budget)
    if args.csv:
        counts.write_csv(args.csv)
        return
    writer = csv.DictWriter(sys.stdout, fieldnames=list(counts.rows()[0]))
    writer.writeheader()
    writer.writerows(counts.rows())


def _cmd_expand(args) -> None:
    if args.graph:
        g = load_edge_list(args.graph)
        source = "graph"
    else:
        m = load_matrix(args.matrix)
        if parity_report(row_column_graph(m)).has_negative_cycle:
            g, source = row_column_graph(double_refinement(m)), "G(M^x2)"
        else:
            g, source = row_column_graph(m), "G(M)"
    forest = fully_expand(g, args.max_vertices)
    lam = matching_root(g, args.tolerance)
    rho = spectral_radius(forest, args.tolerance, max_vertices=args.max_vertices)
    _emit(
        {
            "source": source,
            "vertices": g.n,
            "forest_vertices": forest.n,
            "lambda": _num(lam.value),
            "forest_spectral_radius": _num(rho.value),
            "forest_edges": render_edge_list(forest).splitlines(),
        }
    )


def _parse_edge(text: str) -> tuple[str, str]:
    parts = text.split(",")
    if len(parts) != 2 or not all(parts):
        raise argparse.ArgumentTypeError(f"expected 'u,v', got {text!r}")
    return parts[0], parts[1]


def _cmd_subdivide(args) -> None:
    g = load_edge_list(args.graph)
    exp = run_subdivision(g, args.edge, args.times, bipartite=not args.raw, u=args.separator, tolerance=args.tolerance)
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["step", "vertices", "lambda_squared"])
            for step, (h, x) in enumerate(zip(exp.graphs, exp.series)):
                writer.writerow([step, h.n, _fmt(x)])
    payload = exp.to_json()
    if not exp.row_column:
        payload["note"] = "not a row-column graph"
    _emit(payload)


def _cmd_cycle_table(args) -> None:
    _emit([{k: (_num(v) if isinstance(v, float) else v) for k, v in row.items()} for row in cycle_table(args.max_n)])


def _cmd_negate(args) -> None:
    rows = negate_cell_sweep(load_matrix(args.matrix), args.tolerance)
    for row in rows:
        row["base_growth_rate"] = _num(row["base_growth_rate"])
        row["new_growth_rate"] = _num(row["new_growth_rate"])
    _emit(rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="geomgrid", description="Growth rates of geometric grid classes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_tolerance(p):
        p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE, help="root bracket width")
        return p

    p = with_tolerance(sub.add_parser("gr", help="growth rate of Geom(M)"))
    p.add_argument("matrix")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_gr)

    p = with_tolerance(sub.add_parser("compare", help="geometric vs monotone growth rate"))
    p.add_argument("matrix")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("parity", help="cycle parity report of G(M)")
    p.add_argument("matrix")
    p.set_defaults(func=_cmd_parity)

    p = sub.add_parser("enumerate", help="brute-force counts")
    p.add_argument("matrix")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--csv")
    p.add_argument("--budget", type=int, default=10**8)
    p.set_defaults(func=_cmd_enumerate)

    p = with_tolerance(sub.add_parser("expand", help="fully expand a graph to a tree"))
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("matrix", nargs="?")
    src.add_argument("--graph")
    p.add_argument("--max-vertices", type=int, default=10_000)
    p.set_defaults(func=_cmd_expand)

    p = with_tolerance(sub.add_parser("subdivide", help="edge subdivision series"))
    p.add_argument("--graph", required=True)
    p.add_argument("--edge", type=_parse_edge, required=True)
    p.add_argument("--times", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--bipartite", action="store_true", help="two new vertices per step (default)")
    mode.add_argument("--raw", action="store_true", help="one new vertex per step")
    p.add_argument("--separator", help="vertex u for the cycle-edge case analysis")
    p.add_argument("--csv")
    p.set_defaults(func=_cmd_subdivide)

    p = sub.add_parser("cycle-table", help="cycle-class growth rates")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=_cmd_cycle_table)

    p = with_tolerance(sub.add_parser("negate-cell-sweep", help="effect of negating each cell"))
    p.add_argument("matrix")
    p.set_defaults(func=_cmd_negate)
    return parser


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "times", 1) < 1:
        parser.error("argument --times: must be at least 1")
    if getattr(args, "max_n", 1) is not None and getattr(args, "max_n", 1) < 1:
        parser.error("argument --max-n: must be at least 1")
    try:
        args.func(args)
    except (GeomGridError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
