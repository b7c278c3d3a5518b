"""Command-line entry point."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .canon import cdc_certificate, verify_tf
from .census import run_census, verify_hierarchy
from .cover import cdc
from .errors import DimensionError, MalformedGraph6, UnsupportedSize
from .graph import Graph, add_isolated, components, parse_graph6, read_graph6_file, write_graph6
from .hierarchy import compare, implication_violations
from .spectral import main_decomposition, spectrum
from .walks import format_polynomial, walk_matrix

EXIT_OK, EXIT_VIOLATIONS, EXIT_INPUT = 0, 1, 2


def _load(arg: str) -> list[Graph]:
    """A graph6 literal, or a file of graph6 lines."""
    if os.path.exists(arg):
        return read_graph6_file(arg)
    return [parse_graph6(arg)]


def summarize(g: Graph) -> dict:
    dec = main_decomposition(g)
    cover = cdc(g).graph
    return {
        "graph6": write_graph6(g),
        "order": g.n,
        "edges": g.edge_count(),
        "degree_sequence": sorted(g.degrees(), reverse=True),
        "spectrum": [round(x, 9) for x in spectrum(g).eigenvalues()],
        "main_eigenvalues": [round(x, 9) for x in dec.values],
        "p": dec.p,
        "main_polynomial": list(dec.main_poly),
        "main_polynomial_text": format_polynomial(dec.main_poly),
        "walk_matrix": [list(r) for r in walk_matrix(g)],
        "cdc_order": cover.n,
        "cdc_components": len(components(cover)),
    }


def _text_summary(s: dict) -> str:
    rows = [
        ("graph6", s["graph6"]),
        ("order", s["order"]),
        ("edges", s["edges"]),
        ("degrees", " ".join(map(str, s["degree_sequence"]))),
        ("spectrum", " ".join(f"{x:.6f}" for x in s["spectrum"])),
        ("main eigenvalues", " ".join(f"{x:.6f}" for x in s["main_eigenvalues"])),
        ("p", s["p"]),
        ("main polynomial", s["main_polynomial_text"]),
        ("CDC order", s["cdc_order"]),
        ("CDC components", s["cdc_components"]),
    ]
    out = [f"{k:<18}{v}" for k, v in rows]
    out.append("walk matrix")
    width = max((len(str(x)) for r in s["walk_matrix"] for x in r), default=1)
    out.extend("  " + " ".join(f"{x:>{width}}" for x in r) for r in s["walk_matrix"])
    return "\n".join(out)


def cmd_analyze(args) -> int:
    summaries = [summarize(g) for g in _load(args.graph)]
    if args.json:
        print(json.dumps(summaries if len(summaries) > 1 else summaries[0], indent=2))
    else:
        print("\n\n".join(_text_summary(s) for s in summaries))
    return EXIT_OK


def pair_report(g: Graph, h: Graph) -> dict:
    cmp = compare(g, h)
    found = implication_violations(cmp.profile)
    out = {
        "graph6_g": write_graph6(g),
        "graph6_h": write_graph6(h),
        "profile": cmp.profile.as_dict(),
        "violations": found,
        "tf_witness": None,
        "related_q": None,
    }
    if cmp.witness is not None:
        out["tf_witness"] = {
            "q": [v + 1 for v in cmp.witness.q],
            "r": [v + 1 for v in cmp.witness.r],
            "verified": verify_tf(g, h, cmp.witness),
        }
        out["g_relabelled"] = write_graph6(cmp.compared_g)
    if cmp.q is not None:
        out["related_q"] = [[str(x) for x in row] for row in cmp.q]
    return out


def cmd_pair(args) -> int:
    g, h = parse_graph6(args.g6a), parse_graph6(args.g6b)
    if g.n != h.n:
        if not args.pad:
            raise DimensionError(f"orders differ ({g.n} vs {h.n}); use --pad")
        m = max(g.n, h.n)
        g, h = add_isolated(g, m - g.n), add_isolated(h, m - h.n)
    report = pair_report(g, h)
    print(json.dumps(report, indent=2))
    return EXIT_VIOLATIONS if report["violations"] else EXIT_OK


def cmd_cdc(args) -> int:
    g = parse_graph6(args.graph)
    cover = cdc(g).graph
    comps = components(cover)
    print(f"{'CDC graph6':<18}{write_graph6(cover)}")
    print(f"{'order':<18}{cover.n}")
    print(f"{'edges':<18}{cover.edge_count()}")
    print(f"{'components':<18}{len(comps)}")
    for verts, sub in comps:
        print(f"  {write_graph6(sub):<12}" + " ".join(f"{v % g.n + 1}{'ab'[v // g.n]}" for v in verts))
    print(f"{'certificate':<18}{cdc_certificate(g).hex()}")
    return EXIT_OK


def cmd_census(args) -> int:
    report = run_census(args.file, jobs=args.jobs)
    if args.out:
        Path(args.out).write_text(report.to_json())
    if args.csv:
        Path(args.csv).write_text(report.to_csv())
    sys.stdout.write(report.to_text())
    return EXIT_VIOLATIONS if report.violations else EXIT_OK


def cmd_verify(args) -> int:
    graphs = read_graph6_file(args.file)
    checked, bad = verify_hierarchy(graphs, args.max_order)
    for i, j, labels in bad:
        print(f"VIOLATION {i + 1} {j + 1}: {', '.join(labels)}")
    print(f"{checked} pairs checked, {len(bad)} with violations")
    return EXIT_VIOLATIONS if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cdcwalk", description="Walk matrices, main eigenvalues and double covers of small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="per-graph summary")
    p.add_argument("graph", help="graph6 string or file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("pair", help="relation profile of two graphs (JSON)")
    p.add_argument("g6a")
    p.add_argument("g6b")
    p.add_argument("--pad", action="store_true", help="pad the smaller graph with isolated vertices")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("cdc", help="show the canonical double cover")
    p.add_argument("graph")
    p.set_defaults(func=cmd_cdc)

    p = sub.add_parser("census", help="comain and same-CDC census of a graph6 file")
    p.add_argument("file")
    p.add_argument("--out", metavar="REPORT_JSON")
    p.add_argument("--csv", metavar="PAIRS_CSV")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: CPU count)")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify-hierarchy", help="check implications on all same-order pairs")
    p.add_argument("file")
    p.add_argument("--max-order", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MalformedGraph6, UnsupportedSize, DimensionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
