"""Command line front end.

Subcommands: info, export, analyze, certify, route.  All output is
deterministic; two runs with the same flags produce identical bytes.
Exit codes: 0 success, 1 a check failed, 2 usage error, 3 size guard hit.
Set CYCLEPREFIX_WORKERS to cap parallel workers for all-pairs sweeps.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analytics, automorphism
from .core import (
    Params,
    ResourceLimitError,
    check_vertex,
    format_vertex,
    out_neighbors,
    parse_vertex,
    validate_params,
    vertices,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

CERTIFY_GUARD = automorphism.BRUTE_FORCE_GUARD
ANALYZE_GUARD = analytics.ALL_PAIRS_GUARD


def _add_params(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--delta", type=int, required=True, help="degree parameter")
    parser.add_argument("--d", type=int, required=True, help="vertex word length")
    parser.add_argument("--r", type=int, default=0, help="rotation restriction (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycleprefix",
        description="Construct and analyze cycle prefix digraphs.",
        epilog="CYCLEPREFIX_WORKERS caps the processes used for all-pairs "
        "sweeps; output does not depend on it.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="order, degree, and claimed diameter")
    _add_params(p)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("export", help="write the digraph as edgelist, dot, or json")
    _add_params(p)
    p.add_argument(
        "--format", choices=("edgelist", "dot", "json"), default="edgelist"
    )
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--force", action="store_true", help="ignore the size guard")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("analyze", help="diameter, connectivity, degree regularity")
    _add_params(p)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--force", action="store_true", help="ignore the size guard")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("certify", help="certify the automorphism group by search")
    _add_params(p)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--force", action="store_true", help="ignore the size guard")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("route", help="shortest path between two vertices")
    _add_params(p)
    p.add_argument("source", help="vertex as dot-separated symbols, e.g. 1.2.3")
    p.add_argument("target", help="vertex as dot-separated symbols")
    p.add_argument(
        "--greedy",
        action="store_true",
        help="also print the prefix-building route (r = 0 only)",
    )
    p.set_defaults(func=cmd_route)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        params = validate_params(args.delta, args.d, args.r)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(params, args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_info(params: Params, args) -> int:
    if args.json:
        payload = {
            "delta": params.delta,
            "d": params.d,
            "r": params.r,
            "alphabet_size": params.n,
            "vertices": params.count,
            "degree": params.degree,
            "claimed_diameter": params.claimed_diameter,
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"cycle prefix digraph (delta={params.delta}, d={params.d}, r={params.r})")
        print(f"alphabet size:    {params.n}")
        print(f"vertices:         {params.count}")
        print(f"degree (in=out):  {params.degree}")
        print(f"claimed diameter: {params.claimed_diameter}")
    return EXIT_OK


def _iter_arcs(params: Params):
    for v in vertices(params):
        for label, nb in out_neighbors(params, v):
            yield v, label, nb


def _render_edgelist(params: Params) -> str:
    lines = [
        f"{format_vertex(u)} -> {format_vertex(v)}  [{label}]"
        for u, label, v in _iter_arcs(params)
    ]
    return "\n".join(lines) + "\n"


def _render_dot(params: Params) -> str:
    name = f"gamma_{params.delta}_{params.d}_r{params.r}"
    lines = [f'digraph "{name}" {{']
    for u, label, v in _iter_arcs(params):
        lines.append(
            f'  "{format_vertex(u)}" -> "{format_vertex(v)}" [label="{label}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _render_json(params: Params) -> str:
    payload = {
        "params": {"delta": params.delta, "d": params.d, "r": params.r},
        "alphabet_size": params.n,
        "degree": params.degree,
        "vertices": [format_vertex(v) for v in vertices(params)],
        "arcs": [
            {
                "source": format_vertex(u),
                "target": format_vertex(v),
                "label": str(label),
            }
            for u, label, v in _iter_arcs(params)
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def cmd_export(params: Params, args) -> int:
    if params.count > ANALYZE_GUARD and not args.force:
        raise ResourceLimitError(
            f"{params.count} vertices exceeds the export guard {ANALYZE_GUARD}; "
            f"use --force to run anyway"
        )
    renderers = {
        "edgelist": _render_edgelist,
        "dot": _render_dot,
        "json": _render_json,
    }
    _emit(renderers[args.format](params), args.out)
    return EXIT_OK


def cmd_analyze(params: Params, args) -> int:
    diam = analytics.diameter(params, max_vertices=ANALYZE_GUARD, force=args.force)
    connected = analytics.is_strongly_connected(params)
    regular = all(
        len(out_neighbors(params, v)) == params.degree for v in vertices(params)
    )
    diameter_ok = diam == params.claimed_diameter
    ok = diameter_ok and connected and regular
    if args.json:
        payload = {
            "delta": params.delta,
            "d": params.d,
            "r": params.r,
            "vertices": params.count,
            "diameter": diam,
            "claimed_diameter": params.claimed_diameter,
            "diameter_matches": diameter_ok,
            "strongly_connected": connected,
            "degree_regular": regular,
            "ok": ok,
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"cycle prefix digraph (delta={params.delta}, d={params.d}, r={params.r})")
        print(f"vertices:            {params.count}")
        print(
            f"diameter:            {diam} "
            f"({'matches' if diameter_ok else 'MISMATCHES'} claimed {params.claimed_diameter})"
        )
        print(f"strongly connected:  {connected}")
        print(f"degree regular:      {regular} (degree {params.degree})")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_certify(params: Params, args) -> int:
    report = automorphism.certify_theorem(
        params, max_vertices=CERTIFY_GUARD, force=args.force
    )
    if args.json:
        payload = {
            "delta": params.delta,
            "d": params.d,
            "r": params.r,
            "automorphisms_found": report.automorphism_count,
            "expected_order": report.expected_order,
            "induced_injective": report.induced_injective,
            "sets_equal": report.sets_equal,
            "propagation_ok": report.propagation_ok,
            "ok": report.ok,
            "failures": report.failures,
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"cycle prefix digraph (delta={params.delta}, d={params.d}, r={params.r})")
        for line in report.summary_lines():
            print(line)
        print("certification:", "PASS" if report.ok else "FAIL")
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _render_path(path: analytics.Path) -> str:
    if path.length == 0:
        return format_vertex(path.start)
    parts = [format_vertex(path.start)]
    for label, v in zip(path.labels, path.vertices[1:]):
        parts.append(f"-[{label}]-> {format_vertex(v)}")
    return " ".join(parts)


def cmd_route(params: Params, args) -> int:
    source = check_vertex(params, parse_vertex(args.source))
    target = check_vertex(params, parse_vertex(args.target))
    bfs_path = analytics.shortest_path(params, source, target)
    print(f"bfs length {bfs_path.length}: {_render_path(bfs_path)}")
    if args.greedy:
        greedy_path = analytics.greedy_route(params, source, target)
        print(f"greedy length {greedy_path.length}: {_render_path(greedy_path)}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
