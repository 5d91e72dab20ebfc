"""Command-line front end: one subcommand per engine operation.

Exit codes: 0 success, 1 domain failure (bad diagram, failed check,
budget), 2 usage error.  `--format structured` prints JSON with sorted
keys; everything is deterministic for fixed inputs and seeds.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ._reports import diagram_report, invariants_report
from .activities import check_coloring, load_puzzle, make_puzzle, save_puzzle
from .catalog import catalog_get, catalog_names
from .diagram import Diagram, emit_pd, parse_pd, validate_text
from .equivalence import (
    DEFAULT_CROSSING_CAP,
    DEFAULT_MAX_EXTRA,
    DEFAULT_NODE_BUDGET,
    decide_equivalent,
    simplify,
)
from .errors import KnotlabError
from .invariants import DEFAULT_BRACKET_BUDGET
from .moves import DIRECTIONS, KINDS, apply_move, enumerate_sites
from .render import SvgOptions, layout_diagram, to_svg

# ── argument plumbing ────────────────────────────────────────────────


def _add_diagram_flags(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--pd", metavar="TEXT", help="diagram as PD text")
    group.add_argument(
        "--catalog",
        metavar="NAME",
        help="catalog entry: " + ", ".join(catalog_names()),
    )


def _add_format_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format",
        choices=("text", "structured"),
        default="text",
        help="text lines or JSON (default: text)",
    )


def _diagram_from(args) -> Diagram:
    if args.catalog is not None:
        return catalog_get(args.catalog).diagram
    return parse_pd(args.pd)


def _print_structured(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _parse_colors(parser, text: str) -> dict[int, int]:
    try:
        values = [int(v) for v in text.split(",")] if text else []
    except ValueError:
        parser.error("--colors takes comma-separated integers, e.g. 0,1,2")
    if any(v not in (0, 1, 2) for v in values):
        parser.error("colors are 0, 1, or 2")
    return dict(enumerate(values))


# ── subcommands ──────────────────────────────────────────────────────


def _cmd_parse(args, parser) -> int:
    report = diagram_report(_diagram_from(args))
    if args.format == "structured":
        _print_structured(report)
        return 0
    print(f"pd: {report['pd']}")
    print(f"crossings: {report['crossing_count']}")
    print(f"edges: {report['edge_count']}")
    print(f"free loops: {report['free_loops']}")
    print(f"components: {report['component_count']}")
    print(f"faces: {report['faces']}")
    print(f"arcs: {report['arc_count']}")
    print(f"gauss: {report['gauss_code']}")
    return 0


def _cmd_validate(args, parser) -> int:
    text = args.pd if args.pd is not None else catalog_get(args.catalog).pd
    report = validate_text(text)
    if args.format == "structured":
        _print_structured(
            {
                "valid": report.ok,
                "findings": [
                    {"code": f.code, "message": f.message, "labels": list(f.labels)}
                    for f in report.findings
                ],
            }
        )
    elif report.ok:
        print("valid")
    else:
        for f in report.findings:
            labels = ",".join(str(x) for x in f.labels)
            print(f"{f.code}: {f.message}" + (f" (labels {labels})" if labels else ""))
    return 0 if report.ok else 1


def _cmd_invariants(args, parser) -> int:
    d = _diagram_from(args)
    budget = args.budget if args.budget is not None else DEFAULT_BRACKET_BUDGET
    report = invariants_report(d, budget)
    if args.format == "structured":
        _print_structured(report)
        return 0
    print(f"crossings: {report['crossing_count']}")
    print(f"components: {report['component_count']}")
    print(f"writhe: {report['writhe']:+d}" if d.crossing_count else "writhe: 0")
    tri = report["tricolor"]
    suffix = "tricolorable" if tri["tricolorable"] else "not tricolorable"
    print(f"tricolor count: {tri['count']} ({suffix})")
    for a, b, lk in report["linking"]:
        print(f"lk({a},{b}): {lk:+d}")
    if report["budget_exceeded"]:
        print(f"bracket: (over the {budget}-crossing budget)")
        print(f"jones: (over the {budget}-crossing budget)")
    else:
        print(f"bracket: {report['bracket']['text']}")
        print(f"jones: {report['jones']['text']}")
    return 0


def _cmd_moves(args, parser) -> int:
    d = _diagram_from(args)
    kinds = None
    if args.kinds:
        kinds = tuple(k.strip() for k in args.kinds.split(","))
        unknown = [k for k in kinds if k not in KINDS]
        if unknown:
            parser.error(f"unknown kinds {unknown}; valid: {', '.join(KINDS)}")
    directions = None
    if args.directions:
        directions = tuple(x.strip() for x in args.directions.split(","))
        unknown = [x for x in directions if x not in DIRECTIONS]
        if unknown:
            parser.error(
                f"unknown directions {unknown}; valid: {', '.join(DIRECTIONS)}"
            )
    sites = enumerate_sites(d, kinds=kinds, directions=directions)
    if args.format == "structured":
        _print_structured({"count": len(sites), "sites": [s.to_wire() for s in sites]})
        return 0
    print(f"{len(sites)} site" + ("" if len(sites) == 1 else "s"))
    for s in sites:
        locus = ",".join(str(x) for x in s.locus)
        params = " ".join(f"{k}={v}" for k, v in sorted(s.params_dict.items()))
        print(f"  {s.kind}-{s.direction} locus={locus}" + (f" {params}" if params else ""))
    return 0


def _cmd_simplify(args, parser) -> int:
    d = _diagram_from(args)
    budget = args.budget if args.budget is not None else DEFAULT_NODE_BUDGET
    result, path = simplify(d, max_extra_crossings=args.max_extra, node_budget=budget)
    if args.format == "structured":
        _print_structured(
            {
                "pd": emit_pd(result),
                "start_crossing_count": d.crossing_count,
                "crossing_upper_bound": result.crossing_count,
                "moves": [s.to_wire() for s in path],
            }
        )
        return 0
    if not path:
        print(f"{result.crossing_count} crossings (no reduction found)")
    else:
        print(
            f"{d.crossing_count} -> {result.crossing_count} crossings"
            f" ({len(path)} moves)"
        )
        print(f"pd: {emit_pd(result)}")
    return 0


def _cmd_equiv(args, parser) -> int:
    diagrams = [parse_pd(t) for t in args.pd or []]
    diagrams += [catalog_get(n).diagram for n in args.catalog or []]
    if len(diagrams) != 2:
        parser.error("equiv needs exactly two diagrams (via --pd/--catalog)")
    a, b = diagrams
    verdict = decide_equivalent(
        a,
        b,
        crossing_cap=args.crossing_cap,
        node_budget=args.budget if args.budget is not None else DEFAULT_NODE_BUDGET,
        bracket_budget=args.bracket_budget,
    )
    if args.format == "structured":
        _print_structured(verdict.to_wire())
        return 0
    if verdict.outcome == "equivalent":
        print(f"equivalent ({len(verdict.path)} moves)")
    elif verdict.outcome == "distinguished":
        sep = verdict.separating_invariant
        va, vb = sep["value_a"], sep["value_b"]
        va = str(va) if not isinstance(va, list) else va
        vb = str(vb) if not isinstance(vb, list) else vb
        print(f"distinguished by {sep['name']}: {va} vs {vb}")
    else:
        stats = verdict.search_stats
        print(f"unknown (search exhausted after {stats.nodes_expanded} nodes)")
    return 0


def _cmd_color(args, parser) -> int:
    d = _diagram_from(args)
    coloring = _parse_colors(parser, args.colors)
    feedback = check_coloring(d, coloring)
    if args.format == "structured":
        _print_structured(feedback.to_wire())
    elif feedback.valid:
        note = " (monochromatic)" if feedback.monochromatic else ""
        print(f"valid coloring{note}")
    else:
        crossings = ", ".join(str(c) for c in feedback.violations)
        print(f"violations at crossings: {crossings}")
    return 0 if feedback.valid else 1


def _cmd_render(args, parser) -> int:
    d = _diagram_from(args)
    coloring = None
    if args.color_arcs is not None:
        coloring = _parse_colors(parser, args.color_arcs)
    layout = layout_diagram(d)
    svg = to_svg(
        d,
        layout,
        SvgOptions(
            gap_width=args.gap,
            stroke_width=args.stroke,
            coloring=coloring,
            show_labels=args.labels,
        ),
    )
    if args.out:
        Path(args.out).write_text(svg)
    if args.format == "structured":
        payload = {"layout": layout.to_wire()}
        if args.out:
            payload["path"] = str(args.out)
        else:
            payload["svg"] = svg
        _print_structured(payload)
    elif args.out:
        print(f"wrote {args.out}")
    else:
        print(svg, end="")
    return 0


def _cmd_puzzle_new(args, parser) -> int:
    puzzle = make_puzzle(args.base, args.moves, args.seed, move_budget=args.move_budget)
    out = Path(args.out) if args.out else Path(f"{puzzle.id}.json")
    save_puzzle(puzzle, out)
    if args.format == "structured":
        _print_structured(
            {"path": str(out), "puzzle": puzzle.to_wire(include_solution=False)}
        )
    else:
        print(f"wrote {out} (par {len(puzzle.solution_path)})")
    return 0


def _cmd_puzzle_solve(args, parser) -> int:
    puzzle = load_puzzle(args.file)
    d = puzzle.start
    for site in puzzle.solution_path:
        d = apply_move(d, site)
    solved = puzzle.target_met(d)
    if args.format == "structured":
        _print_structured(
            {
                "solved": solved,
                "moves": len(puzzle.solution_path),
                "final_pd": emit_pd(d),
            }
        )
    elif solved:
        print(
            f"solved in {len(puzzle.solution_path)} moves"
            f" (par {len(puzzle.solution_path)})"
        )
    else:
        print("not solved")
    return 0 if solved else 1


def _cmd_serve(args, parser) -> int:
    from .service import ServiceConfig, serve

    config = ServiceConfig(
        session_dir=Path(args.session_dir),
        host=args.host,
        port=args.port,
        bracket_budget_cap=args.bracket_cap,
        node_budget_cap=args.node_cap,
    )
    try:
        serve(config)
    except (RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        pass
    return 0


# ── parser ───────────────────────────────────────────────────────────


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotlab",
        description="Knot and link diagrams: parse, transform, measure, draw.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse PD text and report the structure")
    _add_diagram_flags(p)
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_parse)

    p = sub.add_parser("validate", help="list structural findings, if any")
    _add_diagram_flags(p)
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("invariants", help="writhe, tricolorings, linking, Jones")
    _add_diagram_flags(p)
    _add_format_flag(p)
    p.add_argument("--budget", type=int, help="bracket crossing budget (default 20)")
    p.set_defaults(handler=_cmd_invariants)

    p = sub.add_parser("moves", help="enumerate Reidemeister move sites")
    _add_diagram_flags(p)
    _add_format_flag(p)
    p.add_argument("--kinds", help="comma list of R1,R2,R3")
    p.add_argument("--directions", help="comma list of reduce,grow,slide")
    p.set_defaults(handler=_cmd_moves)

    p = sub.add_parser("simplify", help="search for a fewer-crossing diagram")
    _add_diagram_flags(p)
    _add_format_flag(p)
    p.add_argument("--budget", type=int, help="search node budget (default 100000)")
    p.add_argument(
        "--max-extra",
        type=int,
        default=DEFAULT_MAX_EXTRA,
        help="crossings the search may add over the best found (default 2)",
    )
    p.set_defaults(handler=_cmd_simplify)

    p = sub.add_parser("equiv", help="decide whether two diagrams are equivalent")
    p.add_argument("--pd", metavar="TEXT", action="append", help="diagram as PD text")
    p.add_argument(
        "--catalog", metavar="NAME", action="append", help="catalog entry name"
    )
    _add_format_flag(p)
    p.add_argument("--budget", type=int, help="search node budget (default 100000)")
    p.add_argument(
        "--crossing-cap",
        type=int,
        default=DEFAULT_CROSSING_CAP,
        help="largest diagram the search may visit (default 10)",
    )
    p.add_argument(
        "--bracket-budget",
        type=int,
        default=DEFAULT_BRACKET_BUDGET,
        help="bracket crossing budget (default 20)",
    )
    p.set_defaults(handler=_cmd_equiv)

    p = sub.add_parser("color", help="check a tricoloring")
    _add_diagram_flags(p)
    _add_format_flag(p)
    p.add_argument(
        "--colors",
        required=True,
        metavar="C0,C1,...",
        help="color (0/1/2) per arc id, comma separated",
    )
    p.set_defaults(handler=_cmd_color)

    p = sub.add_parser("render", help="draw the diagram as SVG")
    _add_diagram_flags(p)
    _add_format_flag(p)
    p.add_argument("--out", metavar="FILE", help="write the SVG here")
    p.add_argument("--gap", type=float, help="under-strand gap width")
    p.add_argument("--stroke", type=float, help="stroke width")
    p.add_argument("--labels", action="store_true", help="draw arc id labels")
    p.add_argument(
        "--color-arcs", metavar="C0,C1,...", help="stroke arcs by colors 0/1/2"
    )
    p.set_defaults(handler=_cmd_render)

    p = sub.add_parser("puzzle", help="scramble puzzles")
    puzzle_sub = p.add_subparsers(dest="puzzle_command", required=True)

    q = puzzle_sub.add_parser("new", help="generate a puzzle file")
    q.add_argument("--base", required=True, help="catalog entry to scramble")
    q.add_argument("--moves", type=int, required=True, help="scramble length")
    q.add_argument("--seed", type=int, default=0, help="scramble seed (default 0)")
    q.add_argument("--move-budget", type=int, help="cap on player moves")
    q.add_argument("--out", metavar="FILE", help="puzzle file (default <id>.json)")
    _add_format_flag(q)
    q.set_defaults(handler=_cmd_puzzle_new)

    q = puzzle_sub.add_parser("solve", help="replay a puzzle's stored solution")
    q.add_argument("file", help="puzzle file from `puzzle new`")
    _add_format_flag(q)
    q.set_defaults(handler=_cmd_puzzle_solve)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8765)
    p.add_argument(
        "--session-dir", default="sessions", help="session files live here"
    )
    p.add_argument(
        "--bracket-cap",
        type=int,
        default=DEFAULT_BRACKET_BUDGET,
        help="server-wide bracket budget cap (default 20)",
    )
    p.add_argument(
        "--node-cap",
        type=int,
        default=DEFAULT_NODE_BUDGET,
        help="server-wide search node cap (default 100000)",
    )
    p.set_defaults(handler=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, parser)
    except KnotlabError as exc:
        print(f"error [{exc.code}]: {exc.message}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
