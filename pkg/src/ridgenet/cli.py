"""Command-line surface: validate | unfold | enumerate | verify | report.

Exit codes: 0 success (verified, or a counterexample where one is the
expected outcome), 1 property violated, 2 usage or resource error. JSON
output is deterministic; a timestamp plus timing fields appear unless
--reproducible is given.
"""

from __future__ import annotations

import argparse
import datetime
import json
import sys
from fractions import Fraction

from . import verify as verify_mod
from .exact import rational_str
from .geometry import embed_chain
from .lists import (
    InvalidListError,
    UnfoldList,
    enumerate_valid_lists,
    count_valid_lists,
    is_valid_list,
    make_list,
    shortest_even_window,
)
from .render import svg_unfolding
from .report import run_report
from .skeleton import (
    ResourceLimitError,
    count_spanning_paths_up_to_symmetry,
    count_spanning_trees_up_to_symmetry,
    cross_polytope_graph,
    cube_graph,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _parse_labels(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    seps = text.replace(",", " ").split()
    try:
        return tuple(int(t) for t in seps)
    except ValueError as exc:
        raise UsageError(f"cannot parse list {text!r}: {exc}") from None


def _make_list(n: int, text: str) -> UnfoldList:
    try:
        return make_list(n, _parse_labels(text))
    except InvalidListError as exc:
        raise UsageError(str(exc)) from None


def _emit(payload: dict, args: argparse.Namespace) -> None:
    if not args.reproducible:
        payload = payload | {
            "generatedAt": datetime.datetime.now(datetime.timezone.utc).isoformat()
        }
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    _write(text, args)


def _write(text: str, args: argparse.Namespace) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args: argparse.Namespace) -> int:
    lst = _make_list(args.n, args.list)
    valid = is_valid_list(lst)
    payload: dict = {"command": "validate", "n": args.n, "list": list(lst.entries),
                     "valid": valid}
    if not valid:
        window = shortest_even_window(lst)
        payload["failingSublist"] = list(window)  # 1-based inclusive window
    if args.format == "text":
        if valid:
            _write("valid\n", args)
        else:
            s, e = payload["failingSublist"]
            _write(f"invalid: entries {s}..{e} each occur an even number of times\n", args)
    else:
        _emit(payload, args)
    return EXIT_OK if valid else EXIT_VIOLATION


def cmd_unfold(args: argparse.Namespace) -> int:
    lst = _make_list(args.n, args.list)
    unfolding = embed_chain(lst)
    if args.format == "svg":
        if args.n != 3:
            raise UsageError("svg output is only defined for n = 3")
        _write(svg_unfolding(unfolding), args)
        return EXIT_OK
    placements = []
    for idx, placement in enumerate(unfolding.placements):
        rows = placement.coords.rows
        placements.append(
            {
                "index": idx,
                "matrix": [[rational_str(x) for x in row] for row in rows],
                "approx": [[float(x) for x in row] for row in rows],
                "centroid": [rational_str(c) for c in placement.centroid()],
            }
        )
    payload = {
        "command": "unfold",
        "n": args.n,
        "list": list(lst.entries),
        "valid": is_valid_list(lst),
        "placements": placements,
        "edges": [list(e) for e in unfolding.edges],
    }
    if args.format == "text":
        lines = []
        for p in placements:
            lines.append(f"facet {p['index']}:")
            for row in p["matrix"]:
                lines.append("  [" + "  ".join(f"{x:>8}" for x in row) + "]")
        _write("\n".join(lines) + "\n", args)
    else:
        _emit(payload, args)
    return EXIT_OK


def _enumerate_records(args: argparse.Namespace):
    if args.kind == "valid-lists":
        if args.length is None:
            raise UsageError("valid-lists needs --length")
        for lst in enumerate_valid_lists(
            args.n, args.length, up_to_relabeling=args.up_to_relabeling
        ):
            yield {"list": list(lst.entries)}
    elif args.kind == "spanning-paths":
        length = (1 << args.n) - 1
        if args.n > 4:
            raise UsageError("spanning-path streams are bounded at n = 4; use --count-only")
        for lst in enumerate_valid_lists(
            args.n, length, up_to_relabeling=args.up_to_symmetry
        ):
            yield {"list": list(lst.entries)}
    else:  # spanning-trees
        graph = cube_graph(args.n) if args.graph == "cube" else cross_polytope_graph(args.n)
        if args.up_to_symmetry:
            from .skeleton import spanning_tree_representatives

            for edges in spanning_tree_representatives(graph, force=args.force):
                yield {"tree": [list(e) for e in edges]}
        else:
            from .skeleton import spanning_tree_masks, kirchhoff_count

            if kirchhoff_count(graph) > 1_000_000 and not args.force:
                raise ResourceLimitError("tree stream too large; pass --force")
            for mask in spanning_tree_masks(graph):
                yield {
                    "tree": [
                        list(graph.edges[e])
                        for e in range(graph.edge_count)
                        if mask >> e & 1
                    ]
                }


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.count_only:
        if args.kind == "valid-lists":
            if args.length is None:
                raise UsageError("valid-lists needs --length")
            total = count_valid_lists(
                args.n, args.length, up_to_relabeling=args.up_to_relabeling
            )
        elif args.kind == "spanning-paths":
            if args.up_to_symmetry:
                total = count_spanning_paths_up_to_symmetry(args.n, force=args.force)
            else:
                total = count_valid_lists(args.n, (1 << args.n) - 1)
        else:
            graph = (
                cube_graph(args.n) if args.graph == "cube" else cross_polytope_graph(args.n)
            )
            if args.up_to_symmetry:
                total = count_spanning_trees_up_to_symmetry(graph, force=args.force).classes
            else:
                from .skeleton import kirchhoff_count

                total = kirchhoff_count(graph)
        _write(f"{total}\n", args)
        return EXIT_OK
    lines = []
    for record in _enumerate_records(args):
        lines.append(json.dumps(record, sort_keys=True))
    _write("\n".join(lines) + ("\n" if lines else ""), args)
    return EXIT_OK


THEOREM_IDS = (
    "simplex-allnet",
    "orthoplex4-allnet",
    "orthoplex-counterexamples",
    "polynomials",
    "counts",
)


def cmd_verify(args: argparse.Namespace) -> int:
    def progress(label, done=None, total=None):
        if done is None:
            print(label, file=sys.stderr)
        else:
            print(f"{label}: {done}/{total}", file=sys.stderr)

    if args.theorem == "simplex-allnet":
        report = verify_mod.verify_simplex_allnet(args.dim or 4)
        expected = verify_mod.VERIFIED
    elif args.theorem == "orthoplex4-allnet":
        if args.direct_census and not args.force:
            raise UsageError("--direct-census embeds 110,912 unfoldings; add --force")
        report = verify_mod.verify_orthoplex4_allnet(
            direct_census=args.direct_census,
            jobs=args.jobs,
            progress=(lambda lbl, d, t: progress(lbl, d, t)) if args.direct_census else None,
        )
        expected = verify_mod.VERIFIED
    elif args.theorem == "orthoplex-counterexamples":
        report = verify_mod.verify_orthoplex_counterexamples(dim=args.dim)
        expected = verify_mod.COUNTEREXAMPLE
    elif args.theorem == "polynomials":
        report = verify_mod.verify_polynomials()
        expected = verify_mod.VERIFIED
    elif args.theorem == "counts":
        report = verify_mod.verify_counts(
            target=args.target,
            force=args.force,
            progress=lambda done, total: progress("census", done, total),
        )
        expected = verify_mod.VERIFIED
    else:
        raise UsageError(f"unknown theorem id {args.theorem!r}")
    _emit(report.as_json(include_elapsed=not args.reproducible), args)
    return EXIT_OK if report.status == expected else EXIT_VIOLATION


def cmd_report(args: argparse.Namespace) -> int:
    rows = run_report(
        args.output_dir,
        jobs=args.jobs,
        reproducible=args.reproducible,
        skip_figures=args.no_figures,
    )
    bad = [r for r in rows if not r["ok"]]
    for r in rows:
        print(f"{r['check']}: {r['status']}" + ("" if r["ok"] else "  <-- unexpected"),
              file=sys.stderr)
    return EXIT_OK if not bad else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "svg"), default="json")
    common.add_argument("--output", help="write to a file instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="parallel workers")
    common.add_argument(
        "--reproducible", action="store_true",
        help="suppress timestamps and timings for byte-identical output",
    )
    common.add_argument(
        "--force", action="store_true", help="allow long-running censuses"
    )

    parser = argparse.ArgumentParser(
        prog="ridgenet",
        description="Exact ridge unfoldings and nets of simplices and orthoplexes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common],
                       help="check a label list for self-avoidance")
    p.add_argument("-n", type=int, required=True, help="dimension (label bound)")
    p.add_argument("list", help="comma or space separated labels, e.g. '1,2,1,3'")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("unfold", parents=[common],
                       help="embed a chain and print exact placements")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("list")
    p.set_defaults(fn=cmd_unfold)

    p = sub.add_parser("enumerate", parents=[common],
                       help="stream valid lists, spanning paths, or spanning trees")
    p.add_argument("kind", choices=("valid-lists", "spanning-paths", "spanning-trees"))
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--length", type=int, help="list length for valid-lists")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--up-to-symmetry", action="store_true",
                   help="one representative per symmetry class")
    p.add_argument("--up-to-relabeling", action="store_true",
                   help="only lists whose labels first appear in increasing order")
    p.add_argument("--graph", choices=("cube", "orthoplex"), default="cube",
                   help="spanning-tree host: cube skeleton (orthoplex unfoldings) "
                        "or orthoplex skeleton (cube unfoldings)")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common],
                       help="run a theorem verification")
    p.add_argument("theorem", choices=THEOREM_IDS)
    p.add_argument("--dim", type=int, help="dimension for dimension-indexed theorems")
    p.add_argument("--target", help="specific census target for 'counts'")
    p.add_argument("--direct-census", action="store_true",
                   help="also embed all 110,912 4-orthoplex unfoldings (hours)")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("report", parents=[common],
                       help="run the default suite; write CSV, JSON, and figures")
    p.add_argument("--output-dir", default="report",
                   help="directory for summary.csv, report.json, and figures")
    p.add_argument("--no-figures", action="store_true")
    p.set_defaults(fn=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidListError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
