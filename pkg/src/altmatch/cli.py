"""Command-line entry point: ``altmatch <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from pathlib import Path
from typing import Optional

from . import alternating as alt
from .constructor import build_alt_hamilton_path
from .extendability import check_theorem_1_1, check_theorem_1_2, extendability_profile
from .families import parse_family
from .formats import FormatError, decode_graph6, format_edge_list, format_matching, read_edge_list
from .graph import Graph, GraphError
from .harness import EXIT_BUDGET, SweepConfig, default_parallelism, run_sweep
from .matching import Matching, MatchingError, read_matching
from .theorems import MATCHING_CHECKERS, check_corollary43, corollary_k, probe_lovasz_woodall

EXIT_USAGE = 64

SEARCH_TARGETS = {
    "alt-ham-cycle": alt.find_alt_hamilton_cycle,
    "closed-alt-ham-path": alt.find_closed_alt_hamilton_path,
    "longest-alt-cycle": alt.longest_alt_cycle,
    "longest-closed-alt-path": alt.longest_closed_alt_path,
}


class InputError(Exception):
    """Bad user input; reported with exit code 64."""


def render_human(value, indent: int = 0) -> str:
    """Indented key/value rendering; every leaf is printed as JSON so nothing is lost."""
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for key, item in value.items():
            if isinstance(item, dict) and item:
                lines.append(f"{pad}{key}:")
                lines.append(render_human(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {json.dumps(item)}")
        return "\n".join(lines)
    return pad + json.dumps(value)


def _emit(payload, args) -> None:
    text = render_human(payload) if args.format == "human" else json.dumps(payload, sort_keys=True)
    if getattr(args, "output", None):
        Path(args.output).write_text(text + "\n")
    else:
        print(text)


def load_graph(path: str) -> Graph:
    """Edge-list file, or a graph6 file when the suffix is .g6."""
    try:
        if path.endswith(".g6"):
            first = next(line for line in Path(path).read_text().splitlines() if line.strip())
            return decode_graph6(first)
        return read_edge_list(path)
    except (FormatError, GraphError, StopIteration) as exc:
        raise InputError(f"{path}: {exc or 'empty file'}") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def load_matching(path: str, g: Graph, perfect: bool = True) -> Matching:
    try:
        return read_matching(path, g, perfect=perfect)
    except (FormatError, MatchingError) as exc:
        raise InputError(f"{path}: {exc}") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def parse_edges(text: str) -> list[tuple[int, int]]:
    """Edges from a file of ``u v`` lines or inline as ``0-1,2-3``."""
    path = Path(text)
    if path.is_file():
        body = path.read_text()
        items = [line.split() for line in body.splitlines() if line.strip() and not line.startswith("#")]
    else:
        items = [re.split(r"[-\s]+", part.strip()) for part in text.split(",") if part.strip()]
    try:
        return [(int(a), int(b)) for a, b in items]
    except ValueError:
        raise InputError(f"cannot parse edge set {text!r}") from None


def cmd_check(args) -> int:
    g = load_graph(args.graph)
    tid = args.theorem
    if tid in ("thm11", "thm12"):
        if args.k is None:
            raise InputError(f"{tid} needs -k")
        report = (check_theorem_1_1 if tid == "thm11" else check_theorem_1_2)(g, args.k)
    else:
        if not args.matching:
            raise InputError(f"{tid} needs -m MATCHING")
        m = load_matching(args.matching, g)
        if tid == "cor43":
            k = args.k if args.k is not None else corollary_k(g.n)
            report = check_corollary43(g, k, m, budget=args.budget)
        else:
            report = MATCHING_CHECKERS[tid](g, m, budget=args.budget)
    _emit(report.to_dict(), args)
    return EXIT_BUDGET if report.budget_exceeded else 0


def cmd_search(args) -> int:
    g = load_graph(args.graph)
    m = load_matching(args.matching, g)
    try:
        walk = SEARCH_TARGETS[args.target](g, m, budget=args.budget)
    except alt.SearchBudgetExceeded as exc:
        _emit({"target": args.target, "result": "budget_exceeded", "budget": exc.budget}, args)
        return EXIT_BUDGET
    except alt.NotApplicable as exc:
        _emit({"target": args.target, "result": "not_applicable", "reason": str(exc)}, args)
        return 0
    if walk is None:
        _emit({"target": args.target, "result": "absent"}, args)
    else:
        _emit({"target": args.target, "result": "found", "witness": walk.to_dict()}, args)
    return 0


def cmd_build_path(args) -> int:
    g = load_graph(args.graph)
    m = load_matching(args.matching, g)
    try:
        result = build_alt_hamilton_path(g, m, budget=args.budget)
    except alt.SearchBudgetExceeded as exc:
        _emit({"result": "budget_exceeded", "budget": exc.budget}, args)
        return EXIT_BUDGET
    _emit(result.to_dict(), args)
    return 0


def cmd_gen(args) -> int:
    try:
        spec = parse_family(args.family)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    g, m = spec.build()
    stem = spec.family + "".join(f"_{k}{v}" for k, v in sorted(spec.params.items()))
    out = Path(args.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    graph_file = out / f"{stem}.edges"
    graph_file.write_text(format_edge_list(g))
    payload = {"family": args.family, "graph": str(graph_file), "nu": g.n, "edges": g.num_edges}
    if m is not None:
        matching_file = out / f"{stem}.matching"
        matching_file.write_text(format_matching(m.edges))
        payload["matching"] = str(matching_file)
    print(json.dumps(payload, sort_keys=True))
    return 0


def cmd_sweep(args) -> int:
    try:
        cfg = SweepConfig.load(args.config)
    except (OSError, ValueError, TypeError, KeyError) as exc:
        raise InputError(f"{args.config}: {exc}") from None
    if args.workers:
        cfg.parallelism = args.workers
    else:
        cfg.parallelism = default_parallelism(cfg.parallelism)
    if args.counterexamples:
        cfg.counterexamples_path = args.counterexamples
    summary = run_sweep(cfg)
    _emit(summary.to_dict(), args)
    return summary.exit_code


def cmd_extend_profile(args) -> int:
    g = load_graph(args.graph)
    if g.n % 2:
        raise InputError("extendability needs an even number of vertices")
    _emit(extendability_profile(g).to_dict(), args)
    return 0


def cmd_probe_lw(args) -> int:
    g = load_graph(args.graph)
    try:
        report = probe_lovasz_woodall(g, parse_edges(args.edges), budget=args.budget)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(report.to_dict(), args)
    return EXIT_BUDGET if report.budget_exceeded else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="altmatch", description="Alternating Hamilton paths and cycles.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, matching=True, budget=True):
        p.add_argument("-g", "--graph", required=True, help="edge-list file (or .g6)")
        if matching:
            p.add_argument("-m", "--matching", help="matching file, one 'u v' pair per line")
        if budget:
            p.add_argument("--budget", type=int, default=alt.DEFAULT_BUDGET, help="node expansion cap")
        p.add_argument("--format", choices=("json", "human"), default="json")
        p.add_argument("-o", "--output", help="write output here instead of stdout")

    p = sub.add_parser("check", help="evaluate one theorem on one instance")
    common(p)
    p.add_argument("--theorem", required=True,
                   choices=sorted([*MATCHING_CHECKERS, "cor43", "thm11", "thm12"]))
    p.add_argument("-k", type=int)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="exact alternating search")
    common(p)
    p.add_argument("--target", required=True, choices=sorted(SEARCH_TARGETS))
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("build-path", help="grow a closed alternating Hamilton path")
    common(p)
    p.set_defaults(func=cmd_build_path)

    p = sub.add_parser("gen", help="write a family member as edge-list and matching files")
    p.add_argument("--family", required=True, help="e.g. g1:n=2, remark:t=1, kb:a=3,b=3, k:n=5, cycle:n=6")
    p.add_argument("-o", "--output-dir", default=".")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sweep", help="run an exhaustive sweep from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--workers", type=int)
    p.add_argument("--counterexamples", help="NDJSON file for counterexample records")
    p.add_argument("--format", choices=("json", "human"), default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("extend-profile", help="k-extendability profile")
    common(p, matching=False, budget=False)
    p.set_defaults(func=cmd_extend_profile)

    p = sub.add_parser("probe-lw", help="look for a cycle through independent edges")
    common(p, matching=False)
    p.add_argument("-L", "--edges", required=True, help="file of 'u v' lines, or inline '0-1,2-3'")
    p.set_defaults(func=cmd_probe_lw)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"altmatch: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
