"""Command-line front end.

Subcommands: jaco, competition, grog solve, grog run, enumerate, verify.
stdout carries data, stderr carries diagnostics; --out redirects the data
to a file.  Exit codes: 0 success / all asserts pass, 1 assertion or
strategy failure, 2 usage, parse or cap error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import claims
from .competition import (
    check_theorem_1_1,
    competition_graph,
    competition_to_dot,
    competition_to_json,
    jaco_competition_closed_form,
)
from .engine import (
    StrategyError,
    Web,
    enumerate_greedy,
    run_result_to_json,
    run_strategy,
    solve_exact,
    solve_result_to_json,
    strategy_from_json,
)
from .graphs import (
    GraphError,
    digraph_from_json,
    digraph_to_dot,
    digraph_to_json,
    ugraph_from_json,
    ugraph_to_json,
)
from .engine import SOLVER_ARC_CAP
from .jaco import build_jaco, jaco_to_json
from .webs import (
    WEB_EDGE_CAP,
    WEB_N_CAP,
    complete_graph,
    cycle_graph,
    enumerate_webs,
    path_graph,
    star_graph,
    web_count_formula,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _check_cap(flag: str, value: int, hard_limit: int) -> None:
    if value > hard_limit:
        raise GraphError(f"{flag} {value} exceeds the compiled hard limit {hard_limit}")


def _load_json_file(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON in {path}: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _arc_list(arcs) -> str:
    return " ".join(f"({t},{h})" for t, h in arcs)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_jaco(args) -> int:
    jg = build_jaco(args.n)
    if args.format == "json":
        text = _json_text(jaco_to_json(jg))
    elif args.format == "dot":
        text = digraph_to_dot(jg.digraph)
    else:
        jaconian = "none" if jg.jaconian is None else str(jg.jaconian)
        text = (
            f"Jaco graph of order {jg.n} ({len(jg.digraph.arcs)} arcs)\n"
            f"arcs: {_arc_list(jg.digraph.arcs)}\n"
            f"jaconian vertex: {jaconian}\n"
        )
    _emit(text, args.out)
    return EXIT_OK


def cmd_competition(args) -> int:
    if args.input is None and args.jaco is None:
        raise GraphError("competition needs an input graph file or --jaco N")
    if args.check:
        if args.jaco is None:
            raise GraphError("--check needs --jaco N")
        result = check_theorem_1_1(args.jaco)
        if result.all_equal:
            _emit("equal\n", args.out)
            return EXIT_OK
        bad = [r for r in result.results if not r["equal"]][0]
        _emit(f"MISMATCH at n={bad['n']}: missing={bad['missing']} extra={bad['extra']}\n", args.out)
        return EXIT_FAIL
    if args.closed_form:
        if args.jaco is None:
            raise GraphError("--closed-form needs --jaco N")
        comp = jaco_competition_closed_form(args.jaco)
    else:
        if args.jaco is not None:
            d = build_jaco(args.jaco).digraph
        else:
            d = digraph_from_json(_load_json_file(args.input))
        comp = competition_graph(d)
    if args.format == "json":
        text = _json_text(competition_to_json(comp))
    elif args.format == "dot":
        text = competition_to_dot(comp)
    else:
        text = (
            f"competition graph on {comp.ugraph.n} vertices\n"
            f"edges: {_arc_list(comp.ugraph.edges) or '(none)'}\n"
            f"isolated: {' '.join(map(str, comp.isolated)) or '(none)'}\n"
        )
    _emit(text, args.out)
    return EXIT_OK


def cmd_grog_solve(args) -> int:
    web = Web(digraph_from_json(_load_json_file(args.input)))
    result = solve_exact(web, cap=args.max_arcs)
    if args.format == "json":
        text = _json_text(solve_result_to_json(result, include_witness=args.witness))
    else:
        lines = [
            f"grog number: {result.grog}",
            f"max predations: {result.max_predations}",
            f"states explored: {result.states_explored}",
        ]
        if args.witness:
            steps = ", ".join(
                f"({b.predator} -> {' '.join(map(str, sorted(b.prey)))})"
                for b in result.witness
            )
            lines.append(f"witness: {steps or '(empty)'}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_grog_run(args) -> int:
    web = Web(digraph_from_json(_load_json_file(args.input)))
    strategy = strategy_from_json(_load_json_file(args.strategy))
    result = run_strategy(web, strategy, require_exit=args.require_exit)
    if args.format == "json":
        text = _json_text(run_result_to_json(result))
    else:
        text = (
            f"residual: {result.residual}\n"
            f"predations: {result.predation_count}\n"
            f"final population: {' '.join(map(str, result.final_state.pop))}\n"
        )
    _emit(text, args.out)
    return EXIT_OK


_FAMILIES = {
    "path": path_graph,
    "cycle": cycle_graph,
    "star": star_graph,
    "complete": complete_graph,
}


def cmd_enumerate(args) -> int:
    if args.graph in _FAMILIES:
        if args.n is None:
            raise GraphError(f"--graph {args.graph} needs --n")
        base = _FAMILIES[args.graph](args.n)
    else:
        base = ugraph_from_json(_load_json_file(args.graph))
    webs = list(enumerate_webs(base, dedup=args.dedup, n_cap=args.max_n, edge_cap=12))
    formula = web_count_formula(base.n, len(base.edges))
    solves = [solve_exact(w, cap=args.max_arcs) for w in webs]
    grogs = [s.grog for s in solves]
    grog = min(grogs)
    witness = webs[grogs.index(grog)]

    distribution = None
    greedy = None
    if args.distribution:
        distribution = dict(sorted(Counter(grogs).items()))
        greedy = [enumerate_greedy(w, cap=args.max_arcs) for w in webs]

    if args.format == "csv":
        if distribution is None:
            raise GraphError("csv output needs --distribution")
        text = "residual,count\n" + "".join(f"{r},{c}\n" for r, c in distribution.items())
    elif args.format == "json":
        obj = {
            "base": ugraph_to_json(base),
            "dedup": args.dedup,
            "web_count": len(webs),
            "formula_count": formula,
            "grog": grog,
            "witness": digraph_to_json(witness.digraph),
        }
        if distribution is not None:
            obj["distribution"] = [
                {"residual": r, "count": c} for r, c in distribution.items()
            ]
            obj["webs"] = [
                {
                    "arcs": [list(a) for a in w.digraph.arcs],
                    "grog": s.grog,
                    "greedy_count": g.count,
                    "greedy_min": g.min_residual,
                }
                for w, s, g in zip(webs, solves, greedy)
            ]
        text = _json_text(obj)
    else:
        lines = [
            f"base graph: n={base.n}, {len(base.edges)} edges",
            f"webs enumerated: {len(webs)}{' (dedup)' if args.dedup else ''}"
            f"    half-formula count: {formula}",
            f"grog number g(G) = {grog}",
        ]
        if distribution is not None:
            lines.append("residual distribution:")
            lines += [f"  {r}: {c}" for r, c in distribution.items()]
            counts = [g.count for g in greedy]
            lines.append(
                f"greedy strategies per web: min {min(counts)}, max {max(counts)}"
            )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


_N_MAX_FIELDS = {
    "thm-1.1": "n_max_thm11",
    "prop-2.4": "n_max_path",
    "cor-2.5": "n_max_path",
    "prop-2.7": "n_max_cycle",
    "cor-2.8": "n_max_cycle",
    "lemma-2.9": "n_max_lemma29",
    "prop-2.10": "n_max_jaco",
    "cor-2.11": "n_max_jaco",
}


def _verify_summary(report: dict) -> str:
    lines = [f"{'claim':<22}{'mode':<14}{'status':<10}{'instances':>9}"]
    for claim in report["claims"]:
        lines.append(
            f"{claim['id']:<22}{claim['mode']:<14}{claim['status']:<10}{claim['instances']:>9}"
        )
        for failure in claim["failures"][:3]:
            lines.append(f"    counterexample: {json.dumps(failure)}")
        reason = claim["values"].get("skip_reason")
        if reason:
            lines.append(f"    skipped: {reason}")
    lines.append(f"overall: {report['status']}")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    config = claims.HarnessConfig(seed=args.seed, arc_cap=args.max_arcs)
    if args.claim:
        if args.claim not in claims.CLAIM_INFO:
            print(f"error: unknown claim id {args.claim!r}", file=sys.stderr)
            print(f"known ids: {', '.join(claims.CLAIM_ORDER)}", file=sys.stderr)
            return EXIT_USAGE
        if args.n_max is not None:
            field = _N_MAX_FIELDS.get(args.claim)
            if field:
                setattr(config, field, args.n_max)
        report = claims.run_claims([args.claim], config)
    else:
        if args.n_max is not None:
            config.n_max_thm11 = args.n_max
            config.n_max_path = args.n_max
            config.n_max_cycle = args.n_max
            config.n_max_jaco = args.n_max
            config.n_max_lemma29 = args.n_max
        report = claims.run_all(config)

    json_text = _json_text(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(json_text)
        sys.stdout.write(_verify_summary(report))
    elif args.format == "json":
        sys.stdout.write(json_text)
    else:
        sys.stdout.write(_verify_summary(report))
    return EXIT_OK if report["status"] == "pass" else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grogweb",
        description="Jaco graphs, competition graphs, and exact grog numbers of predation webs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats):
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--out", metavar="PATH", help="write output to a file instead of stdout")

    p = sub.add_parser("jaco", help="construct a Jaco graph")
    p.add_argument("--n", type=int, required=True)
    common(p, ["text", "json", "dot"])
    p.set_defaults(func=cmd_jaco)

    p = sub.add_parser("competition", help="competition graph of a digraph")
    p.add_argument("input", nargs="?", help="digraph JSON file")
    p.add_argument("--jaco", type=int, metavar="N", help="use the Jaco graph of order N as input")
    p.add_argument("--closed-form", action="store_true", help="use the Jaco closed form (n >= 5)")
    p.add_argument("--check", action="store_true",
                   help="compare closed form and direct computation for 5..N")
    common(p, ["text", "json", "dot"])
    p.set_defaults(func=cmd_competition)

    p = sub.add_parser("grog", help="solve a web or replay a strategy")
    gsub = p.add_subparsers(dest="grog_command", required=True)

    ps = gsub.add_parser("solve", help="exact grog number of a web")
    ps.add_argument("input", help="digraph JSON file")
    ps.add_argument("--witness", action="store_true", help="include a witness strategy")
    ps.add_argument("--max-arcs", type=int, default=24)
    common(ps, ["text", "json"])
    ps.set_defaults(func=cmd_grog_solve)

    pr = gsub.add_parser("run", help="replay a strategy file against a web")
    pr.add_argument("input", help="digraph JSON file")
    pr.add_argument("--strategy", required=True, help="strategy JSON file")
    pr.add_argument("--require-exit", action="store_true",
                    help="fail unless the strategy reaches a terminal state")
    pr.add_argument("--max-arcs", type=int, default=24)
    common(pr, ["text", "json"])
    pr.set_defaults(func=cmd_grog_run)

    p = sub.add_parser("enumerate", help="enumerate the webs of a base graph")
    p.add_argument("--graph", required=True,
                   help="path | cycle | star | complete (with --n), or a graph JSON file")
    p.add_argument("--n", type=int)
    p.add_argument("--dedup", action="store_true", help="emit each distinct web once")
    p.add_argument("--distribution", action="store_true",
                   help="include the residual histogram and per-web greedy counts")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--max-arcs", type=int, default=24)
    common(p, ["text", "json", "csv"])
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="machine-check the claim catalog")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true", help="run every claim (default)")
    group.add_argument("--claim", metavar="ID", help="run a single claim by id")
    p.add_argument("--n-max", type=int, help="override the range cap of range-based claims")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--max-arcs", type=int, default=24)
    common(p, ["text", "json"])
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except StrategyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
