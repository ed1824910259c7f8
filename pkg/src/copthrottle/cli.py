"""Command-line surface: analyze graphs, generate families, run the
verification suites, and play against the exact optimal opponent.

Exit codes are frozen for automation: 0 success, 1 invalid input,
2 budget exceeded, 3 verification failure.  Identical (command, input,
seed, budget) invocations produce byte-identical JSON/CSV output; every
number printed is recomputed by the underlying module call, never by
CLI-side arithmetic.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .chordal import is_chordal
from .engine import (
    GameState,
    canonical_config,
    capt_k,
    optimal_moves,
    solve_k,
    value_to_json,
)
from .families import generate_named
from .graph import BudgetExceeded, DEFAULT_BUDGET, Graph, radius_and_center
from .graphio import GraphFormatError, format_graph, load_graph
from .throttling import throttling_report
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2
EXIT_VERIFY = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits 2; that code means budget here
        self.print_usage(sys.stderr)
        raise CliInputError(message)


class CliInputError(ValueError):
    pass


def _parse_params(items: Optional[Sequence[str]]) -> dict:
    params = {}
    for item in items or ():
        if "=" not in item:
            raise CliInputError(f"--param expects key=value, got {item!r}")
        key, _, value = item.partition("=")
        try:
            params[key.strip()] = int(value)
        except ValueError as exc:
            raise CliInputError(f"--param value must be an integer: {item!r}") from exc
    return params


def _resolve_graph(args) -> Graph:
    if getattr(args, "input", None) and getattr(args, "family", None):
        raise CliInputError("give exactly one of --input and --family")
    if getattr(args, "input", None):
        try:
            return load_graph(args.input)
        except (OSError, GraphFormatError) as exc:
            raise CliInputError(f"cannot load {args.input}: {exc}") from exc
    if getattr(args, "family", None):
        try:
            return generate_named(args.family, _parse_params(args.param))
        except ValueError as exc:
            raise CliInputError(str(exc)) from exc
    raise CliInputError("give one of --input or --family")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="copthrottle", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input", help="graph file (.json, .g6, or edge list)")
        p.add_argument("--family", help="named family (see `generate --list`)")
        p.add_argument("--param", action="append", help="family parameter key=value")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        p.add_argument("--format", default="text", choices=["text", "json", "csv", "dot"])

    p_an = sub.add_parser("analyze", help="throttling table, cop number, chordality")
    common(p_an)
    p_an.add_argument("--k-max", type=int, default=None, dest="k_max")

    p_gen = sub.add_parser("generate", help="emit a family member")
    common(p_gen)
    p_gen.add_argument("--list", action="store_true", help="list family names")
    p_gen.add_argument("--seed", type=int, default=0)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("--suite", required=True, help="suite name or 'all'")
    p_ver.add_argument("--count", type=int, default=None)
    p_ver.add_argument("--max-n", type=int, default=None, dest="max_n")
    p_ver.add_argument("--seed", type=int, default=42)
    p_ver.add_argument("--budget", type=int, default=None)
    p_ver.add_argument("--param", action="append", help="suite parameter key=value")
    p_ver.add_argument("--input", help="graph6 corpus file (outerplanar suite)")
    p_ver.add_argument("--format", default="text", choices=["text", "json"])

    p_pl = sub.add_parser("play", help="play against the exact optimal opponent")
    common(p_pl)
    p_pl.add_argument("--cops", type=int, default=1)
    p_pl.add_argument("--as", dest="side", default="robber", choices=["robber", "cops"])
    return parser


# ---------------------------------------------------------------------------
# analyze


def cmd_analyze(args) -> int:
    g = _resolve_graph(args)
    report = throttling_report(g, k_max=args.k_max, budget=args.budget)
    chordal = is_chordal(g)
    if args.format == "csv":
        sys.stdout.write(report.to_csv())
        return EXIT_OK
    if args.format == "json":
        obj = report.to_json_obj()
        obj["chordal"] = chordal
        if chordal and g.is_connected():
            rad, _ = radius_and_center(g)
            obj["one_plus_radius"] = 1 + rad
            obj["prod_equals_one_plus_radius"] = report.th_prod == 1 + rad
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
        return EXIT_OK
    if args.format == "dot":
        sys.stdout.write(format_graph(g, "dot"))
        return EXIT_OK
    name = g.name or "graph"
    print(f"{name}: n={g.n} m={g.m}  chordal={'yes' if chordal else 'no'}")
    print(f"cop number c(G) = {report.cop_number}")
    print("  k  capt_k  k+capt  k(1+capt)  witness")
    for row in report.rows:
        wit = " ".join(map(str, row.witness)) if row.witness is not None else "-"
        print(
            f"  {row.k:<3}{value_to_json(row.capt):<8}{value_to_json(row.th_sum):<8}"
            f"{value_to_json(row.th_prod):<11}{wit}"
        )
    print(f"th_c(G) = {report.th_sum}  at k={report.th_sum_k}, witness {report.th_sum_witness}")
    print(f"th_c_x(G) = {report.th_prod}  at k={report.th_prod_k}, witness {report.th_prod_witness}")
    if chordal and g.is_connected():
        rad, center = radius_and_center(g)
        verdict = "holds" if report.th_prod == 1 + rad else "VIOLATED"
        print(f"chordal product identity th_c_x = 1 + rad = {1 + rad}: {verdict}")
    if not report.complete:
        print("note: k-sweep truncated by --k-max before the pruning rule closed it")
    return EXIT_OK


# ---------------------------------------------------------------------------
# generate


def cmd_generate(args) -> int:
    if args.list:
        from .families import _FAMILY_PARAMS

        for name, params in sorted(_FAMILY_PARAMS.items()):
            print(f"{name}({', '.join(params)})" if params else f"{name}()")
        return EXIT_OK
    if not args.family:
        raise CliInputError("generate needs --family (or --list)")
    params = _parse_params(args.param)
    if args.seed and "seed" not in params and "seed" in _family_param_names(args.family):
        params["seed"] = args.seed
    try:
        g = generate_named(args.family, params)
    except ValueError as exc:
        raise CliInputError(str(exc)) from exc
    fmt = "json" if args.format == "text" else args.format
    sys.stdout.write(format_graph(g, fmt))
    if fmt == "json":
        sys.stdout.write("\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    params = _parse_params(args.param)
    if "l" in params:  # the m-ell suite's parameter is spelled ell
        params["ell"] = params.pop("l")
    if args.input:
        params["graph6_path"] = args.input
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    results = []
    for name in names:
        if name not in SUITES:
            raise CliInputError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
        results.append(
            run_suite(
                name,
                seed=args.seed,
                count=args.count,
                max_n=args.max_n,
                budget=args.budget,
                **params,
            )
        )
    if args.format == "json":
        payload = [
            {
                "suite": r.name,
                "passed": r.passed,
                "failed": r.failed,
                "details": r.details,
                "first_counterexample": r.first_counterexample,
            }
            for r in results
        ]
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        for r in results:
            print(r.summary())
            for d in r.details:
                print(f"    {d}")
            if r.first_counterexample and r.first_counterexample.get("graph"):
                print(f"    first counterexample graph: "
                      f"{json.dumps(r.first_counterexample['graph'], sort_keys=True)}")
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY


# ---------------------------------------------------------------------------
# play


def cmd_play(args) -> int:
    g = _resolve_graph(args)
    k = args.cops
    if k < 1:
        raise CliInputError("--cops must be at least 1")
    table = solve_k(g, k, budget=args.budget)
    human_robber = args.side == "robber"
    print(f"Cops and Robbers on {g.name or 'graph'} (n={g.n}), {k} cop(s); "
          f"you play the {'robber' if human_robber else 'cops'}.")

    def read_command(prompt: str) -> list[str]:
        print(prompt, end="", flush=True)
        line = sys.stdin.readline()
        if not line:
            return ["quit"]
        print(line.rstrip("\n"))
        return line.split()

    if human_robber:
        value, cops = capt_k(g, k, budget=args.budget)
        if cops is None:
            cops = canonical_config(tuple(range(min(k, g.n))) + (0,) * max(0, k - g.n))
        print(f"cops open at {' '.join(map(str, cops))} "
              f"(game value {value_to_json(value)})")
        robber = None
        while robber is None:
            words = read_command("choose your start: move v> ")
            if not words:
                continue
            if words[0] == "quit":
                return EXIT_OK
            if words[0] == "move" and len(words) == 2 and words[1].isdigit():
                v = int(words[1])
                if 0 <= v < g.n:
                    robber = v
                else:
                    print(f"vertex out of range; pick one of 0..{g.n - 1}")
            else:
                print("say: move v   (or quit)")
    else:
        cops = None
        while cops is None:
            words = read_command(f"place your {k} cop(s): place v1 ... vk> ")
            if not words:
                continue
            if words[0] == "quit":
                return EXIT_OK
            if words[0] == "place" and len(words) == k + 1 and all(w.isdigit() for w in words[1:]):
                vs = [int(w) for w in words[1:]]
                if all(0 <= v < g.n for v in vs):
                    cops = canonical_config(vs)
                else:
                    print(f"vertices must be in 0..{g.n - 1}")
            else:
                print(f"say: place v1 ... v{k}")
        row = [table.state_value(cops, r) for r in range(g.n)]
        best = max(row)
        robber = row.index(best)
        print(f"robber starts at {robber} (game value {value_to_json(best)})")

    rounds = 0
    while True:
        if robber in cops:
            print(f"capture! robber caught at {robber} after {rounds} round(s).")
            return EXIT_OK
        # cop half-move
        state = GameState(tuple(cops), robber)
        if human_robber:
            cops = optimal_moves(g, table, state, "cops")[0]
            rounds += 1
            print(f"round {rounds}: cops move to {' '.join(map(str, cops))}")
            if robber in cops:
                print(f"capture! robber caught at {robber} after {rounds} round(s).")
                return EXIT_OK
        else:
            moved = None
            while moved is None:
                words = read_command(f"round {rounds + 1}: your cops at "
                                     f"{' '.join(map(str, cops))}; move v1 ... vk> ")
                if not words:
                    continue
                if words[0] == "quit":
                    print(f"game abandoned after {rounds} round(s).")
                    return EXIT_OK
                if words[0] == "value":
                    print(f"value: {value_to_json(table.state_value(cops, robber))}")
                    continue
                if words[0] == "hint":
                    hints = optimal_moves(g, table, state, "cops")
                    print("optimal cop moves: " + "; ".join(" ".join(map(str, h)) for h in hints[:5]))
                    continue
                if words[0] == "move" and len(words) == k + 1 and all(w.isdigit() for w in words[1:]):
                    vs = [int(w) for w in words[1:]]
                    cand = canonical_config(vs)
                    legal = all(0 <= v < g.n for v in vs) and _team_move_legal(g, cops, cand)
                    if legal:
                        moved = cand
                    else:
                        print("illegal team move; each cop may stay or step to a neighbor")
                        print(f"your cops: {' '.join(map(str, cops))}")
                else:
                    print(f"say: move v1 ... v{k}  (or hint / value / quit)")
            cops = moved
            rounds += 1
            if robber in cops:
                print(f"capture! robber caught at {robber} after {rounds} round(s).")
                return EXIT_OK
        # robber half-move
        state = GameState(tuple(cops), robber)
        if human_robber:
            moved_r = None
            while moved_r is None:
                words = read_command(f"robber at {robber}; move v> ")
                if not words:
                    continue
                if words[0] == "quit":
                    print(f"game abandoned after {rounds} round(s).")
                    return EXIT_OK
                if words[0] == "value":
                    vals = [table.state_value(cops, r2) for r2 in g.closed[robber]]
                    print(f"value: {value_to_json(max(vals))}")
                    continue
                if words[0] == "hint":
                    hints = optimal_moves(g, table, state, "robber")
                    print("optimal robber moves: " + " ".join(map(str, hints)))
                    continue
                if words[0] == "move" and len(words) == 2 and words[1].isdigit():
                    v = int(words[1])
                    if 0 <= v < g.n and v in g.closed[robber]:
                        moved_r = v
                    else:
                        print(f"illegal move; legal: {' '.join(map(str, g.closed[robber]))}")
                else:
                    print("say: move v  (or hint / value / quit)")
            robber = moved_r
        else:
            robber = optimal_moves(g, table, state, "robber")[0]
            print(f"robber moves to {robber}")
        if robber in cops:
            print(f"capture! robber caught at {robber} after {rounds} round(s).")
            return EXIT_OK


def _family_param_names(family: str) -> tuple[str, ...]:
    from .families import _FAMILY_PARAMS

    return _FAMILY_PARAMS.get(family.lower(), ())


def _team_move_legal(g: Graph, cops: tuple[int, ...], target: tuple[int, ...]) -> bool:
    """Check a perfect matching moving each cop within its closed
    neighborhood (permutation scan is fine at interactive cop counts)."""
    import itertools

    for perm in itertools.permutations(target):
        if all(b in g.closed[a] for a, b in zip(cops, perm)):
            return True
    return False


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        command = {
            "analyze": cmd_analyze,
            "generate": cmd_generate,
            "verify": cmd_verify,
            "play": cmd_play,
        }[args.command]
        return command(args)
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
