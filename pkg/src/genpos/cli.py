"""Command-line interface.

Graph inputs use explicit prefixes so scripts stay unambiguous:

* a bare path names an edge-list file (first line n, then "u v" lines),
* ``g6:<string>`` is an inline graph6 graph,
* ``gen:<spec>`` builds a named family, e.g. ``gen:petersen``,
  ``gen:grid:3x4``, ``gen:kn_minus:n=9,h=C5`` (see ``families``).

Machine-readable reports go to stdout (deterministic for a fixed seed in
single-threaded mode; never any wall-clock content); timing diagnostics
go to stderr.  Exit codes: 0 success, 1 cross-check mismatch, 2 usage or
parse error, 3 solver budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import formulas
from .crosscheck import CAMPAIGNS, run_campaigns
from .errors import BudgetExceededError, GenposError
from .exact import (
    SearchBudget,
    gp_exact,
    hull_numbers,
    max_clique,
    max_clique_union,
    max_independent_set,
    max_induced_biclique,
)
from .families import generate, parse_family
from .graph6 import emit_graph6, parse_graph6
from .graphs import (
    BipartiteLabeling,
    Graph,
    INFINITE,
    emit_edge_list,
    parse_edge_list,
    simplicial_vertices,
    two_coloring,
)
from .verify import distant_edges_bound, is_gp_characterized, is_gp_definitional

SCHEMA = 1


def load_graph(descriptor: str) -> Graph:
    if descriptor.startswith("g6:"):
        return parse_graph6(descriptor[3:])
    if descriptor.startswith("gen:"):
        return generate(parse_family(descriptor[4:]))
    with open(descriptor, "r", encoding="utf-8") as handle:
        return parse_edge_list(handle.read())


def _budget(args) -> SearchBudget:
    return SearchBudget(
        max_nodes=args.max_nodes,
        max_millis=args.max_millis,
        mode="brute_force" if getattr(args, "method", "") == "brute" else "branch_and_bound",
    )


def _emit(payload: dict, as_json: bool, text_lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _jsonable(value):
    if value == INFINITE:
        return "infinite"
    return value


def cmd_solve(args) -> int:
    graph = load_graph(args.input)
    budget = _budget(args)
    started = time.monotonic()
    if args.method in ("exact", "brute"):
        value, witness = gp_exact(graph, budget)
        result = formulas.GpResult(
            value,
            formulas.METHOD_EXACT,
            witness,
            is_gp_definitional(graph, witness) is True,
        )
    elif args.method == "formula":
        result = formulas.solve(graph, budget, allow_exact=False)
    else:
        result = formulas.solve(graph, budget)
    elapsed = (time.monotonic() - started) * 1000
    print(f"solve took {elapsed:.1f} ms", file=sys.stderr)
    payload = {
        "schema": SCHEMA,
        "command": "solve",
        "input": args.input,
        "result": result.to_json(),
    }
    witness_text = (
        ",".join(map(str, sorted(result.witness))) if result.witness is not None else "-"
    )
    _emit(
        payload,
        args.json,
        [
            f"gp = {result.value}",
            f"method = {result.method}",
            f"witness = {witness_text}",
            f"verified = {str(result.verified).lower()}",
        ],
    )
    return 0


def cmd_verify(args) -> int:
    graph = load_graph(args.input)
    try:
        members = [int(part) for part in args.set.split(",") if part.strip() != ""]
    except ValueError:
        raise GenposError(f"cannot parse --set {args.set!r}: expected comma-separated ids")
    definitional = is_gp_definitional(graph, members)
    structural = is_gp_characterized(graph, members)
    in_gp = definitional is True
    violation = None if in_gp else definitional.to_json()
    payload = {
        "schema": SCHEMA,
        "command": "verify",
        "input": args.input,
        "set": sorted(set(members)),
        "in_general_position": in_gp,
        "violation": violation,
        "structural_agrees": (structural is True) == in_gp,
    }
    lines = [f"{'OK' if in_gp else 'FAIL'}: set {sorted(set(members))}"]
    if not in_gp:
        lines.append(f"violation = {json.dumps(violation)}")
    _emit(payload, args.json, lines)
    return 0


def cmd_invariants(args) -> int:
    graph = load_graph(args.input)
    budget = _budget(args)
    started = time.monotonic()
    out: dict = {"n": graph.n, "m": graph.m, "diameter": _jsonable(graph.diameter)}
    omega, _ = max_clique(graph)
    alpha, _ = max_independent_set(graph)
    out["omega"] = omega
    out["alpha"] = alpha
    out["simplicial_count"] = len(simplicial_vertices(graph))
    if graph.n >= 1:
        eta, _ = max_clique_union(graph)
        out["eta"] = eta
    labeling = two_coloring(graph)
    if isinstance(labeling, BipartiteLabeling):
        psi, _ = max_induced_biclique(graph, labeling)
        out["psi"] = psi
    if graph.diameter != INFINITE and graph.diameter >= 2:
        bound, _ = distant_edges_bound(graph)
        out["distant_edge_bound"] = bound
    if 2 <= graph.n <= 12 and len(graph.components) == 1:
        h, h_plus = hull_numbers(graph)
        out["hull_number"] = h
        out["upper_hull_number"] = h_plus
    result = formulas.solve(graph, budget)
    out["gp"] = result.value
    out["gp_method"] = result.method
    elapsed = (time.monotonic() - started) * 1000
    print(f"invariants took {elapsed:.1f} ms", file=sys.stderr)
    payload = {
        "schema": SCHEMA,
        "command": "invariants",
        "input": args.input,
        "invariants": out,
    }
    _emit(payload, args.json, [f"{key} = {value}" for key, value in out.items()])
    return 0


def cmd_generate(args) -> int:
    if not args.spec.startswith("gen:"):
        raise GenposError("generate expects a gen:<spec> argument")
    graph = generate(parse_family(args.spec[4:]))
    if args.emit == "g6":
        print(emit_graph6(graph))
    else:
        sys.stdout.write(emit_edge_list(graph))
    return 0


def cmd_crosscheck(args) -> int:
    names = [part.strip() for part in args.families.split(",") if part.strip()]
    trials = None if args.trials == "all" else int(args.trials)
    budget = SearchBudget(max_nodes=args.max_nodes, max_millis=args.max_millis)
    started = time.monotonic()
    summaries = run_campaigns(
        names, args.n_max, trials if trials is not None else 200, args.seed, budget
    )
    elapsed = (time.monotonic() - started) * 1000
    print(f"crosscheck took {elapsed:.1f} ms", file=sys.stderr)
    mismatch_total = sum(len(s.mismatches) for s in summaries)
    payload = {
        "schema": SCHEMA,
        "command": "crosscheck",
        "seed": args.seed,
        "summaries": [s.to_json() for s in summaries],
        "mismatch_total": mismatch_total,
    }
    lines = [
        f"family={s.family} instances={s.instances} agreements={s.agreements} "
        f"mismatches={len(s.mismatches)}"
        for s in summaries
    ]
    for summary in summaries:
        for mismatch in summary.mismatches:
            lines.append(f"MISMATCH {mismatch.family}: {mismatch.description}")
            lines.append(f"  graph6: {mismatch.graph6}")
            lines.append(f"  repro:  {mismatch.repro}")
    _emit(payload, args.json, lines)
    return 1 if mismatch_total else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genpos",
        description="General position numbers of finite simple graphs.",
        epilog=(
            "generator grammar: path:N cycle:N complete:N complete_bipartite:RxS "
            "star:K wheel:K hypercube:K grid:NxM petersen kn_minus:n=N,h=TOKEN "
            "gnk:N,K gn:N hnmst:N,M,S,T double_star:A,B random_tree:N,seed=S "
            "gnp:N,P,seed=S random_bipartite:A,B,P,seed=S; removed-subgraph "
            "tokens: K5 S4 P4 B2x3 W5 C5"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_budget(p):
        p.add_argument("--max-nodes", type=int, default=100_000_000)
        p.add_argument("--max-millis", type=int, default=60_000)

    solve = sub.add_parser("solve", help="compute the gp number of one graph")
    solve.add_argument("--input", required=True)
    solve.add_argument(
        "--method", choices=("auto", "exact", "brute", "formula"), default="auto"
    )
    solve.add_argument("--json", action="store_true")
    add_budget(solve)
    solve.set_defaults(func=cmd_solve)

    verify = sub.add_parser("verify", help="check a vertex set for general position")
    verify.add_argument("--input", required=True)
    verify.add_argument("--set", required=True, help="comma-separated vertex ids")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=cmd_verify)

    invariants = sub.add_parser("invariants", help="table of graph invariants")
    invariants.add_argument("--input", required=True)
    invariants.add_argument("--all", action="store_true", help="accepted for scripts")
    invariants.add_argument("--json", action="store_true")
    add_budget(invariants)
    invariants.set_defaults(func=cmd_invariants)

    gen = sub.add_parser("generate", help="emit a generated family member")
    gen.add_argument("spec", help="gen:<family spec>")
    gen.add_argument("--emit", choices=("g6", "edges"), default="g6")
    gen.set_defaults(func=cmd_generate)

    crosscheck = sub.add_parser(
        "crosscheck", help="formula-versus-oracle campaigns; exit 1 on mismatch"
    )
    crosscheck.add_argument(
        "--families",
        required=True,
        help="comma-separated campaign names: " + ",".join(sorted(CAMPAIGNS)),
    )
    crosscheck.add_argument("--n-max", type=int, default=10)
    crosscheck.add_argument("--trials", default="100", help="count or 'all'")
    crosscheck.add_argument("--seed", type=int, default=1)
    crosscheck.add_argument("--json", action="store_true")
    add_budget(crosscheck)
    crosscheck.set_defaults(func=cmd_crosscheck)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(
            f"budget exceeded: {exc}; best lower bound so far: {exc.lower_bound} "
            "(lower bound only, not the answer)",
            file=sys.stderr,
        )
        return 3
    except (GenposError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
