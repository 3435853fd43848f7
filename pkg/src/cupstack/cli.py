"""Command line front end.

Verbs: gen, solve, decide, minweight, census, chain, certify, verify.
Exit codes follow one convention everywhere: 0 = positive answer,
1 = definitive negative, 2 = unknown (budget exhausted or not decidable by
the chosen method; parameter problems also report 2 with a message).

Graph arguments accept a file in the text format or a compact family name:
pN, cN (cycle), kN (complete), kAxB, qD (hypercube), fN, starN, petersen.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import errors, families
from ._backend import backend_name
from .certificates import (
    certificate_from_json,
    prove_strongly_nonstackable,
    validate_certificate,
)
from .engine import MoveSequence, verify_sequence
from .graphs import Graph, graph_power, read_graph, to_dot, write_graph
from .search import (
    census_stackable_nonhamiltonian,
    decide_stackable,
    find_alternating_chain,
    min_weight,
    weight_table,
)
from .solvers import solve_bipartite_paths, solve_power, solve_via_hamilton

_SHORTHANDS = [
    (re.compile(r"p(\d+)$"), lambda m: families.path(int(m.group(1)))),
    (re.compile(r"c(\d+)$"), lambda m: families.cycle(int(m.group(1)))),
    (re.compile(r"k(\d+)x(\d+)$"), lambda m: families.complete_bipartite(int(m.group(1)), int(m.group(2)))),
    (re.compile(r"k(\d+)$"), lambda m: families.complete(int(m.group(1)))),
    (re.compile(r"q(\d+)$"), lambda m: families.hypercube(int(m.group(1)))),
    (re.compile(r"f(\d+)$"), lambda m: families.f_graph(int(m.group(1)))),
    (re.compile(r"star(\d+)$"), lambda m: families.star(int(m.group(1)))),
    (re.compile(r"petersen$"), lambda m: families.petersen()),
]


def load_graph(name: str) -> Graph:
    """A graph file path or a compact family shorthand."""
    if os.path.exists(name):
        return read_graph(name)
    for pattern, build in _SHORTHANDS:
        m = pattern.match(name)
        if m:
            return build(m)
    raise errors.ParameterError(
        f"{name!r} is neither a readable file nor a known family shorthand"
    )


def _parse_ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip() != ""]


def _parse_partition(text: str) -> list[list[int]]:
    return [_parse_ints(part) for part in text.split(";") if part.strip() != ""]


def _write_or_print(text: str, path: str | None) -> None:
    if path is None or path == "-":
        print(text, end="" if text.endswith("\n") else "\n")
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


def cmd_gen(args) -> int:
    name = args.family
    if name == "cactus":
        base = load_graph(args.base)
        g = families.cactus(base, args.c)
    elif name == "completion":
        g = families.bipartite_completion(load_graph(args.base))
    elif name == "spiky":
        g = families.spiky(args.clique, _parse_ints(args.pendants))
    elif name == "biwheel":
        g = families.biwheel(args.l, _parse_ints(args.removed) if args.removed else ())
    elif name == "grid":
        g = families.grid(*_parse_ints(args.dims))
    elif name == "spider":
        g = families.spider(*_parse_ints(args.legs))
    elif name == "power":
        g = graph_power(load_graph(args.base), args.r)
    elif name == "nonmono_sub":
        g = families.strong_nonmono_pair()[0]
    elif name == "nonmono_host":
        g = families.strong_nonmono_pair()[1]
    else:
        kwargs = {}
        for key in ("n", "k", "s", "a", "b", "c", "d", "l"):
            value = getattr(args, key, None)
            if value is not None:
                kwargs[key] = value
        g = families.build_family(name, **kwargs)
    if args.out is None or args.out == "-":
        sys.stdout.write(f"{g.n} {g.m}\n")
        for u, v in g.edges():
            sys.stdout.write(f"{u} {v}\n")
    else:
        write_graph(g, args.out)
    if args.emit_dot:
        _write_or_print(to_dot(g), args.emit_dot)
    return 0


def _emit_sequence(seq: MoveSequence, out: str | None) -> None:
    text = json.dumps(seq.to_json(), indent=1) + "\n"
    _write_or_print(text, out)


def cmd_solve(args) -> int:
    g = load_graph(args.graph)
    t = args.target
    budget = args.budget
    if args.method == "power":
        if args.r is None or args.partition is None:
            print("solve --method power needs --r and --partition", file=sys.stderr)
            return 2
        result = solve_power(
            g, args.r, _parse_partition(args.partition), t, return_plan=True
        )
        seq, plan = result
        if seq is None:
            print("power construction failed to chunk; no verdict", file=sys.stderr)
            return 2
        if args.plan:
            _write_or_print(json.dumps(plan, indent=1) + "\n", args.plan)
        _emit_sequence(seq, args.out)
        return 0
    if args.method == "bipartite-paths":
        if args.partition is None:
            print("solve --method bipartite-paths needs --partition", file=sys.stderr)
            return 2
        seq, plan = solve_bipartite_paths(
            g, _parse_partition(args.partition), t, return_plan=True
        )
        if seq is None:
            print("path draining failed to chunk; no verdict", file=sys.stderr)
            return 2
        if args.plan:
            _write_or_print(json.dumps(plan, indent=1) + "\n", args.plan)
        _emit_sequence(seq, args.out)
        return 0
    if args.method in ("hamilton", "auto"):
        try:
            seq = solve_via_hamilton(g, t)
            _emit_sequence(seq, args.out)
            return 0
        except errors.NoHamiltonPathError:
            if args.method == "hamilton":
                print("no Hamilton path exists; method cannot conclude", file=sys.stderr)
                return 2
        except errors.BudgetExceededError as exc:
            if args.method == "hamilton":
                print(f"{exc}", file=sys.stderr)
                return 2
    # search (also the fallback for auto)
    from .search import decide_t_stackable

    res = decide_t_stackable(g, t, budget)
    if res.verdict is True:
        _emit_sequence(res.witness, args.out)
        return 0
    if res.verdict is False:
        print(f"not stackable onto {t} (exhausted {res.explored} states)", file=sys.stderr)
        return 1
    print(f"undecided within budget ({res.explored} states)", file=sys.stderr)
    return 2


def cmd_decide(args) -> int:
    g = load_graph(args.graph)
    targets = [args.target] if args.target is not None else None
    report = decide_stackable(
        g,
        budget=args.budget,
        workers=args.workers,
        symmetry=args.symmetry,
        targets=targets,
    )
    verdicts = []
    for r in report.results:
        witness_path = None
        if r.witness is not None and args.witness_dir:
            os.makedirs(args.witness_dir, exist_ok=True)
            witness_path = os.path.join(args.witness_dir, f"witness_{r.target}.json")
            r.witness.save(witness_path)
        status = {True: "stackable", False: "not", None: "unknown"}[r.verdict]
        verdicts.append(
            {"target": r.target, "status": status, "mu": None, "witness": witness_path}
        )
    doc = {
        "graph": args.graph,
        "backend": backend_name(),
        "classification": report.classification,
        "verdicts": verdicts,
    }
    _write_or_print(json.dumps(doc, indent=1) + "\n", args.json)
    if report.classification == "stackable":
        return 0
    if report.classification == "unknown":
        return 2
    return 1


def cmd_minweight(args) -> int:
    g = load_graph(args.graph)
    try:
        if args.all_targets:
            table = weight_table(g, args.budget)
            row = table.csv_row()
            _write_or_print(row + "\n", args.csv)
            if args.json:
                doc = {
                    "graph": args.graph,
                    "verdicts": [
                        {"target": t, "status": "stackable", "mu": mu, "witness": None}
                        for t, mu in enumerate(table.mu)
                    ],
                }
                _write_or_print(json.dumps(doc, indent=1) + "\n", args.json)
        else:
            if args.target is None:
                print("minweight needs --target or --all-targets", file=sys.stderr)
                return 2
            res = min_weight(g, args.target, args.budget)
            print(res.mu)
            if args.out:
                res.witness.save(args.out)
    except errors.NotStackableError as exc:
        print(f"{exc}", file=sys.stderr)
        return 1
    return 0


def cmd_census(args) -> int:
    found = census_stackable_nonhamiltonian(args.max_n, args.budget)
    doc = {}
    for n in sorted(found):
        graphs = found[n]
        print(f"n={n}: {len(graphs)} stackable graphs without a Hamilton path")
        doc[str(n)] = [{"n": g.n, "edges": [list(e) for e in g.edges()]} for g in graphs]
    if args.json:
        _write_or_print(json.dumps(doc, indent=1) + "\n", args.json)
    return 0


def cmd_chain(args) -> int:
    base = load_graph(args.base)
    if args.super in ("completion", "complete-bipartite"):
        sup = families.bipartite_completion(base)
    else:
        sup = load_graph(args.super)
    chain = find_alternating_chain(base, sup, args.length, args.budget)
    if chain is None:
        print("no alternating chain of that length", file=sys.stderr)
        return 1
    doc = {"base": args.base, "length": args.length, "edges": [list(e) for e in chain]}
    _write_or_print(json.dumps(doc, indent=1) + "\n", args.json)
    return 0


def cmd_certify(args) -> int:
    g = load_graph(args.graph)
    if args.check:
        with open(args.check, "r", encoding="ascii") as fh:
            data = json.load(fh)
        certs = data if isinstance(data, list) else [data]
        ok = True
        for obj in certs:
            cert = certificate_from_json(obj)
            valid, reason = validate_certificate(g, cert)
            label = f"target {cert.target}: " + ("valid" if valid else f"INVALID ({reason})")
            print(label)
            ok = ok and valid
        return 0 if ok else 1
    proof = prove_strongly_nonstackable(g)
    if args.target is not None:
        cert = proof.certificates.get(args.target)
        if cert is None:
            print(f"no certificate found for target {args.target}", file=sys.stderr)
            return 2
        _write_or_print(json.dumps(cert.to_json(), indent=1) + "\n", args.out)
        return 0
    payload = [proof.certificates[t].to_json() for t in sorted(proof.certificates)]
    _write_or_print(json.dumps(payload, indent=1) + "\n", args.out)
    if proof.complete:
        print(f"strongly non-stackable: all {proof.n} targets certified", file=sys.stderr)
        return 0
    print(
        f"partial: {len(proof.certificates)}/{proof.n} targets certified, "
        f"missing {list(proof.missing)}",
        file=sys.stderr,
    )
    return 2


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    seq = MoveSequence.load(args.sequence)
    verdict = verify_sequence(g, args.target, seq)
    if verdict:
        print(f"valid: {len(seq)} moves stack everything onto {args.target}")
        return 0
    print(f"invalid at move {verdict.failed_index}: {verdict.reason}", file=sys.stderr)
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cupstack",
        description="Geodesic cup-stacking solver and verifier toolkit.",
    )
    parser.add_argument(
        "--deterministic",
        action="store_true",
        help="force single-worker execution (results are identical either way)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a family graph in the text format")
    p.add_argument("--family", required=True)
    for flag in ("n", "k", "s", "a", "b", "c", "d", "l", "clique", "r"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--dims")
    p.add_argument("--legs")
    p.add_argument("--removed")
    p.add_argument("--pendants")
    p.add_argument("--base")
    p.add_argument("-o", "--out")
    p.add_argument("--emit-dot")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="construct and verify a stacking sequence")
    p.add_argument("graph")
    p.add_argument("--target", type=int, required=True)
    p.add_argument(
        "--method",
        choices=["auto", "hamilton", "bipartite-paths", "power", "search"],
        default="auto",
    )
    p.add_argument("--partition", help="paths as 'v,v,v;v,v' (0-based)")
    p.add_argument("--r", type=int, help="power exponent for --method power")
    p.add_argument("--budget", type=int)
    p.add_argument("-o", "--out")
    p.add_argument("--plan", help="write the decomposition sidecar JSON here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("decide", help="exhaustive per-target stackability report")
    p.add_argument("graph")
    p.add_argument("--target", type=int)
    p.add_argument("--budget", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--symmetry", action="store_true")
    p.add_argument("--witness-dir")
    p.add_argument("--json", help="write the report JSON here (default stdout)")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("minweight", help="minimum total cups moved")
    p.add_argument("graph")
    p.add_argument("--target", type=int)
    p.add_argument("--all-targets", action="store_true")
    p.add_argument("--budget", type=int)
    p.add_argument("--csv", help="write the per-target row here (default stdout)")
    p.add_argument("--json")
    p.add_argument("-o", "--out", help="write the optimal witness here")
    p.set_defaults(func=cmd_minweight)

    p = sub.add_parser("census", help="stackable graphs without Hamilton paths")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("--json")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("chain", help="alternating stackability edge chain")
    p.add_argument("--base", required=True)
    p.add_argument("--super", required=True, help="graph, shorthand, or 'completion'")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("--json")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("certify", help="find or check non-stackability certificates")
    p.add_argument("graph")
    p.add_argument("--target", type=int)
    p.add_argument("--check", help="validate this certificate JSON instead of searching")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="replay a move sequence against the rule")
    p.add_argument("graph")
    p.add_argument("sequence")
    p.add_argument("--target", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.deterministic and getattr(args, "workers", 1) != 1:
        args.workers = 1
    try:
        return args.func(args)
    except errors.BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    except errors.CupstackError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
