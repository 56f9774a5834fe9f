"""Command-line frontend: solve positions, compute value sequences, run the
verification suites, analyze random graphs, and serve the play UI."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .engine import WeightedGraph, blowup, weighted_follower, weighted_moves, weighted_normalize, weighted_outcome
from .families import make_family, parse_weighted_spec
from .graphs import GraphError, path_graph
from .octal import (
    SGSequence,
    extend_sequence,
    load_sequence,
    octal6_sequence,
    save_sequence,
    zeros,
)
from .solver import SolverCapError, outcome, path_sg, sg_value, winning_moves
from .theory import SUITES, verify
from .randgraphs import (
    crossings,
    exact_histogram,
    histogram_polynomial,
    monte_carlo,
    p0_bound,
    reference_w2_n4,
    w1,
    w2,
)

import numpy as np


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, SolverCapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grim", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="outcome / value / winning moves of a position")
    p_solve.add_argument("spec", help="family spec, g6:..., or wg:G6;w1,w2,...")
    p_solve.add_argument("--sg", action="store_true", help="print the game value")
    p_solve.add_argument("--moves", action="store_true", help="print winning moves")
    p_solve.add_argument("--cap", type=int, default=16, help="per-component solver cap")
    p_solve.add_argument("--json", action="store_true")
    p_solve.set_defaults(func=cmd_solve)

    p_seq = sub.add_parser("seq", help="value sequence for heaps (octal6) or paths")
    p_seq.add_argument("--family", choices=["octal6", "path"], default="octal6")
    p_seq.add_argument("--max", type=int, required=True, dest="max_n")
    p_seq.add_argument("--zeros", action="store_true", help="print zero positions")
    p_seq.add_argument("--out", help="write/extend a binary sequence file")
    p_seq.add_argument("--json", action="store_true")
    p_seq.set_defaults(func=cmd_seq)

    p_verify = sub.add_parser("verify", help="run a theorem verification suite")
    p_verify.add_argument("--suite", required=True, choices=sorted(SUITES))
    p_verify.add_argument("--max-vertices", type=int, required=True, dest="bound")
    p_verify.add_argument("--workers", type=int, default=0)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_rand = sub.add_parser("random", help="win probabilities on G(n, p)")
    p_rand.add_argument("--n", type=int, required=True)
    mode = p_rand.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--mc", action="store_true")
    p_rand.add_argument("--p", type=float, default=0.5)
    p_rand.add_argument("--trials", type=int, default=10_000)
    p_rand.add_argument("--seed", type=int, default=1)
    p_rand.add_argument("--crossings", action="store_true")
    p_rand.add_argument("--json", action="store_true")
    p_rand.set_defaults(func=cmd_random)

    p_serve = sub.add_parser("serve", help="run the HTTP game service")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--static", help="directory of UI assets to serve at /")
    p_serve.set_defaults(func=cmd_serve)

    return parser


def cmd_solve(args) -> int:
    if args.spec.startswith("wg:"):
        return _solve_weighted(args)
    g = make_family(args.spec)
    result: dict = {"spec": args.spec, "outcome": outcome(g, cap=args.cap)}
    if args.sg or args.json:
        result["sg"] = sg_value(g, cap=args.cap)
    if args.moves or args.json:
        result["winning_moves"] = winning_moves(g, cap=args.cap)
    if args.json:
        print(json.dumps(result))
        return 0
    print(f"{args.spec}: {result['outcome']}")
    if args.sg:
        print(f"sg = {result['sg']}")
    if args.moves:
        print(f"winning moves = {result['winning_moves']}")
    return 0


def _solve_weighted(args) -> int:
    g, weights = parse_weighted_spec(args.spec)
    wg = weighted_normalize(WeightedGraph(g, weights))
    out = weighted_outcome(wg)
    result: dict = {"spec": args.spec, "outcome": out}
    if args.sg or args.json:
        result["sg"] = sg_value(blowup(wg), cap=max(args.cap, 16))
    if args.moves or args.json:
        result["winning_moves"] = [
            v
            for v in weighted_moves(wg)
            if weighted_outcome(weighted_follower(wg, v)) == "P"
        ]
    if args.json:
        print(json.dumps(result))
        return 0
    print(f"{args.spec}: {result['outcome']} (weighted)")
    if args.sg:
        print(f"sg of blowup = {result['sg']}")
    if args.moves:
        print(f"winning selections = {result['winning_moves']}")
    return 0


def _progress(n: int) -> None:
    print(f"... {n} values", file=sys.stderr)


def cmd_seq(args) -> int:
    if args.max_n < 1:
        raise ValueError("--max must be >= 1")
    if args.family == "octal6":
        seq = None
        if args.out and os.path.exists(args.out):
            seq = load_sequence(args.out)
        if seq is None:
            seq = octal6_sequence(args.max_n, progress=_progress)
        elif seq.max_n < args.max_n:
            seq = extend_sequence(seq, args.max_n, progress=_progress)
    else:
        values = np.zeros(args.max_n + 1, dtype=np.uint16)
        for n in range(1, args.max_n + 1):
            values[n] = path_sg(n)
            if n % 10_000 == 0:
                _progress(n)
        seq = SGSequence(values)
    if args.out:
        save_sequence(seq, args.out)
    zs = zeros(seq) if args.zeros else None
    if args.json:
        payload = {"family": args.family, "max_n": args.max_n}
        if zs is not None:
            payload["zeros"] = zs
        else:
            payload["values"] = [int(v) for v in seq.values[1 : args.max_n + 1]]
        print(json.dumps(payload))
        return 0
    if zs is not None:
        print(f"zeros up to {args.max_n}: {zs}")
    else:
        head = ", ".join(str(seq[n]) for n in range(1, min(args.max_n, 20) + 1))
        print(f"values 1..{min(args.max_n, 20)}: {head}")
    if args.out:
        print(f"wrote {args.out}")
    return 0


def cmd_verify(args) -> int:
    report = verify(args.suite, args.bound, workers=args.workers)
    if args.json:
        print(
            json.dumps(
                {
                    "suite": report.suite,
                    "bound": report.bound,
                    "checked": report.checked,
                    "passed": report.passed,
                    "failed": report.failed,
                    "counterexamples": report.counterexamples,
                }
            )
        )
    else:
        print(report.summary())
        for ce in report.counterexamples:
            print(f"  counterexample: {ce}")
    return 0 if report.ok else 1


def cmd_random(args) -> int:
    payload: dict = {"n": args.n}
    if args.mc:
        est = monte_carlo(args.n, args.p, args.trials, args.seed)
        payload["mc"] = {
            "p": est.p,
            "trials": est.trials,
            "seed": est.seed,
            "p2_fraction": est.p2_fraction,
            "stderr": est.stderr,
        }
    else:
        hist = exact_histogram(args.n)
        payload["histogram"] = {
            "p_counts": hist.p_counts,
            "total_counts": hist.total_counts,
        }
        payload["w2_polynomial"] = histogram_polynomial(hist)
        payload["w2_at_half"] = w2(hist, 0.5)
        payload["w1_at_half"] = w1(hist, 0.5)
        if args.n == 4:
            payload["reference_w2"] = "3*p^2(1-p)^4 + 16*p^3(1-p)^3 + (1-p)^5"
            payload["reference_w2_at_half"] = reference_w2_n4(0.5)
            payload["note"] = (
                "the reference closed form mis-states the empty-graph exponent "
                "and omits the three labeled 4-cycles; the derived polynomial "
                "is the enumerated truth"
            )
        if args.crossings:
            payload["crossings"] = crossings(hist).roots
        if args.n % 2 == 1 and args.n >= 3:
            payload["p0_bound"] = p0_bound(args.n)
    if args.crossings and args.mc:
        raise ValueError("--crossings needs --exact")
    if args.json:
        print(json.dumps(payload))
        return 0
    for key, value in payload.items():
        print(f"{key}: {value}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


if __name__ == "__main__":
    sys.exit(main())
