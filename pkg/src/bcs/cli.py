"""Command-line front end: solve, oracle, gen, reduce, verify, bench.

Exit codes: 0 ok, 1 bad input, 2 solution failed validation, 3 oracle or
table capacity exceeded.  All reports are JSON on stdout; bench emits CSV.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from . import circular, fpt, generators, interval, oracle, permutation, reductions
from .graph import BicoloredGraph, validate_solution
from .models import (
    CircularArcModel,
    IntervalModel,
    PermutationModel,
    PointSetModel,
    compile_model,
    parse_model,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INVALID = 2
EXIT_CAPACITY = 3

_CLASS_MODEL = {
    "interval": IntervalModel,
    "circular-arc": CircularArcModel,
    "permutation": PermutationModel,
}


class CliError(Exception):
    def __init__(self, message, code=EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _load_instance(path, klass):
    obj = _load_json(path)
    if klass == "general":
        try:
            return None, BicoloredGraph.from_json(obj)
        except (ValueError, KeyError, TypeError) as exc:
            raise CliError(f"bad graph file: {exc}") from exc
    try:
        model = parse_model(obj)
    except (ValueError, KeyError, TypeError) as exc:
        raise CliError(f"bad model file: {exc}") from exc
    want = _CLASS_MODEL[klass]
    if not isinstance(model, want):
        raise CliError(
            f"model type {type(model).__name__} does not match class {klass}"
        )
    return model, compile_model(model)


def _summary(klass, g):
    return {
        "class": klass,
        "n": g.n,
        "edges": len(g.edges),
        "reds": g.red_total,
        "blues": g.blue_total,
    }


def cmd_solve(args) -> int:
    model, g = _load_instance(args.input, args.klass)
    t0 = time.perf_counter()
    seed = args.seed
    if args.klass == "interval":
        sol = interval.bcs_interval(model, g)
    elif args.klass == "circular-arc":
        sol = circular.bcs_circular_arc(model)
    elif args.klass == "permutation":
        sol = permutation.bcs_permutation(model, g)
    else:
        if args.algorithm == "oracle":
            try:
                sol = oracle.bcs_oracle(g)
            except oracle.CapacityError as exc:
                raise CliError(str(exc), EXIT_CAPACITY) from exc
        else:
            try:
                if args.k is not None:
                    yes, sol_opt = fpt.k_bcs(
                        g, args.k, delta=args.delta,
                        exhaustive=args.exhaustive, seed=seed,
                    )
                    sol = sol_opt if yes else fpt.empty_solution("fpt")
                else:
                    sol = fpt.max_bcs_fpt(
                        g, delta=args.delta, exhaustive=args.exhaustive, seed=seed
                    )
            except oracle.CapacityError as exc:
                raise CliError(str(exc), EXIT_CAPACITY) from exc
    millis = 1000.0 * (time.perf_counter() - t0)
    ok = validate_solution(g, sol)
    report = {
        "instance": _summary(args.klass, g),
        "algorithm": sol.algorithm_tag,
        "size": sol.size,
        "solution": sol.to_json(),
        "millis": round(millis, 3),
        "verified": ok,
    }
    if seed is not None:
        report["seed"] = seed
    print(json.dumps(report, sort_keys=True))
    return EXIT_OK if ok else EXIT_INVALID


def cmd_oracle(args) -> int:
    _, g = _load_instance(args.input, args.klass)
    t0 = time.perf_counter()
    try:
        sol = oracle.bcs_oracle(g)
    except oracle.CapacityError as exc:
        raise CliError(str(exc), EXIT_CAPACITY) from exc
    millis = 1000.0 * (time.perf_counter() - t0)
    ok = validate_solution(g, sol)
    report = {
        "instance": _summary(args.klass, g),
        "algorithm": "oracle",
        "size": sol.size,
        "solution": sol.to_json(),
        "millis": round(millis, 3),
        "verified": ok,
    }
    print(json.dumps(report, sort_keys=True))
    return EXIT_OK if ok else EXIT_INVALID


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    if args.klass == "general":
        obj = generators.random_bicolored_graph(args.n, rng).to_json()
    else:
        obj = generators.random_model(args.klass, args.n, rng).to_json()
    text = json.dumps(obj, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_reduce(args) -> int:
    if args.source == "rst":
        obj = _load_json(args.points)
        pts = obj["points"] if isinstance(obj, dict) else obj
        points = [(int(p[0]), int(p[1])) for p in pts]
        builder = {
            "disk": reductions.reduce_rst_to_unit_disk,
            "square": reductions.reduce_rst_to_unit_square,
            "grid": reductions.reduce_rst_to_complete_grid,
        }[args.shape]
        try:
            out = builder(points, args.length)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        payload = out.instance.to_json()
    else:
        obj = _load_json(args.graph)
        try:
            g = BicoloredGraph.from_json(obj)
            out = reductions.reduce_domset_to_outer_string(g, args.k)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        payload = out.instance.to_json()
    payload["target_size"] = out.target_size
    payload["case_tag"] = out.case_tag
    text = json.dumps(payload, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _verify_one(klass, n, seed):
    rng = random.Random(seed)
    if klass == "general":
        g = generators.random_bicolored_graph(n, rng)
        sol = fpt.max_bcs_fpt(g, exhaustive=True)
    else:
        model = generators.random_model(klass, n, rng)
        g = compile_model(model)
        if klass == "interval":
            sol = interval.bcs_interval(model, g)
        elif klass == "circular-arc":
            sol = circular.bcs_circular_arc(model)
        else:
            sol = permutation.bcs_permutation(model, g)
    ref = oracle.bcs_oracle(g)
    return {
        "seed": seed,
        "solver": sol.size,
        "oracle": ref.size,
        "valid": validate_solution(g, sol),
        "match": sol.size == ref.size and validate_solution(g, sol),
    }


def cmd_verify(args) -> int:
    if args.n > 14:
        raise CliError("verify is oracle-backed; use --n of at most 14")
    seeds = [args.seed + i for i in range(args.trials)]
    workers = args.workers or int(os.environ.get("BCS_WORKERS", "1"))
    if workers > 1:
        import concurrent.futures

        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(_verify_one, [args.klass] * len(seeds),
                         [args.n] * len(seeds), seeds)
            )
    else:
        results = [_verify_one(args.klass, args.n, s) for s in seeds]
    matched = sum(1 for r in results if r["match"])
    report = {
        "class": args.klass,
        "n": args.n,
        "trials": args.trials,
        "matched": matched,
        "mismatches": [r for r in results if not r["match"]],
    }
    print(json.dumps(report, sort_keys=True))
    print(f"{matched}/{args.trials} match", file=sys.stderr)
    return EXIT_OK if matched == args.trials else EXIT_INVALID


def cmd_bench(args) -> int:
    sizes = [int(x) for x in args.n.split(",")]
    rows = ["n,class,algorithm,millis,size"]
    for n in sizes:
        rng = random.Random(args.seed)
        if args.klass == "general":
            g = generators.random_bicolored_graph(n, rng)
            model = None
        else:
            model = generators.random_model(args.klass, n, rng)
            g = compile_model(model)
        t0 = time.perf_counter()
        if args.klass == "interval":
            sol = interval.bcs_interval(model, g)
        elif args.klass == "circular-arc":
            sol = circular.bcs_circular_arc(model)
        elif args.klass == "permutation":
            sol = permutation.bcs_permutation(model, g)
        else:
            sol = fpt.max_bcs_fpt(g, exhaustive=True)
        millis = 1000.0 * (time.perf_counter() - t0)
        rows.append(
            f"{n},{args.klass},{sol.algorithm_tag},{millis:.3f},{sol.size}"
        )
    text = "\n".join(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bcs", description="balanced connected subgraph toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    classes = ("interval", "circular-arc", "permutation", "general")

    p = sub.add_parser("solve", help="run the class solver on an instance file")
    p.add_argument("--class", dest="klass", choices=classes, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--algorithm", choices=("fpt", "oracle"), default="fpt")
    p.add_argument("--k", type=int, default=None, help="decision size (general)")
    p.add_argument("--delta", type=float, default=0.01)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="exact brute-force solve")
    p.add_argument("--class", dest="klass", choices=classes, required=True)
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="emit a random instance")
    p.add_argument("--class", dest="klass", choices=classes, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", help="build a hardness-reduction instance")
    src = p.add_subparsers(dest="source", required=True)
    rst = src.add_parser("rst")
    rst.add_argument("--points", required=True)
    rst.add_argument("--L", dest="length", type=int, required=True)
    rst.add_argument("--shape", choices=("disk", "square", "grid"), default="disk")
    rst.add_argument("--out", default=None)
    rst.set_defaults(func=cmd_reduce)
    dom = src.add_parser("domset")
    dom.add_argument("--graph", required=True)
    dom.add_argument("--k", type=int, required=True)
    dom.add_argument("--out", default=None)
    dom.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="solver vs oracle equivalence sweep")
    p.add_argument("--class", dest="klass", choices=classes, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="timed sweep, CSV output")
    p.add_argument("--class", dest="klass", choices=classes, required=True)
    p.add_argument("--n", required=True, help="comma-separated sizes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except oracle.CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
