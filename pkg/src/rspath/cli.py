"""Command line: ``rspath {solve,oracle,gen,bench}``.

Exit codes: 0 completed, 2 usage error, 3 budget exceeded, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time

from . import generators as gen
from .graph import InstanceFormatError, emit_instance, parse_instance, read_instance
from .oracle import DEFAULT_STATE_BUDGET, exists_r_simple_path
from .params import DEFAULT_LDT_EPS
from .solver import SCHEMA, EvalBudgetExceeded, solve

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_IO = 0, 2, 3, 4


class UsageError(Exception):
    pass


def int_range(text: str) -> list[int]:
    """'12..20' (inclusive), '3', or '1,4,7'."""
    out = []
    for part in text.split(","):
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _load(path: str):
    if path == "-":
        return parse_instance(sys.stdin.buffer.read())
    return read_instance(path)


def _write_bytes(data: bytes, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(out, "wb") as fh:
            fh.write(data)


def _dump_json(obj: dict, out: str | None) -> None:
    _write_bytes((json.dumps(obj, sort_keys=True) + "\n").encode(), out)


def cmd_solve(args) -> int:
    inst = _load(args.input)
    t0 = time.perf_counter()
    verdict = solve(
        inst,
        args.delta,
        args.seed,
        ldt_eps=args.ldt_eps,
        force_p=args.force_p,
        force_l=args.force_l,
        workers=args.workers,
    )
    out = verdict.to_dict()
    out["timing"] = {"millis": round((time.perf_counter() - t0) * 1000, 3)}
    _dump_json(out, args.out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    inst = _load(args.input)
    t0 = time.perf_counter()
    res = exists_r_simple_path(inst, args.budget)
    out = {
        "schema": SCHEMA,
        "answer": res.answer,
        "witness": list(res.witness) if res.witness else None,
        "expanded": res.expanded,
        "timing": {"millis": round((time.perf_counter() - t0) * 1000, 3)},
    }
    _dump_json(out, args.out)
    if res.answer == "unknown":
        print("oracle: state budget exceeded, answer unknown", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def _generate(args):
    fam = args.family
    if fam == "ham-gadget":
        if not args.base:
            raise UsageError("ham-gadget needs --base")
        return gen.ham_gadget(_load(args.base).graph, args.r)
    if fam == "blow-up":
        if not args.input:
            raise UsageError("blow-up needs --input")
        return gen.blow_up(_load(args.input), args.s)
    if args.n is None:
        raise UsageError(f"{fam} needs --n")
    if fam == "gap-tree":
        g = gen.gap_tree(args.r, args.n)
        k = args.k if args.k is not None else args.n + 1
        return gen.Instance(g, args.r, k)
    if fam == "random":
        if args.k is None:
            raise UsageError("random needs --k")
        return gen.random_instance(args.n, args.density, args.r, args.k, args.seed)
    raise UsageError(f"unknown family {fam}")


def cmd_gen(args) -> int:
    _write_bytes(emit_instance(_generate(args)), args.out)
    return EXIT_OK


def cmd_bench(args) -> int:
    rows = []
    for k in int_range(args.k):
        for seed in int_range(args.seeds):
            if args.family == "random":
                inst = gen.random_instance(args.n, args.density, args.r, k, seed)
                name = f"random-n{args.n}-d{args.density}-r{args.r}-k{k}-s{seed}"
            elif args.family == "gap-tree":
                inst = gen.Instance(gen.gap_tree(args.r, args.n), args.r, k)
                name = f"gap-tree-n{args.n}-r{args.r}-k{k}"
            else:
                raise UsageError(f"bench family {args.family} not supported")
            t0 = time.perf_counter()
            v = solve(inst, args.delta, seed, ldt_eps=args.ldt_eps, workers=args.workers)
            millis = (time.perf_counter() - t0) * 1000
            rows.append([name, seed, v.answer, v.evaluations, f"{millis:.3f}"])
            print(f"{name}: {v.answer} evals={v.evaluations} {millis:.0f} ms", file=sys.stderr)
    fh = sys.stdout if args.out in (None, "-") else open(args.out, "w", newline="")
    try:
        w = csv.writer(fh)
        w.writerow(["instance", "seed", "answer", "evals", "millis"])
        w.writerows(rows)
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rspath", description="r-simple k-path: randomized solver and exact oracle")
    sub = ap.add_subparsers(dest="command", required=True)

    def solver_flags(p):
        p.add_argument("--delta", type=float, default=0.01, help="target error for NO answers")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--ldt-eps", type=float, default=DEFAULT_LDT_EPS, help="per-call tester miss budget")
        p.add_argument("--workers", type=int, default=os.cpu_count() or 1)

    s = sub.add_parser("solve", help="run the randomized algebraic solver")
    s.add_argument("--input", required=True, help="instance file, '-' for stdin")
    s.add_argument("--out")
    s.add_argument("--force-p", type=int)
    s.add_argument("--force-l", type=int)
    solver_flags(s)
    s.set_defaults(func=cmd_solve)

    o = sub.add_parser("oracle", help="exact exhaustive search")
    o.add_argument("--input", required=True)
    o.add_argument("--out")
    o.add_argument("--budget", type=int, default=DEFAULT_STATE_BUDGET, help="max expanded DFS states")
    o.set_defaults(func=cmd_oracle)

    g = sub.add_parser("gen", help="generate an instance")
    g.add_argument("family", choices=["ham-gadget", "blow-up", "gap-tree", "random"])
    g.add_argument("--base", help="base graph file for ham-gadget")
    g.add_argument("--input", help="instance to blow up (its r must be divisible by --s)")
    g.add_argument("--s", type=int, default=2)
    g.add_argument("--r", type=int, default=2)
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--density", type=float, default=0.3)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="solve a family over a grid of k and seeds, write CSV")
    b.add_argument("--family", choices=["random", "gap-tree"], default="random")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--r", type=int, default=2)
    b.add_argument("--k", required=True, help="e.g. 12..20")
    b.add_argument("--seeds", default="0")
    b.add_argument("--density", type=float, default=0.3)
    b.add_argument("--out")
    solver_flags(b)
    b.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except EvalBudgetExceeded as exc:
        print(f"rspath: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (OSError, InstanceFormatError) as exc:
        print(f"rspath: {exc}", file=sys.stderr)
        return EXIT_IO
    except (UsageError, ValueError) as exc:
        print(f"rspath: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
