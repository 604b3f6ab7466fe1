"""Command-line front end: ``rledtw dist|verify|bench``."""

from __future__ import annotations

import argparse
import math
import random
import sys
import time
from typing import Callable, Optional

from . import dtw
from .generate import random_instance, random_rle
from .oracle import SizeLimitExceeded, block_dtw, naive_dtw
from .rle import (CostError, CostFn, RleError, RleString, SymbolTable, ValueOverflow,
                  parse_cost_csv, parse_raw, parse_rle)

ALGORITHMS: dict[str, Callable] = {
    "fast": dtw.run,
    "block": block_dtw,
    "naive": naive_dtw,
}

# naive rows are skipped in benchmarks beyond this many DP cells
BENCH_NAIVE_CELLS = 4_000_000


class UsageError(Exception):
    pass


def fmt(value) -> str:
    return "inf" if value == math.inf else str(value)


def _integer_symbols(s: RleString) -> RleString:
    try:
        runs = [(int(s.label(sym)), n) for sym, n in s.runs]
    except ValueError:
        raise UsageError("--cost abs needs integer symbols") from None
    if any(sym < 0 for sym, _ in runs):
        raise UsageError("--cost abs needs non-negative symbols")
    return RleString.from_runs(runs)


def load_inputs(args) -> tuple[RleString, RleString, CostFn]:
    table = SymbolTable()
    parse = parse_raw if args.raw else parse_rle
    s = parse(args.s, table)
    t = parse(args.t, table)
    if args.cost_matrix:
        with open(args.cost_matrix, encoding="utf-8") as fh:
            f = parse_cost_csv(fh.read(), table)
        # re-read so both strings carry the final alphabet
        s, t = parse(args.s, table), parse(args.t, table)
        if len(f.matrix) < len(table.ids):
            raise UsageError("cost matrix does not cover every input symbol")
        return s, t, f
    if args.cost == "abs":
        s, t = _integer_symbols(s), _integer_symbols(t)
        top = max(sym for x in (s, t) for sym, _ in x.runs)
        return s, t, CostFn.absolute(top)
    return s, t, CostFn.discrete()


def cmd_dist(args) -> int:
    s, t, f = load_inputs(args)
    print(fmt(ALGORITHMS[args.algo](s, t, f)))
    return 0


def verify(cases: int, seed: int, max_runs: int, max_run_len: int,
           algorithms: Optional[dict[str, Callable]] = None, out=None) -> int:
    """Cross-check every algorithm on random instances; 0 if all agree."""
    algorithms = algorithms or ALGORITHMS
    out = out or sys.stdout
    rng = random.Random(seed)
    for case in range(cases):
        inst = random_instance(rng, max_runs, max_run_len)
        results = {name: algo(inst.s, inst.t, inst.f) for name, algo in algorithms.items()}
        if len(set(results.values())) > 1:
            print(f"MISMATCH case {case}: {inst.describe()}", file=out)
            print(" ".join(f"{k}={fmt(v)}" for k, v in results.items()), file=out)
            return 1
    print(f"OK {cases}", file=out)
    return 0


def cmd_verify(args) -> int:
    return verify(args.cases, args.seed, args.max_runs, args.max_run_len)


def bench_rows(sizes: list[int], algos: list[str], reps: int, seed: int, run_len: int):
    """Yield CSV rows ``n, m, N, M, algo, wall_nanos, result``."""
    for size in sizes:
        rng = random.Random(seed * 1_000_003 + size)
        k = 4
        s = random_rle(rng, k, size, run_len)
        t = random_rle(rng, k, size, run_len)
        f = CostFn.from_matrix([[0 if x == y else 1 + (x + 2 * y) % 9 for y in range(k)]
                                for x in range(k)])
        for algo in algos:
            for _ in range(reps):
                row = [size, size, s.length, t.length, algo]
                if algo == "naive" and s.length * t.length > BENCH_NAIVE_CELLS:
                    yield row + ["", "skipped"]
                    continue
                start = time.perf_counter_ns()
                value = ALGORITHMS[algo](s, t, f)
                yield row + [time.perf_counter_ns() - start, fmt(value)]


def cmd_bench(args) -> int:
    print("n,m,N,M,algo,wall_nanos,result")
    algos = [args.algo] if args.algo else ["fast", "block"]
    for row in bench_rows(args.sizes, algos, args.reps, args.seed, args.max_run_len):
        print(",".join(str(x) for x in row), flush=True)
    return 0


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _sizes(text: str) -> list[int]:
    try:
        sizes = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None
    if not sizes or any(x < 1 for x in sizes):
        raise argparse.ArgumentTypeError("sizes must be positive")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rledtw", description="Exact DTW over run-length encoded strings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="distance between two strings")
    p.add_argument("s", help="first string (sym:count,... or raw with --raw)")
    p.add_argument("t", help="second string")
    p.add_argument("--algo", choices=sorted(ALGORITHMS), default="fast")
    p.add_argument("--cost", choices=["discrete", "abs"], default="discrete")
    p.add_argument("--cost-matrix", metavar="CSV", help="square cost matrix with symbol labels")
    p.add_argument("--raw", action="store_true", help="inputs are plain strings, one symbol per character")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("verify", help="compare all algorithms on random instances")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--cases", type=_non_negative, default=100)
    p.add_argument("--max-runs", type=_positive, default=10)
    p.add_argument("--max-run-len", type=_positive, default=10)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="CSV timings over a size grid")
    p.add_argument("--sizes", type=_sizes, default=[16, 32, 64])
    p.add_argument("--algo", choices=sorted(ALGORITHMS))
    p.add_argument("--reps", type=_positive, default=1)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--max-run-len", type=_positive, default=100)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (RleError, CostError, UsageError, OSError) as exc:
        print(f"rledtw: error: {exc}", file=sys.stderr)
        return 2
    except (SizeLimitExceeded, ValueOverflow) as exc:
        print(f"rledtw: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
