"""Command-line interface.

Subcommands: gen, run, bound, beststatic, opt, fit, verify. All output is
numeric CSV with a header row; summaries go to stderr. Exit codes: 0 success,
1 verification failure, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Iterable, Sequence

from .core import AccessSequence, WeightAssignment
from .bounds import (
    START_ROOT,
    START_SELF,
    best_static_finger_cost,
    weighted_df_bound,
)
from .greedy import greedy_execute
from .harness import ALGORITHMS, fit, run_experiment, experiment_rows
from .opt import opt_satisfied_superset
from .splay import INITIAL_SHAPES
from .verify import SUITES, run_suite
from .workloads import WORKLOAD_KINDS, WorkloadSpec, generate, read_trace, read_weights, write_trace


def _emit(header: str, rows: Iterable[tuple], out: str | None) -> None:
    lines = [header]
    lines.extend(",".join(repr(v) if isinstance(v, float) else str(v) for v in row)
                 for row in rows)
    text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_weights(args, n: int) -> WeightAssignment:
    if getattr(args, "weights", None):
        return read_weights(args.weights)
    return WeightAssignment.equal(n)


def _cmd_gen(args) -> int:
    spec = WorkloadSpec(kind=args.workload, n=args.n, m=args.m, seed=args.seed,
                        d=args.d, theta=args.theta)
    seq = generate(spec)
    if args.out:
        write_trace(seq, args.out)
    else:
        sys.stdout.write(f"{seq.n} {seq.m}\n")
        sys.stdout.writelines(f"{k}\n" for k in seq)
    return 0


def _cmd_run(args) -> int:
    seq = read_trace(args.trace)
    w = _load_weights(args, seq.n)
    cost, bound, fr = run_experiment(seq, args.algo, w, args.start, args.initial)
    if args.points:
        if args.algo != "greedy":
            raise ValueError("--points is only meaningful with --algo greedy")
        points, _ = greedy_execute(seq)
        _emit("time,key", ((p.time, p.key) for p in points), args.points)
    _emit("i,key,cost,bound", experiment_rows(seq, cost, bound), args.out)
    sys.stderr.write(
        f"total_cost={cost.total} total_bound={bound.total!r} ratio={fr.ratio!r} "
        f"slope={fr.slope!r} intercept={fr.intercept!r} r2={fr.r2!r}\n"
    )
    return 0


def _cmd_bound(args) -> int:
    seq = read_trace(args.trace)
    w = _load_weights(args, seq.n)
    report = weighted_df_bound(seq, w, args.start)
    rows = ((i, k, t) for i, (k, t) in enumerate(zip(seq.accesses, report.per_access), start=1))
    _emit("i,key,term", rows, args.out)
    sys.stderr.write(f"total_bound={report.total!r}\n")
    return 0


def _cmd_beststatic(args) -> int:
    seq = read_trace(args.trace)
    tree, total = best_static_finger_cost(seq)
    _emit("n,m,total", [(seq.n, seq.m, total)], args.out)
    if args.tree:
        rows = ((k, tree.parent[k], tree.depth[k]) for k in range(1, tree.n + 1))
        _emit("key,parent,depth", rows, args.tree)
    return 0


def _cmd_opt(args) -> int:
    seq = read_trace(args.trace)
    res = opt_satisfied_superset(seq)
    points, _ = greedy_execute(seq)
    greedy_size = len(points)
    _emit("opt_size,greedy_size,ratio",
          [(res.size, greedy_size, greedy_size / res.size)], args.out)
    return 0


def _read_series(path: str, preferred: tuple[str, ...]) -> list[float]:
    """Pull one numeric column from a headed CSV: the first header field
    matching a preferred name, else the last column."""
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.read().splitlines()
    if len(lines) < 2:
        raise ValueError(f"{path}: expected a CSV header plus at least one data row")
    header = lines[0].split(",")
    idx = len(header) - 1
    for name in preferred:
        if name in header:
            idx = header.index(name)
            break
    return [float(line.split(",")[idx]) for line in lines[1:]]


def _cmd_fit(args) -> int:
    fr = fit(_read_series(args.cost, ("cost",)),
             _read_series(args.bound, ("bound", "term")))
    _emit("ratio,slope,intercept,r2", [(fr.ratio, fr.slope, fr.intercept, fr.r2)], args.out)
    return 0


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, args.seed)
    status = "pass" if report.passed else "FAIL"
    sys.stdout.write(f"{report.suite}: {status} ({report.checked} checks)\n")
    for line in report.details:
        sys.stdout.write(f"  {line}\n")
    return 0 if report.passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fingerbound",
        description="Run BST algorithms on traces and measure them against finger bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a workload trace")
    p.add_argument("--workload", required=True,
                   choices=[k for k in WORKLOAD_KINDS if k != "trace"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--d", type=int, default=None, help="walk: maximum step size")
    p.add_argument("--theta", type=float, default=None, help="zipf_finger: exponent")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("run", help="run an algorithm on a trace")
    p.add_argument("--trace", required=True)
    p.add_argument("--algo", required=True, choices=ALGORITHMS)
    p.add_argument("--initial", default="balanced", choices=INITIAL_SHAPES,
                   help="splay only: initial tree shape")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--weights", default=None, help="weights file (default: equal)")
    g.add_argument("--equal", action="store_true", help="force equal weights")
    p.add_argument("--start", default=START_SELF, choices=(START_SELF, START_ROOT))
    p.add_argument("--points", default=None, help="greedy only: CSV of emitted points")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("bound", help="evaluate the weighted finger bound on a trace")
    p.add_argument("--trace", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--weights", default=None)
    g.add_argument("--equal", action="store_true")
    p.add_argument("--start", default=START_SELF, choices=(START_SELF, START_ROOT))
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("beststatic", help="exhaustively optimal static finger tree")
    p.add_argument("--trace", required=True)
    p.add_argument("--tree", default=None, help="write the optimal tree as CSV")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_beststatic)

    p = sub.add_parser("opt", help="exact optimum vs greedy on a tiny trace")
    p.add_argument("--trace", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_opt)

    p = sub.add_parser("fit", help="fit a cost CSV against a bound CSV")
    p.add_argument("--cost", required=True)
    p.add_argument("--bound", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_fit)

    p = sub.add_parser("verify", help="run a self-check suite")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
