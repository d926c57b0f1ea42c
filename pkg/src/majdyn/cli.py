"""Command-line front end: graph generation, single runs, and experiments.

Exit status: 0 on success, 1 on validation errors, 2 when a dynamics run
hits its step cap without converging. All randomness flows from --seed.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from .cores import is_internal_cut
from .dynamics import (
    ConvergenceError,
    format_state,
    oscillating_fraction,
    random_spin_state,
    run_swap_process,
    run_to_limit_cycle,
)
from .experiments import (
    KINDS,
    ExperimentConfig,
    _mix,
    _SUB_INIT,
    _SUB_PROC,
    run_experiment,
    summarize,
    write_census_csv,
    write_records_csv,
)
from .graphs import GraphFormatError, gen_erdos_renyi, gen_random_regular, read_edge_list, write_edge_list

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    """argparse, but usage errors exit with status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _num_list(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _checkpoint_list(text: str) -> list:
    """Checkpoints: absolute integers or fractions of n like '0.3n'."""
    out = []
    for tok in text.split(","):
        if tok == "":
            continue
        try:
            if tok.endswith("n"):
                out.append(float(tok[:-1]))
            else:
                out.append(int(tok))
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"expected an integer or a fraction like 0.3n, got {tok!r}")
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="majdyn",
                     description="Majority dynamics and core search simulations.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen_reg = sub.add_parser("gen-regular", help="generate a random d-regular graph",
                             description="Generate a random d-regular simple graph "
                                         "and write it as an edge-list file.")
    gen_reg.add_argument("--n", type=int, required=True, help="vertex count")
    gen_reg.add_argument("--d", type=int, required=True, help="degree (n*d must be even)")
    gen_reg.add_argument("--seed", type=int, required=True, help="generator seed")
    gen_reg.add_argument("--out", required=True, help="output edge-list path")
    gen_reg.set_defaults(func=_cmd_gen_regular)

    gen_er = sub.add_parser("gen-er", help="generate an Erdos-Renyi graph G(n, d/n)",
                            description="Generate G(n, d/n) and write it as an "
                                        "edge-list file.")
    gen_er.add_argument("--n", type=int, required=True, help="vertex count")
    gen_er.add_argument("--d", type=float, required=True, help="mean degree (0 <= d <= n)")
    gen_er.add_argument("--seed", type=int, required=True, help="generator seed")
    gen_er.add_argument("--out", required=True, help="output edge-list path")
    gen_er.set_defaults(func=_cmd_gen_er)

    run = sub.add_parser("run", help="run one dynamics trajectory on a graph file",
                         description="Run md, md0, or the swap process from a seeded "
                                     "random ±1 start and print a one-line summary.")
    run.add_argument("--dynamics", choices=("md", "md0", "swap"), required=True,
                     help="which dynamics to run")
    run.add_argument("--graph", required=True, help="input edge-list path")
    run.add_argument("--seed", type=int, required=True,
                     help="seed for the initial state and any process randomness")
    run.add_argument("--max-steps", type=int, default=None,
                     help="step cap for md/md0 (default 10*m + 100)")
    run.add_argument("--dump-trajectory", default=None, metavar="PATH",
                     help="write every visited state, one 'step <t> <values>' line each")
    run.set_defaults(func=_cmd_run)

    exp = sub.add_parser("experiment", help="run a Monte-Carlo sweep to CSV",
                         description="Run a seeded experiment sweep and write one "
                                     "CSV row per trial (or per checkpoint).")
    exp.add_argument("--kind", choices=KINDS, required=True, help="experiment kind")
    exp.add_argument("--d", type=_num_list, required=True, metavar="LIST",
                     help="comma-separated degrees, e.g. 3,5 (real for oscillation-er)")
    exp.add_argument("--n", type=_int_list, required=True, metavar="LIST",
                     help="comma-separated vertex counts, e.g. 1000,10000")
    exp.add_argument("--trials", type=int, default=100, help="trials per (d, n) point")
    exp.add_argument("--seed", type=int, required=True, help="master seed")
    exp.add_argument("--out", required=True, help="output CSV path")
    exp.add_argument("--k", type=_int_list, default=None, metavar="LIST",
                     help="MD0 step counts for md0-core-vs-k / md0-type-census")
    exp.add_argument("--checkpoints", type=_checkpoint_list, default=None, metavar="LIST",
                     help="swap step checkpoints, integers or fractions like 0.15n,0.45n")
    exp.add_argument("--max-steps", type=int, default=None,
                     help="step cap for md runs (default 10*m + 100)")
    exp.add_argument("--workers", type=int, default=None,
                     help="trial pool size (default: all cores); output is identical for any value")
    exp.set_defaults(func=_cmd_experiment)
    return parser


def _cmd_gen_regular(args) -> int:
    graph = gen_random_regular(args.n, args.d, args.seed)
    write_edge_list(graph, args.out)
    print(f"wrote {args.d}-regular graph n={graph.n} m={graph.m} to {args.out}")
    return 0


def _cmd_gen_er(args) -> int:
    graph = gen_erdos_renyi(args.n, args.d, args.seed)
    write_edge_list(graph, args.out)
    print(f"wrote G({args.n}, {args.d}/{args.n}) graph m={graph.m} to {args.out}")
    return 0


def _write_trajectory(path: str, states) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for t, state in enumerate(states):
            fh.write(f"step {t} {format_state(state)}\n")


def _cmd_run(args) -> int:
    graph = read_edge_list(args.graph)
    x0 = random_spin_state(graph.n, np.random.default_rng(_mix(args.seed, _SUB_INIT)))
    trace: list | None = [] if args.dump_trajectory else None

    if args.dynamics == "swap":
        rng = np.random.default_rng(_mix(args.seed, _SUB_PROC))
        final, steps = run_swap_process(graph, x0, rng, trace)
        if trace is not None:
            _write_trajectory(args.dump_trajectory, trace)
        print(f"dynamics=swap n={graph.n} steps={steps} "
              f"internal_cut={1 if is_internal_cut(graph, final) else 0}")
        return 0

    try:
        cycle = run_to_limit_cycle(graph, x0, args.dynamics, args.max_steps, trace)
    except ConvergenceError as exc:
        if trace is not None:
            _write_trajectory(args.dump_trajectory, trace)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if trace is not None:
        _write_trajectory(args.dump_trajectory, trace)
    print(f"dynamics={args.dynamics} n={graph.n} period={cycle.period} T={cycle.T} "
          f"oscillating_fraction={oscillating_fraction(cycle):.8f}")
    return 0


def _cmd_experiment(args) -> int:
    config = ExperimentConfig(kind=args.kind, d_values=args.d, n_values=args.n,
                              trials=args.trials, k_values=args.k,
                              checkpoints=args.checkpoints, master_seed=args.seed,
                              max_steps=args.max_steps)
    config.validate()
    workers = args.workers if args.workers is not None else (os.cpu_count() or 1)
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    records = run_experiment(config, workers)
    if args.kind == "md0-type-census":
        write_census_csv(records, args.out)
    else:
        write_records_csv(records, args.out)
    for line in summarize(records):
        print(line)
    flagged = sum(1 for r in records if not r.converged)
    print(f"wrote {len(records)} records to {args.out}"
          + (f" ({flagged} non-converged)" if flagged else ""))
    return 2 if flagged else 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, GraphFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
