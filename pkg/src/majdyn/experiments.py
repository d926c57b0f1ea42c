"""Seeded Monte-Carlo experiment harness with CSV output.

Every trial is a pure function of (master_seed, kind, d, n, trial_index):
the per-trial seed is a splitmix64 fold of those values, and the trial
derives independent sub-seeds for graph generation, the initial state, and
any process randomness. Records therefore do not depend on worker count or
execution order, and reruns are byte-identical.

CSV schema (UTF-8, LF, booleans as 0/1, empty fields where inapplicable):

    kind,d,n,trial_index,trial_seed,T_converge,period,oscillating_fraction,
    has_positive_core,reached_internal_cut,swap_steps,k

The trajectory-signature census is written separately as ``signature,count``
rows, one per possible signature, counts summed over trials.
"""

from __future__ import annotations

import itertools
import math
import struct
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .cores import has_positive_core, is_internal_cut
from .dynamics import (
    ConvergenceError,
    _check_state,
    md0_step,
    oscillating_fraction,
    random_spin_state,
    run_swap_process,
    run_swap_with_checkpoints,
    run_to_limit_cycle,
)
from .graphs import Graph, gen_erdos_renyi, gen_random_regular

__all__ = [
    "KINDS",
    "ExperimentConfig",
    "TrialRecord",
    "CSV_COLUMNS",
    "census_signatures",
    "md0_type_census",
    "records_to_csv",
    "census_to_csv",
    "resolve_checkpoints",
    "run_core_after_md",
    "run_experiment",
    "run_md0_core_vs_k",
    "run_oscillation_histogram",
    "run_swap_experiments",
    "summarize",
    "trial_seed",
    "wilson_interval",
    "write_census_csv",
    "write_records_csv",
]

# Stable order: the position of a kind is its seed tag. Do not reorder.
KINDS = (
    "oscillation-regular",
    "oscillation-er",
    "core-after-md",
    "swap-internal-cut",
    "swap-core-vs-steps",
    "md0-core-vs-k",
    "md0-type-census",
)

_REGULAR_KINDS = frozenset(KINDS) - {"oscillation-er"}

_MASK64 = (1 << 64) - 1


def _splitmix64(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def _mix(*parts: int) -> int:
    h = 0
    for p in parts:
        h = _splitmix64(h ^ (int(p) & _MASK64))
    return h


def _float_bits(x: float) -> int:
    return struct.unpack("<Q", struct.pack("<d", float(x)))[0]


def trial_seed(master_seed: int, kind: str, d: float, n: int, trial_index: int) -> int:
    """64-bit per-trial seed: splitmix64 fold of the trial coordinates.

    ``d`` enters via its float64 bit pattern so regular (int) and
    Erdos-Renyi (real) degrees share one stable encoding.
    """
    return _mix(master_seed, KINDS.index(kind), _float_bits(d), n, trial_index)


# sub-stream tags inside one trial
_SUB_GRAPH, _SUB_INIT, _SUB_PROC = 1, 2, 3


@dataclass
class TrialRecord:
    """Outcome of one Monte-Carlo trial (or one checkpoint of one trial)."""

    kind: str
    d: float
    n: int
    trial_index: int
    trial_seed: int
    T_converge: int | None = None
    period: int | None = None
    oscillating_fraction: float | None = None
    has_positive_core: bool | None = None
    reached_internal_cut: bool | None = None
    swap_steps: int | None = None
    k: int | None = None
    census: np.ndarray | None = None
    converged: bool = True


@dataclass
class ExperimentConfig:
    """Sweep description: one experiment kind over (d, n) grid points."""

    kind: str
    d_values: list = field(default_factory=list)
    n_values: list = field(default_factory=list)
    trials: int = 100
    k_values: list | None = None
    checkpoints: list | None = None
    master_seed: int = 0
    max_steps: int | None = None

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown experiment kind {self.kind!r}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if not self.d_values or not self.n_values:
            raise ValueError("d_values and n_values must be nonempty")
        for n in self.n_values:
            if int(n) != n or n < 1:
                raise ValueError(f"vertex counts must be positive integers, got {n}")
        for d in self.d_values:
            for n in self.n_values:
                if self.kind in _REGULAR_KINDS:
                    if int(d) != d:
                        raise ValueError(f"regular kinds need integer d, got {d}")
                    if not 1 <= int(d) < n:
                        raise ValueError(f"need 1 <= d < n, got d={d}, n={n}")
                    if (int(d) * int(n)) % 2 != 0:
                        raise ValueError(f"n*d must be even, got d={d}, n={n}")
                elif not 0 <= d <= n:
                    raise ValueError(f"need 0 <= d <= n, got d={d}, n={n}")
        if self.kind == "swap-core-vs-steps":
            if not self.checkpoints:
                raise ValueError("swap-core-vs-steps needs checkpoints")
            for n in self.n_values:
                resolve_checkpoints(self.checkpoints, int(n))
        if self.kind == "md0-core-vs-k":
            if not self.k_values:
                raise ValueError("md0-core-vs-k needs k_values")
            ks = list(self.k_values)
            if any(int(k) != k or k < 0 for k in ks):
                raise ValueError("k_values must be nonnegative integers")
            if ks != sorted(ks):
                raise ValueError("k_values must be ascending")
        if self.kind == "md0-type-census" and self.k_values:
            if len(self.k_values) != 1 or self.k_values[0] < 1:
                raise ValueError("md0-type-census takes a single k >= 1")

    @property
    def census_k(self) -> int:
        return int(self.k_values[0]) if self.k_values else 4


def resolve_checkpoints(checkpoints, n: int) -> list[int]:
    """Turn checkpoint entries into step counts for a given n.

    Integers are absolute step counts; non-integer floats in (0, 1) are
    fractions of n. The resolved list must be ascending and nonnegative.
    """
    out = []
    for c in checkpoints:
        if isinstance(c, float) and not c.is_integer():
            if not 0 < c < 1:
                raise ValueError(f"fractional checkpoint must be in (0, 1), got {c}")
            out.append(int(round(c * n)))
        else:
            if c < 0:
                raise ValueError(f"checkpoint must be nonnegative, got {c}")
            out.append(int(c))
    if out != sorted(out):
        raise ValueError(f"checkpoints must be ascending, got {out}")
    return out


# ---------------------------------------------------------------------------
# single trials
# ---------------------------------------------------------------------------


def _trial_graph(kind: str, d: float, n: int, tseed: int) -> Graph:
    if kind == "oscillation-er":
        return gen_erdos_renyi(n, d, _mix(tseed, _SUB_GRAPH))
    return gen_random_regular(n, int(d), _mix(tseed, _SUB_GRAPH))


def _trial_initial(n: int, tseed: int) -> np.ndarray:
    return random_spin_state(n, np.random.default_rng(_mix(tseed, _SUB_INIT)))


def run_trial(kind: str, d: float, n: int, trial_index: int, tseed: int,
              k_values: tuple[int, ...] | None = None,
              checkpoints: tuple | None = None,
              max_steps: int | None = None) -> list[TrialRecord]:
    """Execute one trial; returns one record, or one per checkpoint/k."""
    graph = _trial_graph(kind, d, n, tseed)
    x0 = _trial_initial(n, tseed)
    base = dict(kind=kind, d=d, n=n, trial_index=trial_index, trial_seed=tseed)

    if kind in ("oscillation-regular", "oscillation-er", "core-after-md"):
        try:
            cycle = run_to_limit_cycle(graph, x0, "md", max_steps)
        except ConvergenceError:
            return [TrialRecord(**base, converged=False)]
        rec = TrialRecord(**base, T_converge=cycle.T, period=cycle.period,
                          oscillating_fraction=oscillating_fraction(cycle))
        if kind == "core-after-md":
            # the two cycle states provably agree on core existence
            rec.has_positive_core = has_positive_core(graph, cycle.state_a)
        return [rec]

    if kind == "swap-internal-cut":
        rng = np.random.default_rng(_mix(tseed, _SUB_PROC))
        final, steps = run_swap_process(graph, x0, rng)
        return [TrialRecord(**base, swap_steps=steps,
                            reached_internal_cut=is_internal_cut(graph, final))]

    if kind == "swap-core-vs-steps":
        if not checkpoints:
            raise ValueError("swap-core-vs-steps needs checkpoints")
        cps = resolve_checkpoints(checkpoints, n)
        rng = np.random.default_rng(_mix(tseed, _SUB_PROC))
        snapshots, _, total = run_swap_with_checkpoints(graph, x0, rng, cps)
        return [TrialRecord(**base, k=cp, swap_steps=min(cp, total),
                            has_positive_core=has_positive_core(graph, snap))
                for cp, snap in zip(cps, snapshots)]

    if kind == "md0-core-vs-k":
        if not k_values:
            raise ValueError("md0-core-vs-k needs k_values")
        records = []
        x = x0
        done = 0
        for k in k_values:
            for _ in range(k - done):
                x = md0_step(graph, x)
            done = k
            probed = np.where(x == 0, np.int8(-1), x)
            records.append(TrialRecord(**base, k=k,
                                       has_positive_core=has_positive_core(graph, probed)))
        return records

    if kind == "md0-type-census":
        k = k_values[0] if k_values else 4
        return [TrialRecord(**base, k=k, census=md0_type_census(graph, x0, k))]

    raise ValueError(f"unknown experiment kind {kind!r}")


def md0_type_census(graph: Graph, initial, k: int = 4) -> np.ndarray:
    """Count vertices by their (x^0, ..., x^k) trajectory signature.

    Returns a length 3**(k+1) vector indexed base-3 with the earliest step
    as the most significant digit and digit values x+1; counts sum to n.
    """
    x = _check_state(graph, initial, allow_zero=False)
    index = np.zeros(graph.n, dtype=np.int64)
    for t in range(k + 1):
        index = index * 3 + (x.astype(np.int64) + 1)
        if t < k:
            x = md0_step(graph, x)
    return np.bincount(index, minlength=3 ** (k + 1))


def census_signatures(k: int = 4) -> list[str]:
    """All 3**(k+1) signature strings in the census index order."""
    return ["".join(p) for p in itertools.product("-0+", repeat=k + 1)]


# ---------------------------------------------------------------------------
# experiment runner
# ---------------------------------------------------------------------------


def _run_task(task: tuple) -> list[TrialRecord]:
    kind, d, n, trial_index, tseed, k_values, checkpoints, max_steps = task
    return run_trial(kind, d, n, trial_index, tseed, k_values, checkpoints, max_steps)


def run_experiment(config: ExperimentConfig, workers: int = 1) -> list[TrialRecord]:
    """Run every trial of a sweep; record order is (d, n, trial_index).

    Trials are independent and individually seeded, so the result is the
    same for any ``workers`` value.
    """
    config.validate()
    k_values = tuple(int(k) for k in config.k_values) if config.k_values else None
    checkpoints = tuple(config.checkpoints) if config.checkpoints else None
    tasks = []
    for d in config.d_values:
        for n in config.n_values:
            n = int(n)
            for i in range(config.trials):
                tseed = trial_seed(config.master_seed, config.kind, d, n, i)
                tasks.append((config.kind, d, n, i, tseed, k_values, checkpoints,
                              config.max_steps))
    if workers is not None and workers > 1:
        chunk = max(1, len(tasks) // (8 * workers))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_run_task, tasks, chunksize=chunk))
    else:
        batches = [_run_task(t) for t in tasks]
    return [rec for batch in batches for rec in batch]


def _expect_kind(config: ExperimentConfig, allowed: tuple[str, ...]) -> None:
    if config.kind not in allowed:
        raise ValueError(f"expected kind in {allowed}, got {config.kind!r}")


def run_oscillation_histogram(config: ExperimentConfig, workers: int = 1) -> list[TrialRecord]:
    """Oscillating-fraction records for regular or Erdos-Renyi sweeps."""
    _expect_kind(config, ("oscillation-regular", "oscillation-er"))
    return run_experiment(config, workers)


def run_core_after_md(config: ExperimentConfig, workers: int = 1) -> list[TrialRecord]:
    """Positive-core-at-the-limit-cycle records."""
    _expect_kind(config, ("core-after-md",))
    return run_experiment(config, workers)


def run_swap_experiments(config: ExperimentConfig, workers: int = 1) -> list[TrialRecord]:
    """Swap-process fixed-point or per-checkpoint core records."""
    _expect_kind(config, ("swap-internal-cut", "swap-core-vs-steps"))
    return run_experiment(config, workers)


def run_md0_core_vs_k(config: ExperimentConfig, workers: int = 1) -> list[TrialRecord]:
    """Positive-core records after each configured number of MD0 steps."""
    _expect_kind(config, ("md0-core-vs-k",))
    return run_experiment(config, workers)


# ---------------------------------------------------------------------------
# CSV output and summaries
# ---------------------------------------------------------------------------

CSV_COLUMNS = ("kind", "d", "n", "trial_index", "trial_seed", "T_converge",
               "period", "oscillating_fraction", "has_positive_core",
               "reached_internal_cut", "swap_steps", "k")


def _fmt_d(d: float) -> str:
    return str(int(d)) if float(d).is_integer() else repr(float(d))


def _fmt_field(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, float):
        return f"{value:.8f}"
    return str(value)


def records_to_csv(records) -> str:
    """Render records in the fixed column schema (LF line endings)."""
    lines = [",".join(CSV_COLUMNS)]
    for r in records:
        lines.append(",".join([
            r.kind, _fmt_d(r.d), str(r.n), str(r.trial_index), str(r.trial_seed),
            _fmt_field(r.T_converge), _fmt_field(r.period),
            _fmt_field(r.oscillating_fraction), _fmt_field(r.has_positive_core),
            _fmt_field(r.reached_internal_cut), _fmt_field(r.swap_steps),
            _fmt_field(r.k),
        ]))
    return "\n".join(lines) + "\n"


def write_records_csv(records, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(records_to_csv(records))


def census_to_csv(records) -> str:
    """Aggregate census counts over records into ``signature,count`` rows."""
    censuses = [r.census for r in records if r.census is not None]
    if not censuses:
        raise ValueError("no census data in records")
    total = np.sum(censuses, axis=0)
    k = round(math.log(total.size, 3)) - 1
    if 3 ** (k + 1) != total.size:
        raise ValueError(f"census length {total.size} is not a power of 3")
    lines = ["signature,count"]
    lines.extend(f"{sig},{int(count)}"
                 for sig, count in zip(census_signatures(k), total))
    return "\n".join(lines) + "\n"


def write_census_csv(records, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(census_to_csv(records))


def wilson_interval(successes: int, trials: int, z: float = 1.96) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    p = successes / trials
    denom = 1.0 + z * z / trials
    center = (p + z * z / (2 * trials)) / denom
    half = z * math.sqrt(p * (1.0 - p) / trials + z * z / (4 * trials * trials)) / denom
    return max(0.0, center - half), min(1.0, center + half)


def summarize(records) -> list[str]:
    """One line per (kind, d, n, k) group: probability with a Wilson 95%
    interval for boolean outcomes, mean and std for oscillating fractions."""
    groups: dict[tuple, list[TrialRecord]] = {}
    for r in records:
        groups.setdefault((r.kind, r.d, r.n, r.k), []).append(r)
    lines = []
    for (kind, d, n, k), recs in groups.items():
        label = f"{kind} d={_fmt_d(d)} n={n}" + (f" k={k}" if k is not None else "")
        flagged = sum(1 for r in recs if not r.converged)
        suffix = f" [{flagged} non-converged]" if flagged else ""
        bools = [r.has_positive_core for r in recs if r.has_positive_core is not None]
        if not bools:
            bools = [r.reached_internal_cut for r in recs
                     if r.reached_internal_cut is not None]
        if bools:
            hits = sum(bool(b) for b in bools)
            lo, hi = wilson_interval(hits, len(bools))
            lines.append(f"{label} trials={len(recs)} p={hits / len(bools):.4f} "
                         f"wilson95=[{lo:.4f},{hi:.4f}]{suffix}")
            continue
        fracs = [r.oscillating_fraction for r in recs
                 if r.oscillating_fraction is not None]
        if fracs:
            mean = sum(fracs) / len(fracs)
            var = sum((f - mean) ** 2 for f in fracs) / max(1, len(fracs) - 1)
            lines.append(f"{label} trials={len(recs)} mean_osc_fraction={mean:.4f} "
                         f"std={math.sqrt(var):.4f}{suffix}")
        else:
            lines.append(f"{label} trials={len(recs)}{suffix}")
    return lines
