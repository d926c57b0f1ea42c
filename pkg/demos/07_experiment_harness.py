"""The Monte-Carlo harness end to end: configs, CSV, and determinism.

Every trial seed is a pure hash of (master_seed, kind, d, n, trial_index),
so sweeps are reproducible byte for byte, no matter how many workers run
them or in what order trials finish. The same sweeps are available from
the command line via `majdyn experiment`.
"""

import tempfile
from pathlib import Path

from majdyn import ExperimentConfig, run_experiment, summarize, write_records_csv
from majdyn.experiments import records_to_csv

cfg = ExperimentConfig(
    kind="oscillation-regular",
    d_values=[3, 4],
    n_values=[1000],
    trials=30,
    master_seed=2024,
)

records = run_experiment(cfg, workers=2)
print(f"{len(records)} records; first record:")
r = records[0]
print(f"  d={r.d} n={r.n} trial={r.trial_index} seed={r.trial_seed}")
print(f"  T={r.T_converge} period={r.period} fraction={r.oscillating_fraction:.4f}\n")

for line in summarize(records):
    print(line)

# Byte-identical reruns, independent of the worker pool size.
serial = records_to_csv(run_experiment(cfg, workers=1))
pooled = records_to_csv(run_experiment(cfg, workers=2))
print("\nserial == pooled CSV bytes:", serial == pooled)

with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "oscillation.csv"
    write_records_csv(records, out)
    head = out.read_text().splitlines()[:3]
    print("CSV head:")
    for line in head:
        print(" ", line)
