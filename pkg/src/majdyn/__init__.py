"""Majority dynamics, the swap process, and core search on sparse graphs.

The library is organized as:

  graphs       -- CSR graphs, random regular / Erdos-Renyi generators,
                  named test graphs, edge-list files
  dynamics     -- md / md0 steppers, limit-cycle detection, the swap
                  process, and the red/blue edge view
  cores        -- core peeling, internal-cut checks, the MD0 core probe
  experiments  -- seeded Monte-Carlo sweeps with CSV output
  cli          -- `majdyn` command-line front end
"""

from .cores import (
    CoreResult,
    has_positive_core,
    is_internal_cut,
    md0_core_probe,
    peel_to_core,
    regular_degree,
)
from .dynamics import (
    ConvergenceError,
    EdgeColoring,
    LimitCycle,
    coloring_from_red,
    coloring_from_state,
    cut_size,
    default_step_cap,
    edge_dynamics_step,
    format_state,
    is_unsatisfied,
    md0_step,
    md_step,
    neighbor_sums,
    oscillating_fraction,
    random_coloring,
    random_spin_state,
    run_swap_process,
    run_swap_with_checkpoints,
    run_to_limit_cycle,
    swap_colors,
    swap_step,
    unsatisfied_mask,
)
from .experiments import (
    KINDS,
    ExperimentConfig,
    TrialRecord,
    census_signatures,
    md0_type_census,
    run_core_after_md,
    run_experiment,
    run_md0_core_vs_k,
    run_oscillation_histogram,
    run_swap_experiments,
    summarize,
    trial_seed,
    wilson_interval,
    write_census_csv,
    write_records_csv,
)
from .graphs import (
    Graph,
    GraphFormatError,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    gen_erdos_renyi,
    gen_random_regular,
    named_graph,
    path_graph,
    read_edge_list,
    write_edge_list,
)

__version__ = "0.1.0"
