"""Watch majority dynamics settle into a fixed point or a 2-cycle.

Each vertex synchronously adopts the strict-majority sign of its
neighbors (keeping its value on ties). On any finite graph this reaches a
state of period 1 or 2; vertices that differ between the two cycle states
are the oscillating ones.
"""

import numpy as np

from majdyn import (
    cycle_graph,
    format_state,
    gen_random_regular,
    oscillating_fraction,
    random_spin_state,
    run_to_limit_cycle,
)

# A tiny trajectory, printed state by state.
g = cycle_graph(8)
x0 = np.array([1, 1, -1, 1, -1, -1, 1, -1], dtype=np.int8)
trace = []
cycle = run_to_limit_cycle(g, x0, "md", trace=trace)
print("cycle(8) trajectory:")
for t, state in enumerate(trace):
    print(f"  step {t}  {format_state(state)}")
print(f"period={cycle.period} T={cycle.T} "
      f"oscillating={format_state(cycle.oscillating.astype(np.int8))}\n")

# The alternating state on an even cycle flips everyone forever.
alt = np.array([1, -1] * 4, dtype=np.int8)
cycle = run_to_limit_cycle(g, alt, "md")
print(f"alternating start: period={cycle.period}, "
      f"all oscillate: {bool(cycle.oscillating.all())}\n")

# On random regular graphs the oscillating fraction depends on the parity
# of the degree: near 1/2 for odd d, near 0 for even d.
rng = np.random.default_rng(1)
for d in (3, 4, 5, 6):
    g = gen_random_regular(4000, d, seed=d)
    cyc = run_to_limit_cycle(g, random_spin_state(g.n, rng), "md")
    print(f"d={d}: T={cyc.T:3d} period={cyc.period} "
          f"oscillating fraction={oscillating_fraction(cyc):.3f}")
