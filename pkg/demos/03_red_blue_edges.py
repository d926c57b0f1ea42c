"""The edge view of majority dynamics: color edges by endpoint agreement.

Color an edge red when its endpoints disagree and blue when they agree.
A vertex is unsatisfied exactly when a strict majority of its incident
edges are red, and one dynamics step flips exactly the edges with one
unsatisfied endpoint. On odd-regular graphs the edge update rule treats
red and blue symmetrically, which is the local symmetry behind the
half-oscillates behavior of odd degrees.
"""

import numpy as np

from majdyn import (
    coloring_from_state,
    edge_dynamics_step,
    gen_random_regular,
    md_step,
    random_coloring,
    random_spin_state,
    swap_colors,
)

rng = np.random.default_rng(3)

# The edge dynamics commutes with the vertex dynamics on induced colorings.
g = gen_random_regular(200, 5, seed=11)
x = random_spin_state(g.n, rng)
via_vertices = coloring_from_state(g, md_step(g, x))
via_edges = edge_dynamics_step(g, coloring_from_state(g, x))
print("edge view agrees with vertex view:",
      bool(np.array_equal(via_vertices.red, via_edges.red)))

# Red/blue symmetry holds for odd degrees and generally breaks for even.
for d in (5, 4):
    g = gen_random_regular(200, d, seed=d)
    mismatches = 0
    for _ in range(50):
        col = random_coloring(g, rng)
        a = edge_dynamics_step(g, swap_colors(col))
        b = swap_colors(edge_dynamics_step(g, col))
        mismatches += not np.array_equal(a.red, b.red)
    print(f"d={d}: color-swap equivariance violated in {mismatches}/50 random colorings")

# deg_R + deg_B always partitions the degree.
col = random_coloring(g, rng)
print("deg_R + deg_B == deg:", bool(np.array_equal(col.deg_R + col.deg_B, g.degrees)))
