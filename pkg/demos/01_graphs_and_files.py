"""Build graphs, inspect them, and round-trip edge-list files.

Walks through the three graph sources the library offers: named test
graphs, random d-regular graphs from stub pairing, and Erdos-Renyi
G(n, d/n) from skip sampling. Everything is seed-deterministic.
"""

import tempfile
from pathlib import Path

import numpy as np

from majdyn import (
    gen_erdos_renyi,
    gen_random_regular,
    named_graph,
    read_edge_list,
    write_edge_list,
)

# Named graphs carry a fixed vertex numbering, so tests and demos can rely
# on exact adjacency.
for name in ("K4", "K33", "cycle(5)", "path(4)"):
    g = named_graph(name)
    print(f"{name:9s} n={g.n} m={g.m} degrees={sorted(set(g.degrees.tolist()))}")

# Random regular: every vertex gets exactly d neighbors, no loops or
# repeated edges, and the same seed always returns the same graph.
g = gen_random_regular(n=1000, d=5, seed=7)
print(f"\n5-regular n=1000: m={g.m}, all degrees 5: {bool(np.all(g.degrees == 5))}")
again = gen_random_regular(n=1000, d=5, seed=7)
print("same seed, same neighbors:", bool(np.array_equal(g.neighbors, again.neighbors)))

# Erdos-Renyi G(n, d/n): edge count concentrates around C(n,2) * d/n.
er = gen_erdos_renyi(n=1000, d=3, seed=7)
print(f"\nG(1000, 3/1000): m={er.m} (expected about {999 * 3 / 2:.0f}), "
      f"max degree {int(er.degrees.max())}")

# Edge-list files: "n m" header then one "u v" line per edge, u < v.
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "graph.txt"
    write_edge_list(g, path)
    back = read_edge_list(path)
    print(f"\nround trip through {path.name}: adjacency identical:",
          bool(np.array_equal(back.neighbors, g.neighbors)))
    print("file head:", *path.read_text().splitlines()[:3])
