"""Shared test utilities: exhaustive enumerations and independent oracles."""

from __future__ import annotations

import itertools

import numpy as np

from majdyn import Graph, cycle_graph, named_graph, path_graph, regular_degree


def all_pm1_states(n: int):
    """Every ±1 configuration on n vertices (2**n of them)."""
    for bits in itertools.product((-1, 1), repeat=n):
        yield np.array(bits, dtype=np.int8)


def adjacency_sets(graph: Graph) -> list[set]:
    return [set(graph.neighbors_of(v).tolist()) for v in range(graph.n)]


def brute_force_core(graph: Graph, part_mask: np.ndarray) -> np.ndarray:
    """Union of all subsets of the part whose members keep >= d/2 neighbors
    inside the subset; the family is closed under union, so this is the
    unique maximal core. Exponential: only for small parts."""
    d = regular_degree(graph)
    members = np.flatnonzero(part_mask)
    assert members.size <= 16, "brute force oracle is exponential"
    neighbor_sets = adjacency_sets(graph)
    best: set = set()
    for r in range(1, members.size + 1):
        for subset in itertools.combinations(members.tolist(), r):
            inside = set(subset)
            if all(2 * len(neighbor_sets[v] & inside) >= d for v in inside):
                best |= inside
    return np.array(sorted(best), dtype=np.int64)


def leaf_parity_holds(graph: Graph, oscillating: np.ndarray) -> bool:
    """Every oscillating vertex with exactly one oscillating neighbor must
    have odd degree in the underlying graph."""
    osc_neighbor_count = graph.adjacency @ oscillating.astype(np.int32)
    leaves = oscillating & (osc_neighbor_count == 1)
    return bool(np.all(graph.degrees[leaves] % 2 == 1))


def exhaustive_graph_suite() -> list[tuple[str, Graph]]:
    """The small named graphs used for exhaustive state enumeration."""
    suite = [("K4", named_graph("K4")), ("K33", named_graph("K33"))]
    suite.extend((f"cycle({k})", cycle_graph(k)) for k in range(3, 9))
    suite.extend((f"path({k})", path_graph(k)) for k in range(2, 9))
    return suite
