"""Core search inside a part by peeling, internal-cut checks, and the
three-state-dynamics core probe.

A core of a d-regular graph is a vertex subset in which every member keeps
at least d/2 of its neighbors inside the subset (so at least ceil(d/2) for
odd d). Peeling the unsatisfied members one by one yields the unique
maximal core contained in a part, independent of removal order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dynamics import _check_state, md0_step
from .graphs import Graph

__all__ = [
    "CoreResult",
    "has_positive_core",
    "is_internal_cut",
    "md0_core_probe",
    "peel_to_core",
    "regular_degree",
]


@dataclass(frozen=True)
class CoreResult:
    """Surviving core vertices (ascending) and the removal sequence."""

    core_vertices: np.ndarray
    peel_order: np.ndarray


def regular_degree(graph: Graph) -> int:
    """Common degree of a regular graph; raises if degrees differ."""
    degrees = graph.degrees
    d = int(degrees[0])
    if not np.all(degrees == d):
        raise ValueError("graph is not regular")
    return d


def _part_mask(n: int, part) -> np.ndarray:
    part = np.asarray(part)
    if part.dtype == bool:
        if part.shape != (n,):
            raise ValueError(f"part mask must have shape ({n},), got {part.shape}")
        return part.copy()
    mask = np.zeros(n, dtype=bool)
    if part.size:
        if (part < 0).any() or (part >= n).any():
            raise ValueError("part vertex index out of range")
        mask[part] = True
    return mask


def peel_to_core(graph: Graph, part, rng: np.random.Generator | None = None) -> CoreResult:
    """Peel ``part`` down to its maximal core (d-regular graphs only).

    Repeatedly removes any member with strictly more neighbors outside the
    current part than inside (inside-degree < d/2, in exact integer
    arithmetic). The survivors do not depend on the removal order; ``rng``
    randomizes that order, which only permutes ``peel_order``.
    """
    d = regular_degree(graph)
    in_part = _part_mask(graph.n, part)
    inside = (graph.adjacency @ in_part.astype(np.int32)).astype(np.int64)
    frontier = list(np.flatnonzero(in_part & (2 * inside < d)))
    removed: list[int] = []
    while frontier:
        idx = int(rng.integers(len(frontier))) if rng is not None else len(frontier) - 1
        v = frontier.pop(idx)
        if not in_part[v] or 2 * inside[v] >= d:
            continue  # stale queue entry
        in_part[v] = False
        removed.append(int(v))
        for u in graph.neighbors_of(v):
            if in_part[u]:
                inside[u] -= 1
                if 2 * inside[u] < d:
                    frontier.append(u)
    return CoreResult(core_vertices=np.flatnonzero(in_part).astype(np.int32),
                      peel_order=np.array(removed, dtype=np.int32))


def has_positive_core(graph: Graph, state) -> bool:
    """True iff the +1 part of ``state`` contains a nonempty core."""
    x = _check_state(graph, state, allow_zero=False)
    return peel_to_core(graph, x == 1).core_vertices.size > 0


def is_internal_cut(graph: Graph, state) -> bool:
    """True iff both parts are nonempty and no vertex is unsatisfied."""
    x = _check_state(graph, state, allow_zero=False)
    if not ((x == 1).any() and (x == -1).any()):
        return False
    return bool(np.all(x * (graph.adjacency @ x) >= 0))


def md0_core_probe(graph: Graph, initial, k: int) -> bool:
    """Run k three-state steps from a ±1 state, demote neutrals to -1, and
    test the positive part for a core."""
    if k < 0:
        raise ValueError(f"step count must be nonnegative, got {k}")
    x = _check_state(graph, initial, allow_zero=False)
    for _ in range(k):
        x = md0_step(graph, x)
    return has_positive_core(graph, np.where(x == 0, np.int8(-1), x))
