"""Synchronous majority dynamics, the sequential swap process, and the
red/blue edge view of the dynamics.

States are plain numpy arrays with values in {-1, 0, +1} (int8); plain
majority dynamics and the swap process only accept {-1, +1}. All steppers
are pure functions computed with double buffering: the input state is never
mutated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph

__all__ = [
    "ConvergenceError",
    "EdgeColoring",
    "LimitCycle",
    "STEPPERS",
    "coloring_from_red",
    "coloring_from_state",
    "cut_size",
    "default_step_cap",
    "edge_dynamics_step",
    "format_state",
    "is_unsatisfied",
    "md0_step",
    "md_step",
    "neighbor_sums",
    "oscillating_fraction",
    "random_coloring",
    "random_spin_state",
    "run_swap_process",
    "run_swap_with_checkpoints",
    "run_to_limit_cycle",
    "swap_colors",
    "swap_step",
    "unsatisfied_mask",
]


class ConvergenceError(RuntimeError):
    """Raised when a dynamics run hits its step cap without converging.

    Carries the number of executed steps and the last two states visited.
    """

    def __init__(self, message: str, steps: int, last_states: tuple):
        super().__init__(message)
        self.steps = steps
        self.last_states = last_states


def _check_state(graph: Graph, state, allow_zero: bool) -> np.ndarray:
    x = np.asarray(state)
    if x.shape != (graph.n,):
        raise ValueError(f"state must have shape ({graph.n},), got {x.shape}")
    values = (-1, 0, 1) if allow_zero else (-1, 1)
    if not np.isin(x, values).all():
        raise ValueError(f"state entries must be in {set(values)}")
    return np.ascontiguousarray(x, dtype=np.int8)


def random_spin_state(n: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform iid ±1 configuration on n vertices."""
    return (2 * rng.integers(0, 2, size=n) - 1).astype(np.int8)


def format_state(state) -> str:
    """Render a state as one character per vertex: '-', '0', or '+'."""
    x = np.asarray(state)
    return "".join(np.array(["-", "0", "+"])[x + 1])


def neighbor_sums(graph: Graph, state) -> np.ndarray:
    """Per-vertex sum of neighbor values."""
    return graph.adjacency @ np.asarray(state, dtype=np.int8)


# ---------------------------------------------------------------------------
# steppers
# ---------------------------------------------------------------------------


def md_step(graph: Graph, state) -> np.ndarray:
    """One synchronous majority step: take the strict-majority sign of the
    neighbors, keep the current value on a tie."""
    x = _check_state(graph, state, allow_zero=False)
    s = graph.adjacency @ x
    return np.where(s > 0, 1, np.where(s < 0, -1, x)).astype(np.int8)


def md0_step(graph: Graph, state) -> np.ndarray:
    """One three-state majority step: move one unit toward the sign of the
    neighbor sum, clamped to [-1, +1]."""
    x = _check_state(graph, state, allow_zero=True)
    s = graph.adjacency @ x
    return np.clip(x + np.sign(s), -1, 1).astype(np.int8)


STEPPERS = {"md": md_step, "md0": md0_step}


def is_unsatisfied(graph: Graph, state, v: int) -> bool:
    """True iff a strict majority of v's neighbors hold the opposite value.

    Undefined (raises) when v or any of its neighbors is neutral.
    """
    x = np.asarray(state)
    if x.shape != (graph.n,):
        raise ValueError(f"state must have shape ({graph.n},), got {x.shape}")
    if not (0 <= v < graph.n):
        raise ValueError(f"vertex {v} out of range")
    vals = x[graph.neighbors_of(v)]
    if x[v] == 0 or (vals == 0).any():
        raise ValueError("satisfaction is undefined for neutral vertices")
    opposite = int(np.count_nonzero(vals != x[v]))
    return opposite > vals.size - opposite


def unsatisfied_mask(graph: Graph, state) -> np.ndarray:
    """Boolean mask of unsatisfied vertices for a ±1 state."""
    x = _check_state(graph, state, allow_zero=False)
    return (x * (graph.adjacency @ x)) < 0


def cut_size(graph: Graph, state) -> int:
    """Number of edges whose endpoints hold different values."""
    x = _check_state(graph, state, allow_zero=False)
    u, v = graph.edges.T
    return int(np.count_nonzero(x[u] != x[v]))


# ---------------------------------------------------------------------------
# limit cycles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LimitCycle:
    """A converged pair of states with period 1 or 2.

    ``state_b == md_step(state_a)`` and ``state_a == md_step(state_b)``;
    ``T`` is the number of steps from the initial state to the first state
    of the cycle; ``oscillating[i]`` is True iff vertex i differs between
    the two states.
    """

    state_a: np.ndarray
    state_b: np.ndarray
    period: int
    T: int
    oscillating: np.ndarray


def oscillating_fraction(cycle: LimitCycle) -> float:
    """Fraction of vertices that oscillate in the limit cycle."""
    return float(np.count_nonzero(cycle.oscillating)) / cycle.oscillating.size


def default_step_cap(graph: Graph) -> int:
    return 10 * graph.m + 100


def run_to_limit_cycle(graph: Graph, initial, stepper: str = "md",
                       max_steps: int | None = None,
                       trace: list | None = None) -> LimitCycle:
    """Iterate a stepper until the state repeats with period 1 or 2.

    Compares each new state against the previous one and the one before
    that; plain majority dynamics is guaranteed to converge this way. If
    ``max_steps`` is exceeded, raises :class:`ConvergenceError` carrying
    the last two states. ``trace``, when given, collects every visited
    state (including the initial one).
    """
    try:
        step = STEPPERS[stepper]
    except KeyError:
        raise ValueError(f"unknown stepper {stepper!r}") from None
    prev = _check_state(graph, initial, allow_zero=(stepper == "md0"))
    if max_steps is None:
        max_steps = default_step_cap(graph)
    if trace is not None:
        trace.append(prev.copy())
    prev2: np.ndarray | None = None
    cur = prev
    for t in range(1, max_steps + 1):
        cur = step(graph, prev)
        if trace is not None:
            trace.append(cur.copy())
        if np.array_equal(cur, prev):
            cycle_a, cycle_b, period, entry = cur, cur, 1, t - 1
            break
        if prev2 is not None and np.array_equal(cur, prev2):
            cycle_a, cycle_b, period, entry = cur, prev, 2, t - 2
            break
        prev2, prev = prev, cur
    else:
        raise ConvergenceError(
            f"no limit cycle within {max_steps} steps", max_steps, (prev, cur))
    return LimitCycle(state_a=cycle_a, state_b=cycle_b, period=period,
                      T=entry, oscillating=cycle_a != cycle_b)


# ---------------------------------------------------------------------------
# swap process
# ---------------------------------------------------------------------------


def swap_step(graph: Graph, state, rng: np.random.Generator) -> np.ndarray | None:
    """Flip one uniformly random unsatisfied vertex; None at a fixed point.

    Consumes exactly one draw from ``rng`` per executed step: an index into
    the ascending list of currently unsatisfied vertices.
    """
    x = _check_state(graph, state, allow_zero=False)
    candidates = np.flatnonzero(unsatisfied_mask(graph, x))
    if candidates.size == 0:
        return None
    v = int(candidates[rng.integers(candidates.size)])
    out = x.copy()
    out[v] = -out[v]
    return out


def _run_swap(graph: Graph, initial, rng: np.random.Generator,
              checkpoints: tuple[int, ...],
              trace: list | None = None) -> tuple[np.ndarray, int, list[np.ndarray]]:
    """Swap process engine with incremental bookkeeping.

    Produces exactly the trajectory of repeated :func:`swap_step` calls on
    the same rng stream (same candidate ordering, one draw per step).
    Snapshots the state after each checkpoint step count; checkpoints that
    exceed the convergence time snapshot the fixed point.
    """
    x = _check_state(graph, initial, allow_zero=False).copy()
    s = (graph.adjacency @ x).astype(np.int64)
    unsat = (x * s) < 0
    snapshots: list[np.ndarray] = []
    if trace is not None:
        trace.append(x.copy())
    steps = 0
    ci = 0
    while ci < len(checkpoints) and checkpoints[ci] <= steps:
        snapshots.append(x.copy())
        ci += 1
    # cut size strictly decreases each step, so m + 1 steps would be a bug
    hard_stop = graph.m + 1
    while True:
        candidates = np.flatnonzero(unsat)
        if candidates.size == 0:
            break
        if steps >= hard_stop:
            raise AssertionError("swap process exceeded the cut-size bound")
        v = int(candidates[rng.integers(candidates.size)])
        old = x[v]
        x[v] = -old
        nb = graph.neighbors_of(v)
        s[nb] -= 2 * old
        unsat[nb] = (x[nb] * s[nb]) < 0
        unsat[v] = (x[v] * s[v]) < 0
        steps += 1
        if trace is not None:
            trace.append(x.copy())
        while ci < len(checkpoints) and checkpoints[ci] <= steps:
            snapshots.append(x.copy())
            ci += 1
    while ci < len(checkpoints):
        snapshots.append(x.copy())
        ci += 1
    return x, steps, snapshots


def run_swap_process(graph: Graph, initial, rng: np.random.Generator,
                     trace: list | None = None) -> tuple[np.ndarray, int]:
    """Run the swap process to its fixed point; returns (final, steps).

    Terminates in at most m steps because the cut size strictly decreases
    at every executed step; the final state has no unsatisfied vertex.
    """
    final, steps, _ = _run_swap(graph, initial, rng, (), trace)
    return final, steps


def run_swap_with_checkpoints(graph: Graph, initial, rng: np.random.Generator,
                              checkpoints) -> tuple[list[np.ndarray], np.ndarray, int]:
    """Swap process that snapshots the state at given step counts.

    ``checkpoints`` must be ascending. Returns (snapshots, final, steps);
    a checkpoint past the convergence time snapshots the fixed point.
    """
    cps = tuple(int(c) for c in checkpoints)
    if any(c < 0 for c in cps):
        raise ValueError("checkpoints must be nonnegative")
    if any(b < a for a, b in zip(cps, cps[1:])):
        raise ValueError("checkpoints must be ascending")
    final, steps, snapshots = _run_swap(graph, initial, rng, cps)
    return snapshots, final, steps


# ---------------------------------------------------------------------------
# red/blue edge dynamics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EdgeColoring:
    """Red/blue labels over the canonical edge list plus per-vertex tallies.

    Red marks edges whose endpoints disagree when the coloring is induced
    by a state; ``deg_R + deg_B`` equals the vertex degree.
    """

    red: np.ndarray
    deg_R: np.ndarray
    deg_B: np.ndarray


def coloring_from_red(graph: Graph, red) -> EdgeColoring:
    """Build an EdgeColoring from a per-edge red mask, tallying degrees."""
    red = np.ascontiguousarray(red, dtype=bool)
    if red.shape != (graph.m,):
        raise ValueError(f"red mask must have shape ({graph.m},), got {red.shape}")
    u, v = graph.edges.T
    deg_r = (np.bincount(u[red], minlength=graph.n)
             + np.bincount(v[red], minlength=graph.n))
    return EdgeColoring(red=red, deg_R=deg_r, deg_B=graph.degrees - deg_r)


def coloring_from_state(graph: Graph, state) -> EdgeColoring:
    """Color each edge red iff its endpoints hold different values."""
    x = _check_state(graph, state, allow_zero=False)
    u, v = graph.edges.T
    return coloring_from_red(graph, x[u] != x[v])


def edge_dynamics_step(graph: Graph, coloring: EdgeColoring) -> EdgeColoring:
    """One step of the induced edge dynamics.

    An edge flips its color iff exactly one endpoint has a strict majority
    of red incident edges; this agrees with the vertex dynamics on
    colorings induced by states.
    """
    hot = 2 * coloring.deg_R > graph.degrees
    u, v = graph.edges.T
    flip = hot[u] != hot[v]
    return coloring_from_red(graph, coloring.red ^ flip)


def swap_colors(coloring: EdgeColoring) -> EdgeColoring:
    """Exchange red and blue everywhere."""
    return EdgeColoring(red=~coloring.red, deg_R=coloring.deg_B,
                        deg_B=coloring.deg_R)


def random_coloring(graph: Graph, rng: np.random.Generator) -> EdgeColoring:
    """Uniform random red/blue labels (not necessarily induced by a state)."""
    return coloring_from_red(graph, rng.integers(0, 2, size=graph.m).astype(bool))
