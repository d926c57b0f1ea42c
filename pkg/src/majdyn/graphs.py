"""Compressed sparse-row graphs, random graph generators, and edge-list files.

Vertex indices are 0-based everywhere. All generators are pure functions of
their seed: the same (parameters, seed) pair always yields the same graph,
bit for bit.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np
from scipy import sparse

__all__ = [
    "Graph",
    "GraphFormatError",
    "gen_random_regular",
    "gen_erdos_renyi",
    "named_graph",
    "complete_graph",
    "complete_bipartite_graph",
    "cycle_graph",
    "path_graph",
    "read_edge_list",
    "write_edge_list",
]


class GraphFormatError(ValueError):
    """Raised for malformed edge-list files."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable undirected simple graph in compressed adjacency form.

    ``neighbors[offsets[v]:offsets[v+1]]`` lists the neighbors of ``v`` in
    strictly ascending order; the adjacency is symmetric and free of
    self-loops and duplicate entries by construction. ``m`` counts
    undirected edges, so ``len(neighbors) == 2 * m``.
    """

    n: int
    offsets: np.ndarray
    neighbors: np.ndarray
    m: int

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build a graph from an iterable of (u, v) pairs.

        Rejects out-of-range indices, self-loops, and duplicate edges
        (in either orientation).
        """
        if n < 1:
            raise ValueError(f"vertex count must be positive, got {n}")
        e = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                       dtype=np.int64)
        if e.size == 0:
            e = e.reshape(0, 2)
        if e.ndim != 2 or e.shape[1] != 2:
            raise ValueError("edges must be (u, v) pairs")
        if e.size and ((e < 0).any() or (e >= n).any()):
            raise ValueError("vertex index out of range")
        u = e.min(axis=1)
        v = e.max(axis=1)
        if (u == v).any():
            raise ValueError("self-loops are not allowed")
        key = u * n + v
        order = np.argsort(key, kind="stable")
        if key.size > 1 and (np.diff(key[order]) == 0).any():
            raise ValueError("duplicate edge")
        u, v = u[order], v[order]
        src = np.concatenate([u, v])
        dst = np.concatenate([v, u])
        offsets = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=offsets[1:])
        halfedge_order = np.lexsort((dst, src))
        return cls(
            n=int(n),
            offsets=offsets,
            neighbors=dst[halfedge_order].astype(np.int32),
            m=int(u.size),
        )

    def neighbors_of(self, v: int) -> np.ndarray:
        """Neighbors of ``v`` as an ascending array (a view, do not mutate)."""
        return self.neighbors[self.offsets[v]:self.offsets[v + 1]]

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.diff(self.offsets)

    @cached_property
    def edges(self) -> np.ndarray:
        """Canonical edge list, shape (m, 2) with u < v, lexicographic order."""
        src = np.repeat(np.arange(self.n, dtype=np.int32),
                        np.diff(self.offsets).astype(np.int64))
        keep = src < self.neighbors
        return np.stack([src[keep], self.neighbors[keep]], axis=1)

    @cached_property
    def adjacency(self) -> sparse.csr_matrix:
        """0/1 adjacency matrix; ``adjacency @ x`` gives per-vertex neighbor sums."""
        data = np.ones(len(self.neighbors), dtype=np.int32)
        return sparse.csr_matrix((data, self.neighbors, self.offsets),
                                 shape=(self.n, self.n))

    def has_edge(self, u: int, v: int) -> bool:
        block = self.neighbors_of(u)
        i = np.searchsorted(block, v)
        return bool(i < block.size and block[i] == v)


# ---------------------------------------------------------------------------
# random generators
# ---------------------------------------------------------------------------


def gen_random_regular(n: int, d: int, seed: int) -> Graph:
    """Random d-regular simple graph on ``n`` vertices.

    Stub pairing (configuration model): shuffle the n*d degree stubs and
    pair them consecutively; stubs whose pair would create a loop or a
    repeated edge are pooled and re-paired in further rounds, and the whole
    pairing restarts from scratch when the pool can no longer host a new
    simple edge. This is the standard generator for simulations at small d
    and is asymptotically uniform over simple d-regular graphs.
    Deterministic for fixed (n, d, seed).
    """
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    if d >= n:
        raise ValueError(f"degree {d} must be smaller than vertex count {n}")
    if (n * d) % 2 != 0:
        raise ValueError(f"no {d}-regular graph on {n} vertices: n*d is odd")
    rng = np.random.default_rng(seed)
    while True:
        edge_keys = _pair_stubs(rng, n, d)
        if edge_keys is not None:
            e = np.column_stack([edge_keys // n, edge_keys % n])
            return Graph.from_edges(n, e)


def _pair_stubs(rng: np.random.Generator, n: int, d: int) -> np.ndarray | None:
    """One pairing attempt; returns edge keys u*n+v or None to signal restart."""
    stubs = np.repeat(np.arange(n, dtype=np.int64), d)
    edge_keys = np.empty(0, dtype=np.int64)
    while stubs.size:
        rng.shuffle(stubs)
        a, b = stubs[0::2], stubs[1::2]
        u = np.minimum(a, b)
        v = np.maximum(a, b)
        key = u * n + v
        ok = u != v
        # within this round, keep only the first occurrence of each pair
        order = np.argsort(key, kind="stable")
        sorted_key = key[order]
        first = np.ones(sorted_key.size, dtype=bool)
        first[1:] = sorted_key[1:] != sorted_key[:-1]
        keep_first = np.zeros(key.size, dtype=bool)
        keep_first[order] = first
        ok &= keep_first
        ok &= ~np.isin(key, edge_keys)
        edge_keys = np.concatenate([edge_keys, key[ok]])
        bad = ~ok
        if not bad.any():
            break
        stubs = np.concatenate([a[bad], b[bad]])
        if not ok.any() and not _pool_is_suitable(stubs, edge_keys, n):
            return None
    return edge_keys


def _pool_is_suitable(stubs: np.ndarray, edge_keys: np.ndarray, n: int) -> bool:
    """True if some pair of pooled stubs could still form a new simple edge."""
    present = set(edge_keys.tolist())
    vertices = np.unique(stubs)
    for i, w1 in enumerate(vertices):
        for w2 in vertices[i + 1:]:
            if w1 * n + w2 not in present:
                return True
    return False


def gen_erdos_renyi(n: int, d: float, seed: int) -> Graph:
    """G(n, d/n): every unordered pair is an edge independently w.p. d/n.

    Pairs (w, v) with w < v are visited in order of increasing v and the
    gaps between successive edges are geometric draws (skip sampling), so
    the cost is linear in the number of edges. Deterministic for fixed
    (n, d, seed).
    """
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    if d < 0 or d > n:
        raise ValueError(f"mean degree must satisfy 0 <= d <= n, got {d}")
    p = d / n
    if p >= 1.0:
        return complete_graph(n)
    rng = np.random.default_rng(seed)
    edges: list[tuple[int, int]] = []
    if p > 0.0:
        log_q = math.log(1.0 - p)
        v, w = 1, -1
        while v < n:
            r = rng.random()
            w += 1 + int(math.log(1.0 - r) / log_q)
            while w >= v and v < n:
                w -= v
                v += 1
            if v < n:
                edges.append((w, v))
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# named test graphs
# ---------------------------------------------------------------------------


def complete_graph(k: int) -> Graph:
    """K_k on vertices 0..k-1."""
    if k < 1:
        raise ValueError(f"complete graph needs k >= 1, got {k}")
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    return Graph.from_edges(k, edges)


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """K_{a,b} with left part 0..a-1 and right part a..a+b-1."""
    if a < 1 or b < 1:
        raise ValueError("both parts must be nonempty")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return Graph.from_edges(a + b, edges)


def cycle_graph(k: int) -> Graph:
    """Cycle 0-1-...-(k-1)-0; needs k >= 3 to stay simple."""
    if k < 3:
        raise ValueError(f"cycle needs k >= 3, got {k}")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    """Path 0-1-...-(k-1)."""
    if k < 1:
        raise ValueError(f"path needs k >= 1, got {k}")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


_NAMED_RE = re.compile(r"^(K4|K33|cycle|complete|path)(?:\((\d+)\))?$")


def named_graph(name: str) -> Graph:
    """Build a named test graph: K4, K33, cycle(k), complete(k), or path(k)."""
    match = _NAMED_RE.match(name.strip())
    if match is None:
        raise ValueError(f"unknown graph name: {name!r}")
    base, arg = match.groups()
    if base == "K4":
        if arg is not None:
            raise ValueError("K4 takes no parameter")
        return complete_graph(4)
    if base == "K33":
        if arg is not None:
            raise ValueError("K33 takes no parameter")
        return complete_bipartite_graph(3, 3)
    if arg is None:
        raise ValueError(f"{base} needs a parameter, e.g. {base}(5)")
    k = int(arg)
    if base == "cycle":
        return cycle_graph(k)
    if base == "complete":
        return complete_graph(k)
    return path_graph(k)


# ---------------------------------------------------------------------------
# edge-list files
# ---------------------------------------------------------------------------
#
# Format: first line "n m"; then m lines "u v" with 0 <= u < v < n,
# ASCII decimal, single space, LF line endings.


def write_edge_list(graph: Graph, path) -> None:
    """Write ``graph`` in the plain edge-list format (canonical edge order)."""
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges.tolist())
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii", newline="\n")


def read_edge_list(path) -> Graph:
    """Read a graph written by :func:`write_edge_list`; strict validation."""
    text = Path(path).read_text(encoding="ascii")
    lines = text.split("\n")
    while lines and lines[-1].strip() == "":
        lines.pop()
    if not lines:
        raise GraphFormatError("empty file")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphFormatError(f"malformed header: {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError(f"malformed header: {lines[0]!r}") from None
    if n < 1 or m < 0:
        raise GraphFormatError(f"bad header values: n={n}, m={m}")
    if len(lines) - 1 != m:
        raise GraphFormatError(
            f"edge-count mismatch: header says {m}, found {len(lines) - 1} edge lines")
    edges = np.empty((m, 2), dtype=np.int64)
    for i, line in enumerate(lines[1:], start=2):
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"line {i}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"line {i}: expected 'u v', got {line!r}") from None
        if u == v:
            raise GraphFormatError(f"line {i}: self-loop {u} {v}")
        if u > v:
            raise GraphFormatError(f"line {i}: expected u < v, got {u} {v}")
        if u < 0 or v >= n:
            raise GraphFormatError(f"line {i}: vertex index out of range: {u} {v}")
        edges[i - 2] = (u, v)
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None
