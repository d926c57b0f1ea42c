import numpy as np
import pytest

from majdyn import (
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
from helpers import adjacency_sets


def assert_valid_simple(graph: Graph):
    assert graph.offsets[0] == 0
    assert graph.offsets[-1] == len(graph.neighbors)
    assert int(graph.degrees.sum()) == 2 * graph.m
    for v in range(graph.n):
        block = graph.neighbors_of(v)
        assert np.all(np.diff(block) > 0), "neighbors must be strictly ascending"
        assert v not in block, "self-loop"
    sets = adjacency_sets(graph)
    for v in range(graph.n):
        for u in sets[v]:
            assert v in sets[u], "adjacency must be symmetric"


class TestFromEdges:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph.from_edges(3, [(0, 0)])

    def test_rejects_duplicate_either_orientation(self):
        with pytest.raises(ValueError, match="duplicate"):
            Graph.from_edges(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            Graph.from_edges(3, [(0, 3)])

    def test_empty_graph(self):
        g = Graph.from_edges(4, [])
        assert g.m == 0
        assert np.all(g.degrees == 0)

    def test_edges_canonical_order(self):
        g = Graph.from_edges(4, [(3, 2), (1, 0), (0, 2)])
        assert g.edges.tolist() == [[0, 1], [0, 2], [2, 3]]


class TestRandomRegular:
    def test_k4_forced_for_any_seed(self):
        # the only simple 3-regular graph on 4 vertices
        for seed in (0, 1, 12345):
            g = gen_random_regular(4, 3, seed)
            assert g.edges.tolist() == [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]

    def test_odd_total_degree_rejected(self):
        with pytest.raises(ValueError, match="odd"):
            gen_random_regular(5, 3, 0)

    def test_degree_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            gen_random_regular(4, 4, 0)
        with pytest.raises(ValueError):
            gen_random_regular(4, 0, 0)

    def test_large_graph_degree_scan(self):
        # full degree scan plus adjacency-set check at n = 10^4, d = 5
        g = gen_random_regular(10_000, 5, seed=1)
        assert bool(np.all(g.degrees == 5))
        assert_valid_simple(g)

    def test_seed_determinism(self):
        a = gen_random_regular(200, 3, seed=7)
        b = gen_random_regular(200, 3, seed=7)
        assert np.array_equal(a.offsets, b.offsets)
        assert np.array_equal(a.neighbors, b.neighbors)
        c = gen_random_regular(200, 3, seed=8)
        assert not np.array_equal(a.neighbors, c.neighbors)

    @pytest.mark.parametrize("n,d", [(10, 3), (21, 4), (50, 7), (99, 6)])
    def test_valid_simple_regular(self, n, d):
        g = gen_random_regular(n, d, seed=3)
        assert bool(np.all(g.degrees == d))
        assert_valid_simple(g)


class TestErdosRenyi:
    def test_zero_degree_is_empty(self):
        assert gen_erdos_renyi(100, 0, seed=4).m == 0

    def test_full_degree_is_complete(self):
        g = gen_erdos_renyi(100, 100, seed=4)
        assert g.m == 100 * 99 // 2

    def test_mean_edge_count(self):
        # E[m] = C(1000, 2) * 3/1000 = 1498.5, binomial 3 sigma ~ 116
        counts = [gen_erdos_renyi(1000, 3, seed=s).m for s in range(100)]
        assert abs(np.mean(counts) - 1498.5) < 120

    def test_seed_determinism(self):
        a = gen_erdos_renyi(500, 4, seed=11)
        b = gen_erdos_renyi(500, 4, seed=11)
        assert np.array_equal(a.neighbors, b.neighbors)

    def test_rejects_bad_degree(self):
        with pytest.raises(ValueError):
            gen_erdos_renyi(10, -0.5, seed=0)
        with pytest.raises(ValueError):
            gen_erdos_renyi(10, 11, seed=0)

    def test_valid_simple(self):
        assert_valid_simple(gen_erdos_renyi(300, 5, seed=2))


class TestNamedGraphs:
    def test_k4(self):
        g = named_graph("K4")
        assert (g.n, g.m) == (4, 6)
        assert bool(np.all(g.degrees == 3))

    def test_k33(self):
        g = named_graph("K33")
        assert (g.n, g.m) == (6, 9)
        assert bool(np.all(g.degrees == 3))
        # bipartite across {0,1,2} | {3,4,5}
        for u, v in g.edges.tolist():
            assert (u < 3) != (v < 3)

    def test_cycle(self):
        g = named_graph("cycle(5)")
        assert (g.n, g.m) == (5, 5)
        assert bool(np.all(g.degrees == 2))
        assert g.has_edge(0, 4)

    def test_path_and_complete(self):
        assert named_graph("path(4)").m == 3
        assert named_graph("complete(5)").m == 10

    @pytest.mark.parametrize("bad", ["petersen", "cycle", "cycle(2)", "path(0)", "K5"])
    def test_rejects_bad_names(self, bad):
        with pytest.raises(ValueError):
            named_graph(bad)

    def test_builders_match_named(self):
        assert np.array_equal(complete_graph(4).neighbors, named_graph("K4").neighbors)
        assert np.array_equal(complete_bipartite_graph(3, 3).neighbors,
                              named_graph("K33").neighbors)
        assert np.array_equal(cycle_graph(6).neighbors, named_graph("cycle(6)").neighbors)
        assert np.array_equal(path_graph(3).neighbors, named_graph("path(3)").neighbors)


class TestEdgeListIO:
    def test_round_trip_k4(self, tmp_path):
        path = tmp_path / "g.txt"
        k4 = named_graph("K4")
        write_edge_list(k4, path)
        back = read_edge_list(path)
        assert back.n == k4.n and back.m == k4.m
        assert np.array_equal(back.offsets, k4.offsets)
        assert np.array_equal(back.neighbors, k4.neighbors)

    def test_round_trip_random(self, tmp_path):
        path = tmp_path / "g.txt"
        g = gen_random_regular(60, 5, seed=9)
        write_edge_list(g, path)
        back = read_edge_list(path)
        assert np.array_equal(back.neighbors, g.neighbors)

    def test_header_format(self, tmp_path):
        path = tmp_path / "g.txt"
        write_edge_list(named_graph("K4"), path)
        assert path.read_text().splitlines()[0] == "4 6"

    @pytest.mark.parametrize("text,match", [
        ("4 1\n0 0\n", "self-loop"),
        ("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n", "mismatch"),
        ("4 1\n0 1\n2 3\n", "mismatch"),
        ("4 1\n1 0\n", "u < v"),
        ("4 1\n0 4\n", "out of range"),
        ("4 1\n0 1 2\n", "expected"),
        ("4\n", "header"),
        ("x y\n0 1\n", "header"),
        ("4 2\n0 1\n0 1\n", "duplicate"),
        ("", "empty"),
    ])
    def test_malformed_files(self, tmp_path, text, match):
        path = tmp_path / "bad.txt"
        path.write_text(text)
        with pytest.raises(GraphFormatError, match=match):
            read_edge_list(path)
