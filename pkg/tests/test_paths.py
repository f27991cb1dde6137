import random

import pytest

from diverse_opt.baseline import all_shortest_paths, brute_force_diverse_paths
from diverse_opt.dag import build_shortest_path_dag, orient_undirected
from diverse_opt.diversity import diversity_pairwise
from diverse_opt.errors import InfeasibleError, NegativeWeightError
from diverse_opt.graph import DirectedGraph, UndirectedGraph, generate_grid
from diverse_opt.paths import diverse_shortest_paths, expand_dag

from gen import random_digraph, random_undirected

DIAMOND = DirectedGraph.from_arcs(4, [(0, 1, 1, 1), (1, 3, 1, 1), (0, 2, 1, 1), (2, 3, 1, 1)])


class TestExpand:
    def test_diamond_k2(self):
        ex = expand_dag(build_shortest_path_dag(DIAMOND, 0, 3), 2)
        net = ex.network
        assert net.m == 8
        assert net.costs.tolist() == [-1, 1] * 4
        assert set(net.caps.tolist()) == {1}
        assert net.copy.tolist() == [1, 2] * 4
        assert [ex.project(a) for a in range(8)] == [0, 0, 1, 1, 2, 2, 3, 3]

    def test_k1_costs_vanish(self):
        ex = expand_dag(build_shortest_path_dag(DIAMOND, 0, 3), 1)
        assert set(ex.network.costs.tolist()) == {0}

    def test_grid_k3(self):
        g, s, t = generate_grid(3)
        ex = expand_dag(orient_undirected(g, s, t), 3)
        assert ex.network.m == 36
        assert ex.network.costs.tolist() == [-2, 0, 2] * 12

    def test_k0(self):
        with pytest.raises(ValueError):
            expand_dag(build_shortest_path_dag(DIAMOND, 0, 3), 0)


class TestDiversePaths:
    def test_diamond_k2(self, backend):
        r = diverse_shortest_paths(DIAMOND, 0, 3, 2, backend=backend)
        assert r.diversity == 4
        assert sorted(r.paths) == [(0, 1, 3), (0, 2, 3)]

    def test_diamond_k3_repeats_a_route(self, backend):
        r = diverse_shortest_paths(DIAMOND, 0, 3, 3, backend=backend)
        assert r.diversity == 8
        assert len(set(r.paths)) == 2 and len(r.paths) == 3

    def test_k1(self, backend):
        r = diverse_shortest_paths(DIAMOND, 0, 3, 1, backend=backend)
        assert r.diversity == 0 and len(r.paths) == 1

    def test_grid_40_k10(self, backend):
        g, s, t = generate_grid(40)
        r = diverse_shortest_paths(g, s, t, 10, backend=backend)
        assert r.diversity == r.packing_weight == 6876
        assert r.length == 78

    def test_grid_2_k2(self, backend):
        g, s, t = generate_grid(2)
        assert diverse_shortest_paths(g, s, t, 2, backend=backend).diversity == 4

    def test_grid_closed_form_k10(self):
        for p in range(40, 141, 20):
            g, s, t = generate_grid(p)
            assert diverse_shortest_paths(g, s, t, 10).diversity == 6876 + 180 * (p - 40)

    def test_monotone_in_k(self):
        g, s, t = generate_grid(6)
        vals = [diverse_shortest_paths(g, s, t, k).diversity for k in range(1, 12)]
        assert all(a <= b for a, b in zip(vals, vals[1:]))

    def test_unreachable(self, backend):
        g = DirectedGraph.from_arcs(3, [(0, 1, 1, 1)])
        with pytest.raises(InfeasibleError):
            diverse_shortest_paths(g, 0, 2, 2, backend=backend)

    def test_weights_matter(self, backend):
        # two routes; the heavy one should be split off from the rest
        g = UndirectedGraph.from_edges(4, [(0, 1, 1, 9), (1, 3, 1, 9), (0, 2, 1, 1),
                                           (2, 3, 1, 1)])
        r = diverse_shortest_paths(g, 0, 3, 4, backend=backend)
        assert r.diversity == 2 * 9 * 2 * 2 + 2 * 1 * 2 * 2

    def test_negative_weight_rejected(self):
        with pytest.raises(NegativeWeightError):
            DirectedGraph.from_arcs(2, [(0, 1, 1, -1)])

    def test_timings_recorded(self):
        r = diverse_shortest_paths(DIAMOND, 0, 3, 2)
        assert set(r.timings) == {"prune", "flow", "decode"}


def test_paths_are_shortest_and_simple(backend):
    rng = random.Random(21)
    done = 0
    while done < 100:
        g, s, t = random_digraph(rng) if rng.random() < 0.5 else random_undirected(rng)
        k = rng.randint(1, 4)
        try:
            r = diverse_shortest_paths(g, s, t, k, backend=backend)
        except InfeasibleError:
            continue
        done += 1
        shortest = {p.edges for p in all_shortest_paths(g, s, t)}
        assert len(r.paths) == k
        for path, edges in zip(r.paths, r.solutions.sets):
            assert path[0] == s and path[-1] == t
            assert len(set(path)) == len(path)
            assert sum(int(g.lengths[e]) for e in edges) == r.length
        # edge sets are stored sorted, so compare as sets
        assert {tuple(sorted(e)) for e in r.solutions.sets} <= {tuple(sorted(e)) for e in shortest}
        assert r.packing_weight == diversity_pairwise(r.solutions.sets, g.weights.tolist())


def test_matches_brute_force_small(backend):
    rng = random.Random(23)
    done = 0
    while done < 80:
        g, s, t = random_digraph(rng)
        k = rng.randint(1, 3)
        try:
            expect = brute_force_diverse_paths(g, s, t, k, max_paths=12)
        except (InfeasibleError, ValueError):
            continue
        done += 1
        assert diverse_shortest_paths(g, s, t, k, backend=backend).diversity == expect.diversity
