import random

import pytest

from diverse_opt.baseline import all_p_matchings, best_multiset
from diverse_opt.errors import InfeasibleError, NegativeWeightError, ParseError
from diverse_opt.matching import (
    BipartiteGraph,
    bipartite_edge_color,
    build_matching_network,
    diverse_bipartite_matchings,
    is_matching,
    parse_bipartite,
    rebalance_matchings,
)

from gen import degree_bounded_multigraph, max_matching_size, random_bipartite


def complete(n, w=1):
    return BipartiteGraph(n, n, tuple((a, b, w) for a in range(n) for b in range(n)))


SINGLE = BipartiteGraph(1, 1, ((0, 0, 1),))


def ends(pairs):
    return [(("A", a), ("B", b)) for a, b in pairs]


class TestNetwork:
    def test_k22(self):
        net = build_matching_network(complete(2), 2, 2)
        copies = (net.element >= 0)
        assert int(copies.sum()) == 8
        assert set(net.caps[copies].tolist()) == {1}
        aux = ~copies
        assert int(aux.sum()) == 4 and set(net.caps[aux].tolist()) == {2}
        assert set(net.costs[aux].tolist()) == {0}

    def test_single_edge(self):
        net = build_matching_network(SINGLE, 1, 1)
        assert net.m == 3

    def test_k33(self):
        net = build_matching_network(complete(3), 3, 3)
        assert int((net.element >= 0).sum()) == 27

    def test_bad_k(self):
        with pytest.raises(ValueError):
            build_matching_network(SINGLE, 0, 1)


class TestColoring:
    def test_shared_vertex(self):
        assert sorted(bipartite_edge_color(ends([(0, 0), (1, 0)]), 2)) == [1, 2]

    def test_four_cycle_alternates(self):
        e = ends([(0, 0), (0, 1), (1, 1), (1, 0)])
        c = bipartite_edge_color(e, 2)
        assert c[0] == c[2] != c[1] == c[3]

    def test_disjoint_edges_use_every_colour(self):
        c = bipartite_edge_color(ends([(i, i) for i in range(4)]), 2)
        assert set(c) == {1, 2}

    def test_parallel_edges_split(self):
        assert sorted(bipartite_edge_color(ends([(0, 0)] * 3), 3)) == [1, 2, 3]

    def test_degree_too_high(self):
        with pytest.raises(ValueError):
            bipartite_edge_color(ends([(0, 0), (0, 1), (0, 2)]), 2)

    def test_random_proper(self):
        rng = random.Random(4)
        for _ in range(100):
            k, p = rng.randint(1, 4), rng.randint(1, 4)
            e = degree_bounded_multigraph(rng, k, p)
            c = bipartite_edge_color(e, k)
            assert set(c) == set(range(1, k + 1))
            for col in range(1, k + 1):
                assert is_matching([i for i, x in enumerate(c) if x == col], e)


class TestRebalance:
    def test_single_edge_shift(self):
        e = ends([(0, 0), (1, 1), (2, 2), (3, 3)])
        out = rebalance_matchings([[0, 1, 2], [3]], e, 2)
        assert [len(m) for m in out] == [2, 2]
        assert sorted(out[0] + out[1]) == [0, 1, 2, 3]

    def test_balanced_unchanged(self):
        e = ends([(0, 0), (1, 1)])
        assert rebalance_matchings([[0], [1]], e, 1) == [[0], [1]]

    def test_needs_alternating_path(self):
        # the walk from a1 runs a1b1, a0b1, a0b0 and flips three edges
        e = ends([(0, 0), (1, 1), (2, 2), (0, 1)])
        out = rebalance_matchings([[0, 1, 2], [3]], e, 2)
        assert [len(m) for m in out] == [2, 2]
        assert all(is_matching(m, e) for m in out)
        assert sorted(out[0] + out[1]) == [0, 1, 2, 3]
        assert out[1] == [0, 1]

    def test_wrong_total(self):
        with pytest.raises(ValueError):
            rebalance_matchings([[0], []], ends([(0, 0)]), 1)


class TestDiverseMatchings:
    def test_k22(self, backend):
        sol = diverse_bipartite_matchings(complete(2), 2, 2, backend=backend)
        assert sol.diversity == sol.packing_weight == 4

    def test_k33(self, backend):
        sol = diverse_bipartite_matchings(complete(3), 3, 3, backend=backend)
        assert sol.diversity == 18
        assert all(len(s) == 3 for s in sol.sets)

    def test_single_edge(self, backend):
        assert diverse_bipartite_matchings(SINGLE, 1, 1, backend=backend).diversity == 0

    def test_repeats_when_forced(self, backend):
        sol = diverse_bipartite_matchings(SINGLE, 3, 1, backend=backend)
        assert sol.sets == ((0,),) * 3 and sol.diversity == 0

    def test_infeasible_p(self, backend):
        with pytest.raises(InfeasibleError):
            diverse_bipartite_matchings(complete(2), 2, 3, backend=backend)

    def test_matches_brute_force(self, backend):
        rng = random.Random(8)
        done = 0
        while done < 60:
            g = random_bipartite(rng, m_max=7)
            top = max_matching_size(g)
            if top == 0:
                continue
            k, p = rng.randint(1, 3), rng.randint(1, top)
            sol = diverse_bipartite_matchings(g, k, p, backend=backend)
            edges = [(a, b) for a, b, _ in g.edges]
            for s in sol.sets:
                assert len(s) == p
                assert is_matching(s, ends(edges))
            expect = best_multiset(all_p_matchings(edges, p), g.weights, k)
            assert sol.diversity == expect.diversity
            done += 1


class TestParse:
    def test_round_trip(self):
        g = parse_bipartite("c k22\nb 2 2 4\ne 0 0 1\ne 0 1 2\ne 1 0 3\ne 1 1 4\n")
        assert g.n_a == 2 and g.edges[3] == (1, 1, 4)

    @pytest.mark.parametrize("text", ["e 0 0 1", "b 1 1 2\ne 0 0 1", "b 1 1 1\ne 0 2 1",
                                      "b 1 1\n", "b 1 1 1\nx 0 0 1", "b 1 1 1\ne 0 0"])
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_bipartite(text)

    def test_negative_weight(self):
        with pytest.raises(NegativeWeightError):
            parse_bipartite("b 1 1 1\ne 0 0 -1")
