import itertools
import random

import numpy as np
import pytest

from diverse_opt.dag import orient_undirected
from diverse_opt.errors import InfeasibleError
from diverse_opt.flow import (
    FlowNetwork,
    check_flow,
    decompose_unit_flow_paths,
    min_cost_flow,
    topological_sort,
)
from diverse_opt.graph import DirectedGraph, generate_grid
from diverse_opt.paths import expand_dag
from diverse_opt.dag import build_shortest_path_dag

DIAMOND = [(0, 1, 1, 1), (1, 3, 1, 1), (0, 2, 1, 1), (2, 3, 1, 1)]


def net(n, arcs, s, t):
    tails, heads, caps, costs = (list(c) for c in zip(*arcs)) if arcs else ([], [], [], [])
    return FlowNetwork.build(n, tails, heads, caps, costs, s, t)


class TestMinCostFlow:
    def test_single_arc(self, backend):
        f = min_cost_flow(net(2, [(0, 1, 3, 5)], 0, 1), 3, backend=backend)
        assert (f.value, f.cost) == (3, 15)

    def test_parallel_arcs(self, backend):
        f = min_cost_flow(net(2, [(0, 1, 1, 2), (0, 1, 1, 1)], 0, 1), 2, backend=backend)
        assert f.cost == 3
        assert f.flow.tolist() == [1, 1]

    def test_cheaper_parallel_arc_first(self, backend):
        f = min_cost_flow(net(2, [(0, 1, 1, 2), (0, 1, 1, 1)], 0, 1), 1, backend=backend)
        assert f.flow.tolist() == [0, 1]

    def test_expanded_diamond(self, backend):
        dag = build_shortest_path_dag(DirectedGraph.from_arcs(4, DIAMOND), 0, 3, backend)
        ex = expand_dag(dag, 2)
        f = min_cost_flow(ex.network, 2, backend=backend)
        assert f.cost == -4

    def test_zero_requirement(self, backend):
        f = min_cost_flow(net(2, [(0, 1, 1, -3)], 0, 1), 0, backend=backend)
        assert (f.value, f.cost) == (0, 0)

    def test_infeasible_reports_max_flow(self, backend):
        with pytest.raises(InfeasibleError) as info:
            min_cost_flow(net(3, [(0, 1, 2, 0), (1, 2, 1, 0)], 0, 2), 2, backend=backend)
        assert info.value.achieved == 1

    def test_cycle_rejected(self, backend):
        with pytest.raises(ValueError):
            min_cost_flow(net(3, [(0, 1, 1, 0), (1, 0, 1, 0), (1, 2, 1, 0)], 0, 2), 1,
                          backend=backend)

    def test_negative_requirement(self):
        with pytest.raises(ValueError):
            min_cost_flow(net(2, [(0, 1, 1, 0)], 0, 1), -1)

    def test_cancels_along_backward_arcs(self, backend):
        # the first augmentation takes 0-1-2-3 (cost -10); the optimum for two
        # units must undo the 1-2 arc
        arcs = [(0, 1, 1, 0), (1, 2, 1, -10), (2, 3, 1, 0), (0, 2, 1, 0), (1, 3, 1, 0)]
        f = min_cost_flow(net(4, arcs, 0, 3), 2, backend=backend)
        assert f.cost == 0
        assert f.flow.tolist() == [1, 0, 1, 1, 1]


def test_network_validation():
    with pytest.raises(ValueError):
        net(2, [(0, 2, 1, 0)], 0, 1)
    with pytest.raises(ValueError):
        net(2, [(0, 1, -1, 0)], 0, 1)
    with pytest.raises(ValueError):
        net(2, [(0, 1, 1, 0)], 0, 2)


def test_topological_sort():
    order = topological_sort(4, np.array([2, 0, 1]), np.array([3, 1, 2]))
    assert order == [0, 1, 2, 3]
    with pytest.raises(ValueError):
        topological_sort(2, np.array([0, 1]), np.array([1, 0]))


def test_check_flow_catches_violations():
    n = net(3, [(0, 1, 1, 1), (1, 2, 1, 1)], 0, 2)
    from diverse_opt.flow import IntegralFlow
    check_flow(n, IntegralFlow(np.array([1, 1]), 1, 2))
    with pytest.raises(AssertionError):
        check_flow(n, IntegralFlow(np.array([1, 0]), 1, 1))
    with pytest.raises(AssertionError):
        check_flow(n, IntegralFlow(np.array([2, 2]), 2, 4))
    with pytest.raises(AssertionError):
        check_flow(n, IntegralFlow(np.array([1, 1]), 1, 3))


def random_dag_network(rng):
    n = rng.randint(2, 5)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    m = rng.randint(1, 8)
    arcs = [(*rng.choice(pairs), rng.randint(0, 2), rng.randint(-5, 5)) for _ in range(m)]
    return net(n, arcs, 0, n - 1), arcs


def brute_force_flows(n, arcs, s, t):
    """{value: min cost} over every integral feasible flow."""
    best = {}
    for f in itertools.product(*(range(c + 1) for _, _, c, _ in arcs)):
        excess = [0] * n
        for (u, v, _, _), x in zip(arcs, f):
            excess[u] -= x
            excess[v] += x
        if any(excess[v] for v in range(n) if v not in (s, t)):
            continue
        value = excess[t]
        cost = sum(x * c for (_, _, _, c), x in zip(arcs, f))
        if value not in best or cost < best[value]:
            best[value] = cost
    return best


def test_brute_force_optimality(backend):
    rng = random.Random(7)
    for _ in range(300):
        network, arcs = random_dag_network(rng)
        best = brute_force_flows(network.n, arcs, 0, network.n - 1)
        top = max(best)
        for req in range(top + 2):
            if req in best:
                f = min_cost_flow(network, req, backend=backend)
                assert f.cost == best[req], (arcs, req)
            elif req > top:
                with pytest.raises(InfeasibleError) as info:
                    min_cost_flow(network, req, backend=backend)
                assert info.value.achieved == top


def test_backends_agree_on_random_networks():
    rng = random.Random(9)
    for _ in range(100):
        network, _ = random_dag_network(rng)
        try:
            a = min_cost_flow(network, 2, backend="python")
        except InfeasibleError:
            continue
        b = min_cost_flow(network, 2)
        assert a.flow.tolist() == b.flow.tolist()


class TestDecompose:
    def test_diamond(self):
        n = net(4, [(0, 1, 1, 0), (1, 3, 1, 0), (0, 2, 1, 0), (2, 3, 1, 0)], 0, 3)
        f = min_cost_flow(n, 2)
        assert sorted(decompose_unit_flow_paths(n, f, 2)) == [[0, 1], [2, 3]]

    def test_single_path(self):
        n = net(3, [(0, 1, 1, 0), (1, 2, 1, 0)], 0, 2)
        assert decompose_unit_flow_paths(n, min_cost_flow(n, 1), 1) == [[0, 1]]

    def test_grid_two_paths(self, backend):
        g, s, t = generate_grid(3)
        ex = expand_dag(orient_undirected(g, s, t, backend), 2)
        f = min_cost_flow(ex.network, 2, backend=backend)
        paths = decompose_unit_flow_paths(ex.network, f, 2)
        used = [a for p in paths for a in p]
        assert len(used) == len(set(used))
        assert sorted(used) == np.flatnonzero(f.flow).tolist()
        for p in paths:
            assert ex.network.tails[p[0]] == s and ex.network.heads[p[-1]] == t
            for a, b in zip(p, p[1:]):
                assert ex.network.heads[a] == ex.network.tails[b]

    def test_rejects_non_unit(self):
        n = net(2, [(0, 1, 2, 0)], 0, 1)
        with pytest.raises(ValueError):
            decompose_unit_flow_paths(n, min_cost_flow(n, 2), 2)

    def test_rejects_wrong_k(self):
        n = net(2, [(0, 1, 1, 0)], 0, 1)
        with pytest.raises(ValueError):
            decompose_unit_flow_paths(n, min_cost_flow(n, 1), 2)
