"""Diverse shortest s-t paths: prune, copy arcs, min-cost flow, decompose.

Paths may repeat.  When fewer than ``k`` distinct shortest paths exist the
flow reuses routes through higher-index copies, and the diversity value
discounts the repetition accordingly.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .dag import ShortestPathDag, build_shortest_path_dag, orient_undirected
from .diversity import SolutionSet, check_weights
from .flow import FlowNetwork, decompose_unit_flow_paths, min_cost_flow
from .graph import DirectedGraph, UndirectedGraph


@dataclass(frozen=True)
class ExpandedNetwork:
    """Copy-arc network; arc ``j * k + i - 1`` is copy ``i`` of DAG arc ``j``."""

    network: FlowNetwork
    k: int
    dag_arc: np.ndarray  # copy arc -> DAG arc

    def project(self, copy_arc: int) -> int:
        return int(self.dag_arc[copy_arc])


@dataclass(frozen=True)
class DiversePathsResult:
    paths: tuple[tuple[int, ...], ...]  # vertex sequences
    solutions: SolutionSet  # over input edge ids
    packing_weight: int
    length: int  # common shortest-path length
    timings: dict = field(default_factory=dict, compare=False)

    @property
    def diversity(self) -> int:
        return self.solutions.diversity


def expand_dag(dag: ShortestPathDag, k: int) -> ExpandedNetwork:
    if k < 1:
        raise ValueError("k must be >= 1")
    g = dag.graph
    factor = k - 2 * np.arange(1, k + 1, dtype=np.int64) + 1  # k - 2i + 1
    costs = -(g.weights[:, None] * factor[None, :]).reshape(-1)
    dag_arc = np.repeat(np.arange(g.m, dtype=np.int64), k)
    net = FlowNetwork.build(
        g.n,
        np.repeat(g.tails, k),
        np.repeat(g.heads, k),
        np.ones(g.m * k, dtype=np.int64),
        costs,
        dag.s,
        dag.t,
        element=dag.edge_map[dag_arc],
        copy=np.tile(np.arange(1, k + 1, dtype=np.int64), g.m),
    )
    dag_arc.flags.writeable = False
    return ExpandedNetwork(net, k, dag_arc)


def shortest_path_dag(g: DirectedGraph | UndirectedGraph, s: int, t: int,
                      backend: str | None = None) -> ShortestPathDag:
    if isinstance(g, UndirectedGraph):
        return orient_undirected(g, s, t, backend)
    return build_shortest_path_dag(g, s, t, backend)


def _check_copy_prefix(expanded: ExpandedNetwork, flow) -> None:
    k = expanded.k
    used = flow.flow.reshape(-1, k)
    costs = expanded.network.costs.reshape(-1, k)
    # zero-weight arcs have identical copies, so any subset of them is fine
    gaps = np.any(used[:, 1:] > used[:, :-1], axis=1) & np.any(costs != 0, axis=1)
    if gaps.any():
        raise AssertionError("flow skipped a lower copy index")


def diverse_shortest_paths(g: DirectedGraph | UndirectedGraph, s: int, t: int, k: int, *,
                           backend: str | None = None) -> DiversePathsResult:
    """``k`` shortest s-t paths maximizing the weighted sum of pairwise Hamming distances.

    Raises InfeasibleError when ``t`` is unreachable from ``s``.
    """
    check_weights(g.weights.tolist(), k)
    clock = time.perf_counter
    t0 = clock()
    dag = shortest_path_dag(g, s, t, backend)
    t1 = clock()
    expanded = expand_dag(dag, k)
    flow = min_cost_flow(expanded.network, k, backend=backend)
    _check_copy_prefix(expanded, flow)
    t2 = clock()

    arc_paths = decompose_unit_flow_paths(expanded.network, flow, k)
    dg = dag.graph
    paths, edge_sets = [], []
    for copy_path in arc_paths:
        arcs = [expanded.project(a) for a in copy_path]
        paths.append((s,) + tuple(int(dg.heads[a]) for a in arcs))
        edge_sets.append([int(dag.edge_map[a]) for a in arcs])
    solutions = SolutionSet.from_sets(edge_sets, g.weights.tolist(), packing_weight=-flow.cost)
    t3 = clock()
    timings = {"prune": t1 - t0, "flow": t2 - t1, "decode": t3 - t2}
    return DiversePathsResult(tuple(paths), solutions, -flow.cost, dag.length, timings)
