"""Single-source distances and the pruned shortest-path DAG.

The DAG keeps exactly the arcs ``(u, v)`` with ``dist(u) + len(u, v) ==
dist(v)`` that lie on some s-t path, so its s-t paths are precisely the
shortest s-t paths of the input graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _backend
from .errors import InfeasibleError
from .graph import DirectedGraph, UndirectedGraph

UNREACHABLE = -1


@dataclass(frozen=True)
class DistanceLabels:
    source: int
    dist: np.ndarray  # int64, UNREACHABLE for vertices not reachable from source

    def __getitem__(self, v: int) -> int | None:
        d = int(self.dist[v])
        return None if d == UNREACHABLE else d

    def reachable(self, v: int) -> bool:
        return self.dist[v] != UNREACHABLE


@dataclass(frozen=True)
class ShortestPathDag:
    """Pruned DAG over the original vertex ids.

    ``edge_map[j]`` is the id of the input edge behind DAG arc ``j`` (an
    undirected edge id when built by ``orient_undirected``).
    """

    graph: DirectedGraph
    s: int
    t: int
    labels: DistanceLabels
    edge_map: np.ndarray
    vertices: np.ndarray  # bool mask of kept vertices

    @property
    def length(self) -> int:
        return int(self.labels.dist[self.t])


def dijkstra(g: DirectedGraph, s: int, backend: str | None = None) -> DistanceLabels:
    if not 0 <= s < g.n:
        raise ValueError(f"source {s} out of range [0, {g.n})")
    indptr, arc_ids = g.csr()
    dist = _backend.kernels(backend).dijkstra_csr(g.n, s, indptr, arc_ids, g.heads, g.lengths)
    dist.flags.writeable = False
    return DistanceLabels(s, dist)


def _reach(n, start, adj_from, adj_to, arcs):
    seen = np.zeros(n, dtype=bool)
    seen[start] = True
    out = {}
    for a in arcs:
        out.setdefault(adj_from[a], []).append(adj_to[a])
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in out.get(u, ()):
            if not seen[v]:
                seen[v] = True
                queue.append(v)
    return seen


def build_shortest_path_dag(g: DirectedGraph, s: int, t: int,
                            backend: str | None = None) -> ShortestPathDag:
    if not 0 <= t < g.n:
        raise ValueError(f"sink {t} out of range [0, {g.n})")
    labels = dijkstra(g, s, backend)
    if not labels.reachable(t):
        raise InfeasibleError(f"vertex {t} is not reachable from {s}")
    d = labels.dist
    du, dv = d[g.tails], d[g.heads]
    tight = np.flatnonzero((du != UNREACHABLE) & (dv != UNREACHABLE) & (du + g.lengths == dv))

    tails = g.tails.tolist()
    heads = g.heads.tolist()
    arcs = tight.tolist()
    fwd = _reach(g.n, s, tails, heads, arcs)
    bwd = _reach(g.n, t, heads, tails, arcs)
    keep_v = fwd & bwd
    kept = tight[keep_v[g.tails[tight]] & keep_v[g.heads[tight]]]

    sub = DirectedGraph(
        g.n, g.tails[kept], g.heads[kept], g.lengths[kept], g.weights[kept]
    )
    kept.flags.writeable = False
    keep_v.flags.writeable = False
    return ShortestPathDag(sub, s, t, labels, kept, keep_v)


def orient_undirected(g: UndirectedGraph, s: int, t: int,
                      backend: str | None = None) -> ShortestPathDag:
    """Orient each edge in its distance-increasing direction, or drop it."""
    dag = build_shortest_path_dag(g.to_directed(), s, t, backend)
    edge_map = dag.edge_map // 2
    edge_map.flags.writeable = False
    return ShortestPathDag(dag.graph, s, t, dag.labels, edge_map, dag.vertices)


def topological_order(dag: ShortestPathDag) -> list[int]:
    """Kept vertices by increasing distance, which is topological since lengths are >= 1."""
    kept = np.flatnonzero(dag.vertices)
    return kept[np.argsort(dag.labels.dist[kept], kind="stable")].tolist()


def count_paths(dag: ShortestPathDag) -> tuple[int, Fraction]:
    """Exact number of s-t paths in the DAG and their mean arc count."""
    g = dag.graph
    indptr, arc_ids = g.reverse_csr()
    indptr = indptr.tolist()
    arc_ids = arc_ids.tolist()
    tails = g.tails.tolist()
    count = [0] * g.n
    hops = [0] * g.n  # summed arc counts over all s-v paths
    count[dag.s] = 1
    for v in topological_order(dag):
        if v == dag.s:
            continue
        c = h = 0
        for j in range(indptr[v], indptr[v + 1]):
            u = tails[arc_ids[j]]
            c += count[u]
            h += hops[u] + count[u]
        count[v], hops[v] = c, h
    total = count[dag.t]
    return total, Fraction(hops[dag.t], total)
