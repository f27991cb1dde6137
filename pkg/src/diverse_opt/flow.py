"""Integral min-cost flow of a prescribed value on acyclic networks.

The solver is successive shortest paths with vertex potentials.  Initial
potentials come from one relaxation pass in topological order (costs may be
negative, the network is a DAG); afterwards reduced costs stay
non-negative and each round is a Dijkstra search.

Parallel arcs with the same endpoints are grouped into a bundle sorted by
(cost, arc id).  Only the cheapest unsaturated arc of a bundle can lie on a
shortest residual path forwards, and only the dearest arc carrying flow
backwards, so every search runs over bundles instead of individual copies.
This keeps a bundle's flow a prefix of its sorted arcs: with copy costs
rising in the copy index, copies are used in index order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from . import _backend
from .errors import InfeasibleError

AUXILIARY = -1


def _ro(values):
    arr = np.array(values, dtype=np.int64).reshape(-1)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class FlowNetwork:
    """Arcs with capacity, cost, and a tag ``(element, copy)``.

    ``element[a] == AUXILIARY`` (copy 0) marks arcs that do not stand for a
    copied ground-set element.
    """

    n: int
    tails: np.ndarray
    heads: np.ndarray
    caps: np.ndarray
    costs: np.ndarray
    s: int
    t: int
    element: np.ndarray
    copy: np.ndarray

    @classmethod
    def build(cls, n, tails, heads, caps, costs, s, t, element=None, copy=None):
        tails, heads, caps, costs = map(_ro, (tails, heads, caps, costs))
        m = len(tails)
        element = _ro(np.full(m, AUXILIARY) if element is None else element)
        copy = _ro(np.zeros(m) if copy is None else copy)
        if not all(len(a) == m for a in (heads, caps, costs, element, copy)):
            raise ValueError("arc columns have different lengths")
        if m and (min(tails.min(), heads.min()) < 0 or max(tails.max(), heads.max()) >= n):
            raise ValueError("arc endpoint out of range")
        if m and caps.min() < 0:
            raise ValueError("capacities must be >= 0")
        if not (0 <= s < n and 0 <= t < n):
            raise ValueError("source or sink out of range")
        return cls(int(n), tails, heads, caps, costs, int(s), int(t), element, copy)

    @property
    def m(self) -> int:
        return len(self.tails)


@dataclass(frozen=True)
class IntegralFlow:
    flow: np.ndarray
    value: int
    cost: int


def topological_sort(n, tails, heads):
    """Kahn's algorithm; raises ValueError on a directed cycle."""
    indeg = np.bincount(heads, minlength=n).tolist() if len(heads) else [0] * n
    order_idx = np.argsort(tails, kind="stable")
    ptr = np.zeros(n + 1, dtype=np.int64)
    if len(tails):
        np.cumsum(np.bincount(tails, minlength=n), out=ptr[1:])
    ptr = ptr.tolist()
    succ = heads[order_idx].tolist()
    queue = deque(v for v in range(n) if indeg[v] == 0)
    order = []
    while queue:
        u = queue.popleft()
        order.append(u)
        for j in range(ptr[u], ptr[u + 1]):
            v = succ[j]
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    if len(order) != n:
        raise ValueError("flow network contains a directed cycle")
    return order


def check_flow(net: FlowNetwork, flow: IntegralFlow) -> None:
    """Assert capacity, conservation and value constraints."""
    f = flow.flow
    if np.any(f < 0) or np.any(f > net.caps):
        raise AssertionError("capacity constraint violated")
    excess = np.bincount(net.heads, weights=f, minlength=net.n) - np.bincount(
        net.tails, weights=f, minlength=net.n
    )
    inner = np.ones(net.n, dtype=bool)
    inner[[net.s, net.t]] = False
    if np.any(excess[inner] != 0):
        raise AssertionError("flow conservation violated")
    out_s = int(f[net.tails == net.s].sum()) - int(f[net.heads == net.s].sum())
    if out_s != flow.value:
        raise AssertionError("flow value mismatch")
    if int((f * net.costs).sum()) != flow.cost:
        raise AssertionError("flow cost mismatch")


def min_cost_flow(net: FlowNetwork, requirement: int, *, backend: str | None = None,
                  check: bool = True) -> IntegralFlow:
    """Minimum-cost integral flow of value exactly ``requirement``.

    Raises InfeasibleError (with ``achieved`` set to the max flow value)
    when the requirement cannot be met, and ValueError on cyclic networks.
    """
    if requirement < 0:
        raise ValueError("requirement must be >= 0")
    n, s, t = net.n, net.s, net.t
    kept = np.flatnonzero(net.caps > 0)
    tails, heads = net.tails[kept], net.heads[kept]
    topo = topological_sort(n, tails, heads)

    order = np.lexsort((kept, net.costs[kept], heads, tails))
    arc_sorted = kept[order]
    st, sh = tails[order], heads[order]
    new_bundle = np.ones(len(order), dtype=bool)
    new_bundle[1:] = (st[1:] != st[:-1]) | (sh[1:] != sh[:-1])
    first = np.flatnonzero(new_bundle)
    bstart = np.append(first, len(order)).astype(np.int64)
    btail = st[first].astype(np.int64)
    bhead = sh[first].astype(np.int64)
    cap = net.caps[arc_sorted].astype(np.int64)
    cost = net.costs[arc_sorted].astype(np.int64)
    nb = len(first)

    out_ptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(btail, minlength=n), out=out_ptr[1:])
    out_bund = np.arange(nb, dtype=np.int64)
    in_bund = np.argsort(bhead, kind="stable").astype(np.int64)
    in_ptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(bhead, minlength=n), out=in_ptr[1:])

    pi = _initial_potentials(n, s, topo, btail, bhead, cost[first], out_ptr)

    kern = _backend.kernels(backend)
    flow_sorted, value = kern.ssp(
        n, s, t, int(requirement), btail, bhead, bstart, cap, cost,
        out_ptr, out_bund, in_ptr, in_bund, pi,
    )
    if value < requirement:
        raise InfeasibleError(
            f"max flow {value} is below the requirement {requirement}", achieved=int(value)
        )
    flow = np.zeros(net.m, dtype=np.int64)
    flow[arc_sorted] = flow_sorted
    flow.flags.writeable = False
    result = IntegralFlow(flow, int(value), int((flow * net.costs).sum()))
    if check:
        check_flow(net, result)
    return result


def _initial_potentials(n, s, topo, btail, bhead, bcost, out_ptr):
    inf = 1 << 62
    dist = [inf] * n
    dist[s] = 0
    out_ptr = out_ptr.tolist()
    bhead = bhead.tolist()
    bcost = bcost.tolist()
    for u in topo:
        du = dist[u]
        if du == inf:
            continue
        for b in range(out_ptr[u], out_ptr[u + 1]):
            v = bhead[b]
            if du + bcost[b] < dist[v]:
                dist[v] = du + bcost[b]
    return np.array([d if d != inf else 0 for d in dist], dtype=np.int64)


def decompose_unit_flow_paths(net: FlowNetwork, flow: IntegralFlow, k: int) -> list[list[int]]:
    """Split a unit-arc DAG flow of value ``k`` into ``k`` arc-disjoint s-t paths.

    Each path is a list of arc ids; together they cover every arc that
    carries flow exactly once.
    """
    used = np.flatnonzero(flow.flow)
    if np.any(flow.flow[used] != 1) or np.any(net.caps[used] != 1):
        raise ValueError("every arc carrying flow must have capacity 1 and flow 1")
    if flow.value != k:
        raise ValueError(f"flow value {flow.value} differs from k={k}")
    pending: dict[int, deque] = {}
    for a in used.tolist():
        pending.setdefault(int(net.tails[a]), deque()).append(a)
    heads = net.heads.tolist()
    paths = []
    for _ in range(k):
        u, path = net.s, []
        while u != net.t:
            arcs = pending.get(u)
            if not arcs:
                raise ValueError("flow does not decompose into s-t paths")
            a = arcs.popleft()
            path.append(a)
            u = heads[a]
        paths.append(path)
    if any(pending.values()):
        raise ValueError("flow carries a cycle or leftover arcs")
    return paths
