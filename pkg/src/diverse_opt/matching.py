"""Diverse bipartite matchings of a fixed cardinality ``p``.

A min-cost flow picks a maximum copy-weight subgraph with ``k * p`` edges
and degree at most ``k`` (copies of one edge count as parallel edges).
That multigraph is properly edge-coloured with ``k`` colours and the colour
classes are rebalanced along alternating paths until each holds ``p`` edges.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .diversity import SolutionSet, check_weights
from .errors import NegativeWeightError, ParseError
from .flow import AUXILIARY, FlowNetwork, min_cost_flow


@dataclass(frozen=True)
class BipartiteGraph:
    n_a: int
    n_b: int
    edges: tuple[tuple[int, int, int], ...]  # (a, b, weight)

    def __post_init__(self):
        for a, b, w in self.edges:
            if not (0 <= a < self.n_a and 0 <= b < self.n_b):
                raise ValueError(f"edge ({a}, {b}) out of range")
            if w < 0:
                raise NegativeWeightError("edge weights must be >= 0")

    @property
    def weights(self) -> list[int]:
        return [w for _, _, w in self.edges]


@dataclass(frozen=True)
class DegreeBoundedSubgraph:
    """Selected copies ``(edge id, copy index)``; repeated edge ids are parallel edges."""

    copies: tuple[tuple[int, int], ...]
    degree: dict[tuple[str, int], int]


def parse_bipartite(text) -> BipartiteGraph:
    """Read ``b <|A|> <|B|> <m>`` then ``e <a> <b> <w>`` lines; ``c`` lines are comments."""
    lines = io.StringIO(text) if isinstance(text, str) else text
    header = None
    edges = []
    for lineno, raw in enumerate(lines, 1):
        tok = raw.split()
        if not tok or tok[0] == "c":
            continue
        try:
            vals = [int(x) for x in tok[1:]]
        except ValueError:
            raise ParseError("expected integers", lineno) from None
        if tok[0] == "b":
            if header is not None or len(vals) != 3 or min(vals) < 0:
                raise ParseError("malformed header, expected 'b <|A|> <|B|> <m>'", lineno)
            header = vals
        elif tok[0] == "e":
            if header is None:
                raise ParseError("edge line before header", lineno)
            if len(vals) != 3:
                raise ParseError("malformed edge line, expected 'e <a> <b> <w>'", lineno)
            a, b, w = vals
            if not (0 <= a < header[0] and 0 <= b < header[1]):
                raise ParseError("vertex index out of range", lineno)
            if w < 0:
                raise NegativeWeightError(f"line {lineno}: weight must be >= 0")
            edges.append((a, b, w))
        else:
            raise ParseError(f"unknown line type {tok[0]!r}", lineno)
    if header is None:
        raise ParseError("missing 'b' header")
    if len(edges) != header[2]:
        raise ParseError(f"edge count mismatch: header says {header[2]}, found {len(edges)}")
    return BipartiteGraph(header[0], header[1], tuple(edges))


def build_matching_network(g: BipartiteGraph, k: int, p: int) -> FlowNetwork:
    """Network ``s -> A -> B -> t``; vertices ``0..|A|-1`` are A, then B, then s, t.

    Source and sink arcs have capacity ``k`` and cost 0; each edge gets ``k``
    unit copy arcs.  The flow requirement is ``k * p``.
    """
    if k < 1 or p < 1:
        raise ValueError("k and p must be >= 1")
    na, nb, m = g.n_a, g.n_b, len(g.edges)
    s, t = na + nb, na + nb + 1
    ea = np.array([e[0] for e in g.edges], dtype=np.int64)
    eb = np.array([e[1] for e in g.edges], dtype=np.int64) + na
    ew = np.array(g.weights, dtype=np.int64)
    factor = k - 2 * np.arange(1, k + 1, dtype=np.int64) + 1

    tails = np.concatenate([np.full(na, s), np.repeat(ea, k), np.arange(na, na + nb)])
    heads = np.concatenate([np.arange(na), np.repeat(eb, k), np.full(nb, t)])
    caps = np.concatenate([np.full(na, k), np.ones(m * k), np.full(nb, k)])
    costs = np.concatenate([np.zeros(na), -(ew[:, None] * factor).reshape(-1), np.zeros(nb)])
    element = np.concatenate([np.full(na, AUXILIARY), np.repeat(np.arange(m), k),
                              np.full(nb, AUXILIARY)])
    copy = np.concatenate([np.zeros(na), np.tile(np.arange(1, k + 1), m), np.zeros(nb)])
    return FlowNetwork.build(na + nb + 2, tails, heads, caps, costs, s, t, element, copy)


def bipartite_edge_color(endpoints: Sequence[tuple[int, int]], k: int) -> list[int]:
    """Proper ``k``-edge-colouring of a bipartite multigraph; colours are 1..k.

    ``endpoints[i]`` is ``(u, v)`` for edge ``i`` with ``u`` on one side and
    ``v`` on the other (vertex labels on the two sides must not collide).
    Each edge is inserted greedily; when no colour is free at both ends the
    two-coloured alternating path from the second endpoint is flipped.  If
    there are at least ``k`` edges, every colour ends up used.
    """
    deg: dict = {}
    for u, v in endpoints:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if deg and max(deg.values()) > k:
        raise ValueError(f"maximum degree {max(deg.values())} exceeds k={k}")

    at: dict = {x: [-1] * k for x in deg}  # vertex -> colour -> edge id
    color = [-1] * len(endpoints)

    def other(e, x):
        u, v = endpoints[e]
        return v if x == u else u

    for e, (u, v) in enumerate(endpoints):
        alpha = at[u].index(-1)
        beta = at[v].index(-1)
        if at[v][alpha] != -1:
            # flip the alpha/beta path starting at v; it cannot reach u
            path, x, c = [], v, alpha
            while at[x][c] != -1:
                f = at[x][c]
                path.append(f)
                x = other(f, x)
                c = beta if c == alpha else alpha
            for f in path:
                a, b = endpoints[f]
                at[a][color[f]] = at[b][color[f]] = -1
            for f in path:
                color[f] = beta if color[f] == alpha else alpha
                a, b = endpoints[f]
                at[a][color[f]] = at[b][color[f]] = f
        color[e] = alpha
        at[u][alpha] = at[v][alpha] = e

    if len(endpoints) >= k:
        sizes = [0] * k
        for c in color:
            sizes[c] += 1
        for c in range(k):
            if sizes[c] == 0:
                # an empty colour is free everywhere
                e = next(i for i, ci in enumerate(color) if sizes[ci] >= 2)
                sizes[color[e]] -= 1
                color[e] = c
                sizes[c] = 1
    return [c + 1 for c in color]


def rebalance_matchings(matchings: Sequence[Sequence[int]],
                        endpoints: Sequence[tuple[int, int]], p: int) -> list[list[int]]:
    """Shift edges between matchings until each has exactly ``p`` edges.

    Each step takes the largest and smallest class and swaps an
    alternating path of their symmetric difference that starts and ends
    with an edge of the larger one.  The union of edges never changes.
    """
    classes = [sorted(m) for m in matchings]
    total = sum(len(m) for m in classes)
    if total != p * len(classes):
        raise ValueError(f"{total} edges cannot form {len(classes)} matchings of size {p}")
    while True:
        sizes = [len(m) for m in classes]
        i = sizes.index(max(sizes))
        j = sizes.index(min(sizes))
        if sizes[i] == p:
            return classes
        big, small = classes[i], classes[j]
        by_vertex = [{}, {}]
        for side, cls in enumerate((big, small)):
            for e in cls:
                for x in endpoints[e]:
                    by_vertex[side][x] = e
        path = None
        for start in sorted(x for x in by_vertex[0] if x not in by_vertex[1]):
            walk, x, side = [], start, 0
            while x in by_vertex[side]:
                e = by_vertex[side][x]
                walk.append(e)
                u, v = endpoints[e]
                x = v if x == u else u
                side ^= 1
            if len(walk) % 2 == 1:
                path = walk
                break
        if path is None:
            raise AssertionError("no augmenting path between unbalanced matchings")
        moved_out = set(path[0::2])
        moved_in = path[1::2]
        classes[i] = sorted([e for e in big if e not in moved_out] + moved_in)
        classes[j] = sorted([e for e in small if e not in set(moved_in)] + list(moved_out))


def is_matching(edge_ids, endpoints) -> bool:
    seen = set()
    for e in edge_ids:
        for x in endpoints[e]:
            if x in seen:
                return False
            seen.add(x)
    return True


def diverse_bipartite_matchings(g: BipartiteGraph, k: int, p: int, *,
                                backend: str | None = None) -> SolutionSet:
    """``k`` matchings of exactly ``p`` edges maximizing the weighted diversity.

    Raises InfeasibleError when the ``k * p`` flow is infeasible.
    """
    check_weights(g.weights, k)
    net = build_matching_network(g, k, p)
    flow = min_cost_flow(net, k * p, backend=backend)
    chosen = np.flatnonzero((net.element != AUXILIARY) & (flow.flow > 0))
    sub = DegreeBoundedSubgraph(
        tuple((int(net.element[a]), int(net.copy[a])) for a in chosen),
        _degrees(g, net.element[chosen]),
    )
    endpoints = [(("A", g.edges[e][0]), ("B", g.edges[e][1])) for e, _ in sub.copies]
    colors = bipartite_edge_color(endpoints, k)
    classes = [[i for i, c in enumerate(colors) if c == col] for col in range(1, k + 1)]
    classes = rebalance_matchings(classes, endpoints, p)
    sets = [[sub.copies[i][0] for i in cls] for cls in classes]
    return SolutionSet.from_sets(sets, g.weights, packing_weight=-flow.cost)


def _degrees(g, edge_ids):
    deg: dict[tuple[str, int], int] = {}
    for e in edge_ids.tolist():
        a, b, _ = g.edges[e]
        deg[("A", a)] = deg.get(("A", a), 0) + 1
        deg[("B", b)] = deg.get(("B", b), 0) + 1
    return deg
