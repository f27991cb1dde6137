"""k-shortest-paths baseline and exhaustive oracles used by tests.

``yen_k_shortest`` lists loopless s-t paths in (length, vertex sequence)
order.  Parallel arcs are collapsed to the shortest one (lowest id on
ties), so a path is identified by its vertex sequence.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from .diversity import SolutionSet, diversity_pairwise
from .errors import InfeasibleError
from .graph import DirectedGraph, UndirectedGraph


@dataclass(frozen=True)
class Path:
    length: int
    vertices: tuple[int, ...]
    edges: tuple[int, ...]  # input edge ids


def _collapsed_adjacency(g):
    """``{u: [(v, length, edge id), ...]}`` sorted by ``v``, one entry per neighbour."""
    if isinstance(g, UndirectedGraph):
        d = g.to_directed()
        arcs = [(u, v, l, a // 2) for a, (u, v, l, _) in enumerate(d.arcs)]
    else:
        arcs = [(u, v, l, a) for a, (u, v, l, _) in enumerate(g.arcs)]
    best: dict[tuple[int, int], tuple[int, int]] = {}
    for u, v, l, e in arcs:
        if u == v:
            continue
        cur = best.get((u, v))
        if cur is None or (l, e) < cur:
            best[(u, v)] = (l, e)
    adj: dict[int, list[tuple[int, int, int]]] = {}
    for (u, v), (l, e) in sorted(best.items()):
        adj.setdefault(u, []).append((v, l, e))
    return adj


def _distances_to(n, radj, t):
    dist = [None] * n
    dist[t] = 0
    heap = [(0, t)]
    while heap:
        d, v = heapq.heappop(heap)
        if d > dist[v]:
            continue
        for u, l in radj.get(v, ()):
            nd = d + l
            if dist[u] is None or nd < dist[u]:
                dist[u] = nd
                heapq.heappush(heap, (nd, u))
    return dist


class _SpurSearch:
    """Lexicographically smallest shortest path from a spur vertex to ``t``.

    ``h`` (unrestricted distance to ``t``) is a consistent lower bound in
    every restricted graph, so A* finds the restricted distance and a
    depth-first search under that budget finds the smallest vertex sequence.
    """

    def __init__(self, n, adj, t):
        self.adj, self.t = adj, t
        radj: dict[int, list[tuple[int, int]]] = {}
        for u, nbrs in adj.items():
            for v, l, _ in nbrs:
                radj.setdefault(v, []).append((u, l))
        self.h = _distances_to(n, radj, t)

    def _allowed(self, banned_v, banned_a):
        h = self.h

        def arcs(u):
            for v, l, _ in self.adj.get(u, ()):
                if h[v] is not None and v not in banned_v and (u, v) not in banned_a:
                    yield v, l
        return arcs

    def _astar(self, spur, arcs):
        h, t = self.h, self.t
        best = {spur: 0}
        heap = [(h[spur], 0, spur)]
        while heap:
            _, g, u = heapq.heappop(heap)
            g = -g
            if u == t:
                return g
            if g > best[u]:
                continue
            for v, l in arcs(u):
                ng = g + l
                if ng < best.get(v, ng + 1):
                    best[v] = ng
                    heapq.heappush(heap, (ng + h[v], -ng, v))
        return None

    def _lex_walk(self, spur, arcs, budget):
        # walks meeting the budget are automatically simple
        h, t = self.h, self.t
        dead = set()
        path = [spur]
        stack = [(spur, 0, arcs(spur))]
        while stack:
            u, g, it = stack[-1]
            if u == t:
                return path
            for v, l in it:
                ng = g + l
                if ng + h[v] <= budget and (v, ng) not in dead:
                    stack.append((v, ng, arcs(v)))
                    path.append(v)
                    break
            else:
                dead.add((u, g))
                stack.pop()
                path.pop()
        return None

    def find(self, spur, banned_v, banned_a):
        if self.h[spur] is None or spur in banned_v:
            return None
        arcs = self._allowed(banned_v, banned_a)
        path = self._lex_walk(spur, arcs, self.h[spur])
        if path is not None:
            return path
        budget = self._astar(spur, arcs)
        if budget is None:
            return None
        path = self._lex_walk(spur, arcs, budget)
        if path is None:
            raise AssertionError("A* distance not met by depth-first search")
        return path


def _common_prefix(a, b):
    n = 0
    for x, y in zip(a, b):
        if x != y:
            break
        n += 1
    return n


def yen_k_shortest(g: DirectedGraph | UndirectedGraph, s: int, t: int, k: int) -> list[Path]:
    """Up to ``k`` loopless s-t paths, shortest first, ties broken by vertex sequence."""
    if k < 1:
        raise ValueError("k must be >= 1")
    adj = _collapsed_adjacency(g)
    info = {(u, v): (l, e) for u, nbrs in adj.items() for v, l, e in nbrs}
    search = _SpurSearch(g.n, adj, t)
    first = search.find(s, set(), set())
    if first is None:
        raise InfeasibleError(f"vertex {t} is not reachable from {s}")

    def cost(vs):
        return sum(info[(a, b)][0] for a, b in zip(vs, vs[1:]))

    found = [tuple(first)]
    seen = {found[0]}
    heap: list[tuple[int, tuple[int, ...]]] = []
    while len(found) < k:
        prev = found[-1]
        # found paths sharing the first j + 1 vertices with prev
        shared = [(_common_prefix(p, prev), p) for p in found]
        banned_v: set[int] = set()
        for i in range(len(prev) - 1):
            if i:
                banned_v.add(prev[i - 1])
            banned_a = {(p[i], p[i + 1]) for c, p in shared if c > i and len(p) > i + 1}
            spur = search.find(prev[i], banned_v, banned_a)
            if spur is None:
                continue
            cand = prev[:i] + tuple(spur)
            if cand not in seen:
                seen.add(cand)
                heapq.heappush(heap, (cost(cand), cand))
        if not heap:
            break
        found.append(heapq.heappop(heap)[1])
    return [
        Path(cost(vs), vs, tuple(info[(a, b)][1] for a, b in zip(vs, vs[1:]))) for vs in found
    ]


# --------------------------------------------------------------------------
# exhaustive oracles


def all_simple_paths(g: DirectedGraph | UndirectedGraph, s: int, t: int) -> list[Path]:
    """Every simple s-t path, parallel arcs kept distinct.  Exponential; tiny graphs only."""
    if isinstance(g, UndirectedGraph):
        arcs = [(u, v, l, a // 2) for a, (u, v, l, _) in enumerate(g.to_directed().arcs)]
    else:
        arcs = [(u, v, l, a) for a, (u, v, l, _) in enumerate(g.arcs)]
    out: dict[int, list[tuple[int, int, int]]] = {}
    for u, v, l, e in arcs:
        out.setdefault(u, []).append((v, l, e))
    result = []

    def extend(u, verts, edges, length):
        if u == t:
            result.append(Path(length, tuple(verts), tuple(edges)))
            return
        for v, l, e in out.get(u, ()):
            if v not in verts:
                verts.append(v)
                edges.append(e)
                extend(v, verts, edges, length + l)
                verts.pop()
                edges.pop()

    extend(s, [s], [], 0)
    return result


def all_shortest_paths(g, s, t) -> list[Path]:
    paths = all_simple_paths(g, s, t)
    if not paths:
        return []
    best = min(p.length for p in paths)
    return [p for p in paths if p.length == best]


def brute_force_diverse_paths(g, s, t, k, *, max_paths: int = 50, max_k: int = 3) -> SolutionSet:
    """Exact optimum over all k-multisets of shortest s-t paths."""
    paths = all_shortest_paths(g, s, t)
    if not paths:
        raise InfeasibleError(f"vertex {t} is not reachable from {s}")
    if len(paths) > max_paths or k > max_k:
        raise ValueError(f"brute force budget exceeded ({len(paths)} paths, k={k})")
    return best_multiset([p.edges for p in paths], g.weights.tolist(), k)


def best_multiset(solutions, w, k) -> SolutionSet:
    """Maximize diversity over all k-multisets drawn from ``solutions``."""
    best, best_val = None, None
    for combo in combinations_with_replacement(range(len(solutions)), k):
        sets = [solutions[i] for i in combo]
        val = diversity_pairwise(sets, w)
        if best_val is None or val > best_val:
            best, best_val = sets, val
    return SolutionSet.from_sets(best, w)


def all_p_matchings(edges, p) -> list[tuple[int, ...]]:
    """Edge-id tuples of every matching with exactly ``p`` edges of a bipartite edge list."""
    out = []
    for combo in combinations(range(len(edges)), p):
        a_side = {edges[e][0] for e in combo}
        b_side = {edges[e][1] for e in combo}
        if len(a_side) == p and len(b_side) == p:
            out.append(combo)
    return out


def all_bases(oracle, rank=None) -> list[tuple[int, ...]]:
    rank = oracle.rank() if rank is None else rank
    return [
        c for c in combinations(range(oracle.size), rank) if oracle.is_independent(c)
    ]
