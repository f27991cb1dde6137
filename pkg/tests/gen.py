"""Random instance generators shared by the tests."""

import random

from diverse_opt.graph import DirectedGraph, UndirectedGraph
from diverse_opt.matching import BipartiteGraph


def random_digraph(rng: random.Random, n_max=9, max_len=3, max_w=3, density=0.35):
    n = rng.randint(2, n_max)
    arcs = []
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < density:
                arcs.append((u, v, rng.randint(1, max_len), rng.randint(0, max_w)))
    # an occasional parallel arc
    if arcs and rng.random() < 0.3:
        u, v, _, _ = rng.choice(arcs)
        arcs.append((u, v, rng.randint(1, max_len), rng.randint(0, max_w)))
    return DirectedGraph.from_arcs(n, arcs), 0, n - 1


def random_undirected(rng: random.Random, n_max=9, max_len=3, max_w=3, density=0.4):
    n = rng.randint(2, n_max)
    edges = [
        (u, v, rng.randint(1, max_len), rng.randint(0, max_w))
        for u in range(n) for v in range(u + 1, n) if rng.random() < density
    ]
    return UndirectedGraph.from_edges(n, edges), 0, n - 1


def random_bipartite(rng: random.Random, side_max=4, m_max=8, max_w=3):
    n_a, n_b = rng.randint(1, side_max), rng.randint(1, side_max)
    pairs = [(a, b) for a in range(n_a) for b in range(n_b)]
    m = rng.randint(1, min(m_max, len(pairs)))
    edges = [(a, b, rng.randint(0, max_w)) for a, b in rng.sample(pairs, m)]
    return BipartiteGraph(n_a, n_b, tuple(edges))


def max_matching_size(g: BipartiteGraph) -> int:
    match_b: dict[int, int] = {}

    def try_a(a, seen):
        for x, b, _ in g.edges:
            if x == a and b not in seen:
                seen.add(b)
                if b not in match_b or try_a(match_b[b], seen):
                    match_b[b] = a
                    return True
        return False

    return sum(try_a(a, set()) for a in range(g.n_a))


def degree_bounded_multigraph(rng: random.Random, k: int, p: int):
    """Endpoints of a random bipartite multigraph with k*p edges and max degree <= k."""
    while True:
        n = rng.randint(p, p + 3)
        deg_a, deg_b = [0] * n, [0] * n
        edges = []
        for _ in range(50 * k * p):
            if len(edges) == k * p:
                break
            a, b = rng.randrange(n), rng.randrange(n)
            if deg_a[a] < k and deg_b[b] < k:
                deg_a[a] += 1
                deg_b[b] += 1
                edges.append((("A", a), ("B", b)))
        if len(edges) == k * p:
            return edges


def random_sets(rng: random.Random, k_max=8, u_max=12, w_max=10):
    k = rng.randint(1, k_max)
    u = rng.randint(1, u_max)
    w = [rng.randint(0, w_max) for _ in range(u)]
    sets = [[e for e in range(u) if rng.random() < 0.5] for _ in range(k)]
    return sets, w, k
