"""Pure-Python hot loops.  ``_kernels_ext.pyx`` mirrors this module exactly.

Both kernels take flat int64 arrays so the two implementations share one
calling convention; see ``flow.py`` for how the bundled network is laid out.
"""

from heapq import heappop, heappush

import numpy as np

INF = 1 << 62


def dijkstra_csr(n, s, indptr, arc_ids, heads, lengths):
    """Distances from ``s``; unreachable vertices get -1."""
    indptr = indptr.tolist()
    arc_ids = arc_ids.tolist()
    heads = heads.tolist()
    lengths = lengths.tolist()
    dist = [INF] * n
    dist[s] = 0
    heap = [(0, s)]
    while heap:
        d, u = heappop(heap)
        if d > dist[u]:
            continue
        for j in range(indptr[u], indptr[u + 1]):
            a = arc_ids[j]
            v = heads[a]
            nd = d + lengths[a]
            if nd < dist[v]:
                dist[v] = nd
                heappush(heap, (nd, v))
    out = np.array(dist, dtype=np.int64)
    out[out == INF] = -1
    return out


def ssp(n, s, t, requirement, btail, bhead, bstart, cap, cost,
        out_ptr, out_bund, in_ptr, in_bund, pi):
    """Successive shortest paths over bundles of parallel arcs.

    Bundle ``b`` owns sorted positions ``bstart[b]:bstart[b+1]`` of ``cap``
    and ``cost`` (cheapest first).  Positions below ``fill[b]`` are
    saturated, so the forward residual arc is always ``fill[b]`` and the
    backward one is the last position carrying flow.  ``pi`` must be a
    feasible potential for the empty flow.  Returns ``(flow, value)`` with
    ``flow`` indexed by sorted position; ``value < requirement`` means the
    sink became unreachable.
    """
    btail = btail.tolist()
    bhead = bhead.tolist()
    bstart = bstart.tolist()
    cap = cap.tolist()
    cost = cost.tolist()
    out_ptr = out_ptr.tolist()
    out_bund = out_bund.tolist()
    in_ptr = in_ptr.tolist()
    in_bund = in_bund.tolist()
    pi = pi.tolist()

    nb = len(btail)
    fill = bstart[:nb]
    flow = [0] * len(cap)
    value = 0

    while value < requirement:
        dist = [INF] * n
        pred = [-1] * n  # bundle id, or ~bundle id for a backward step
        dist[s] = 0
        heap = [(0, s)]
        while heap:
            d, u = heappop(heap)
            if d > dist[u]:
                continue
            if u == t:
                break
            pu = pi[u]
            for j in range(out_ptr[u], out_ptr[u + 1]):
                b = out_bund[j]
                f = fill[b]
                if f < bstart[b + 1]:
                    v = bhead[b]
                    nd = d + cost[f] + pu - pi[v]
                    if nd < dist[v]:
                        dist[v] = nd
                        pred[v] = b
                        heappush(heap, (nd, v))
            for j in range(in_ptr[u], in_ptr[u + 1]):
                b = in_bund[j]
                f = fill[b]
                if f >= bstart[b + 1] or flow[f] == 0:
                    f -= 1
                if f >= bstart[b]:
                    v = btail[b]
                    nd = d - cost[f] + pu - pi[v]
                    if nd < dist[v]:
                        dist[v] = nd
                        pred[v] = ~b
                        heappush(heap, (nd, v))
        dt = dist[t]
        if dt == INF:
            break
        for v in range(n):
            dv = dist[v]
            pi[v] += dv if dv < dt else dt

        delta = requirement - value
        v = t
        while v != s:
            b = pred[v]
            if b >= 0:
                f = fill[b]
                room = cap[f] - flow[f]
                v = btail[b]
            else:
                b = ~b
                f = fill[b]
                if f >= bstart[b + 1] or flow[f] == 0:
                    f -= 1
                room = flow[f]
                v = bhead[b]
            if room < delta:
                delta = room

        v = t
        while v != s:
            b = pred[v]
            if b >= 0:
                f = fill[b]
                flow[f] += delta
                if flow[f] == cap[f]:
                    fill[b] = f + 1
                v = btail[b]
            else:
                b = ~b
                f = fill[b]
                if f >= bstart[b + 1] or flow[f] == 0:
                    f -= 1
                flow[f] -= delta
                if f == fill[b] - 1:
                    fill[b] = f
                v = bhead[b]
        value += delta

    return np.array(flow, dtype=np.int64), value
