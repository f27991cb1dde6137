# cython: boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled twin of ``_kernels_py``; same signatures, same results."""

import numpy as np
cimport numpy as cnp
from libcpp.queue cimport priority_queue
from libcpp.pair cimport pair
from libcpp.vector cimport vector

ctypedef long long i64
ctypedef pair[i64, i64] entry

cdef i64 INF = (<i64>1) << 62

cnp.import_array()


def dijkstra_csr(i64 n, i64 s, const i64[::1] indptr, const i64[::1] arc_ids,
                 const i64[::1] heads, const i64[::1] lengths):
    cdef cnp.ndarray[i64, ndim=1] out = np.full(n, INF, dtype=np.int64)
    cdef i64[::1] dist = out
    cdef priority_queue[entry] heap
    cdef i64 d, u, v, j, a, nd
    dist[s] = 0
    heap.push(entry(0, -s))
    while not heap.empty():
        d = -heap.top().first
        u = -heap.top().second
        heap.pop()
        if d > dist[u]:
            continue
        for j in range(indptr[u], indptr[u + 1]):
            a = arc_ids[j]
            v = heads[a]
            nd = d + lengths[a]
            if nd < dist[v]:
                dist[v] = nd
                heap.push(entry(-nd, -v))
    out[out == INF] = -1
    return out


def ssp(i64 n, i64 s, i64 t, i64 requirement,
        const i64[::1] btail, const i64[::1] bhead, const i64[::1] bstart,
        const i64[::1] cap, const i64[::1] cost,
        const i64[::1] out_ptr, const i64[::1] out_bund,
        const i64[::1] in_ptr, const i64[::1] in_bund,
        const i64[::1] pi_in):
    cdef i64 nb = btail.shape[0]
    cdef cnp.ndarray[i64, ndim=1] flow_arr = np.zeros(cap.shape[0], dtype=np.int64)
    cdef i64[::1] flow = flow_arr
    cdef vector[i64] fill = vector[i64](nb)
    cdef vector[i64] pi = vector[i64](n)
    cdef vector[i64] dist = vector[i64](n)
    cdef vector[i64] pred = vector[i64](n)
    cdef priority_queue[entry] heap
    cdef i64 value = 0, d, u, v, j, b, f, nd, pu, dt, dv, delta, room
    for b in range(nb):
        fill[b] = bstart[b]
    for v in range(n):
        pi[v] = pi_in[v]

    while value < requirement:
        for v in range(n):
            dist[v] = INF
            pred[v] = -1
        dist[s] = 0
        while not heap.empty():
            heap.pop()
        heap.push(entry(0, -s))
        while not heap.empty():
            d = -heap.top().first
            u = -heap.top().second
            heap.pop()
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
                        heap.push(entry(-nd, -v))
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
                        heap.push(entry(-nd, -v))
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

    return flow_arr, value
