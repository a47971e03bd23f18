# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled closure kernels; same contract as ``bondperc._closure_py``."""

import numpy as np


def bond_gens(int n, int m, int[::1] ptr, int[::1] eidx, int[::1] eu,
              int[::1] ev, int[::1] seeds, int r):
    gen_arr = np.full(m, -1, dtype=np.int32)
    cnt_arr = np.zeros(n, dtype=np.int32)
    fired_arr = np.zeros(n, dtype=np.uint8)
    cur_arr = np.empty(n, dtype=np.int32)
    nxt_arr = np.empty(n, dtype=np.int32)
    newly_arr = np.empty(m, dtype=np.int32)
    cdef int[::1] gen = gen_arr
    cdef int[::1] cnt = cnt_arr
    cdef unsigned char[::1] fired = fired_arr
    cdef int[::1] cur = cur_arr
    cdef int[::1] nxt = nxt_arr
    cdef int[::1] newly = newly_arr
    cdef Py_ssize_t i, k
    cdef int v, w, e, rnd, ncur, nnxt, nnew

    for i in range(seeds.shape[0]):
        e = seeds[i]
        gen[e] = 0
        cnt[eu[e]] += 1
        cnt[ev[e]] += 1
    ncur = 0
    for v in range(n):
        if cnt[v] >= r:
            cur[ncur] = v
            ncur += 1
    rnd = 0
    while ncur > 0:
        rnd += 1
        nnew = 0
        for i in range(ncur):
            v = cur[i]
            if fired[v]:
                continue
            fired[v] = 1
            for k in range(ptr[v], ptr[v + 1]):
                e = eidx[k]
                if gen[e] < 0:
                    gen[e] = rnd
                    newly[nnew] = e
                    nnew += 1
        if nnew == 0:
            break
        nnxt = 0
        for i in range(nnew):
            e = newly[i]
            w = eu[e]
            cnt[w] += 1
            if cnt[w] == r and not fired[w]:
                nxt[nnxt] = w
                nnxt += 1
            w = ev[e]
            cnt[w] += 1
            if cnt[w] == r and not fired[w]:
                nxt[nnxt] = w
                nnxt += 1
        cur, nxt = nxt, cur
        ncur = nnxt
    return gen_arr


def vertex_gens(int n, int[::1] ptr, int[::1] nbr, int[::1] seeds, int r):
    gen_arr = np.full(n, -1, dtype=np.int32)
    cnt_arr = np.zeros(n, dtype=np.int32)
    cur_arr = np.empty(n, dtype=np.int32)
    nxt_arr = np.empty(n, dtype=np.int32)
    cdef int[::1] gen = gen_arr
    cdef int[::1] cnt = cnt_arr
    cdef int[::1] cur = cur_arr
    cdef int[::1] nxt = nxt_arr
    cdef Py_ssize_t i, k
    cdef int v, w, rnd, ncur, nnxt

    for i in range(seeds.shape[0]):
        gen[seeds[i]] = 0
    for i in range(seeds.shape[0]):
        v = seeds[i]
        for k in range(ptr[v], ptr[v + 1]):
            cnt[nbr[k]] += 1
    ncur = 0
    for v in range(n):
        if gen[v] < 0 and cnt[v] >= r:
            cur[ncur] = v
            ncur += 1
    rnd = 0
    while ncur > 0:
        rnd += 1
        for i in range(ncur):
            gen[cur[i]] = rnd
        nnxt = 0
        for i in range(ncur):
            v = cur[i]
            for k in range(ptr[v], ptr[v + 1]):
                w = nbr[k]
                cnt[w] += 1
                if cnt[w] == r and gen[w] < 0:
                    nxt[nnxt] = w
                    nnxt += 1
        cur, nxt = nxt, cur
        ncur = nnxt
    return gen_arr


def hyper_gens(int nv, int ne, int[::1] eptr, int[::1] everts, int[::1] vptr,
               int[::1] vedges, int[::1] seeds, int r):
    gen_arr = np.full(nv, -1, dtype=np.int32)
    cnt_arr = np.zeros(ne, dtype=np.int32)
    fired_arr = np.zeros(ne, dtype=np.uint8)
    cur_arr = np.empty(ne, dtype=np.int32)
    nxt_arr = np.empty(ne, dtype=np.int32)
    newly_arr = np.empty(nv, dtype=np.int32)
    cdef int[::1] gen = gen_arr
    cdef int[::1] cnt = cnt_arr
    cdef unsigned char[::1] fired = fired_arr
    cdef int[::1] cur = cur_arr
    cdef int[::1] nxt = nxt_arr
    cdef int[::1] newly = newly_arr
    cdef Py_ssize_t i, k
    cdef int v, s, rnd, ncur, nnxt, nnew

    for i in range(seeds.shape[0]):
        gen[seeds[i]] = 0
    for i in range(seeds.shape[0]):
        v = seeds[i]
        for k in range(vptr[v], vptr[v + 1]):
            cnt[vedges[k]] += 1
    ncur = 0
    for s in range(ne):
        if cnt[s] >= r:
            cur[ncur] = s
            ncur += 1
    rnd = 0
    while ncur > 0:
        rnd += 1
        nnew = 0
        for i in range(ncur):
            s = cur[i]
            if fired[s]:
                continue
            fired[s] = 1
            for k in range(eptr[s], eptr[s + 1]):
                v = everts[k]
                if gen[v] < 0:
                    gen[v] = rnd
                    newly[nnew] = v
                    nnew += 1
        if nnew == 0:
            break
        nnxt = 0
        for i in range(nnew):
            v = newly[i]
            for k in range(vptr[v], vptr[v + 1]):
                s = vedges[k]
                cnt[s] += 1
                if cnt[s] == r and not fired[s]:
                    nxt[nnxt] = s
                    nnxt += 1
        cur, nxt = nxt, cur
        ncur = nnxt
    return gen_arr
