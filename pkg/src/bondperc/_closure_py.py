"""Pure-Python closure kernels.

Drop-in fallback for the compiled module ``bondperc._closure``; both expose
the same three functions with identical semantics.  Inputs are flat int32
arrays (CSR layout built by :mod:`bondperc.percolation`); the result is the
synchronous-round generation number per edge/vertex, ``-1`` for never
infected and ``0`` for the initial set.

Round semantics: an element saturated at the end of round ``t`` spreads in
round ``t+1``, and everything enabled at the start of a round fires
together.  The fixed point itself is order-independent; the rounds only pin
down a deterministic trace.
"""

from __future__ import annotations

import numpy as np


def bond_gens(n, m, ptr, eidx, eu, ev, seeds, r):
    """Edge process: a vertex incident to >= r infected edges infects all
    its incident edges."""
    ptr_l = ptr.tolist()
    eidx_l = eidx.tolist()
    eu_l = eu.tolist()
    ev_l = ev.tolist()
    gen = [-1] * m
    count = [0] * n
    for e in seeds.tolist():
        gen[e] = 0
        count[eu_l[e]] += 1
        count[ev_l[e]] += 1
    fired = [False] * n
    frontier = [v for v in range(n) if count[v] >= r]
    rnd = 0
    while frontier:
        rnd += 1
        newly = []
        for v in frontier:
            if fired[v]:
                continue
            fired[v] = True
            for k in range(ptr_l[v], ptr_l[v + 1]):
                e = eidx_l[k]
                if gen[e] < 0:
                    gen[e] = rnd
                    newly.append(e)
        if not newly:
            break
        frontier = []
        for e in newly:
            for w in (eu_l[e], ev_l[e]):
                count[w] += 1
                # counts cross r exactly once; >= r initial cases are in round 1
                if count[w] == r and not fired[w]:
                    frontier.append(w)
    return np.asarray(gen, dtype=np.int32)


def vertex_gens(n, ptr, nbr, seeds, r):
    """Vertex process: a vertex with >= r infected neighbours becomes
    infected."""
    ptr_l = ptr.tolist()
    nbr_l = nbr.tolist()
    gen = [-1] * n
    count = [0] * n
    for v in seeds.tolist():
        gen[v] = 0
    for v in seeds.tolist():
        for k in range(ptr_l[v], ptr_l[v + 1]):
            count[nbr_l[k]] += 1
    frontier = [v for v in range(n) if gen[v] < 0 and count[v] >= r]
    rnd = 0
    while frontier:
        rnd += 1
        newly = []
        for v in frontier:
            if gen[v] < 0:
                gen[v] = rnd
                newly.append(v)
        if not newly:
            break
        frontier = []
        for v in newly:
            for k in range(ptr_l[v], ptr_l[v + 1]):
                w = nbr_l[k]
                count[w] += 1
                if count[w] == r and gen[w] < 0:
                    frontier.append(w)
    return np.asarray(gen, dtype=np.int32)


def hyper_gens(nv, ne, eptr, everts, vptr, vedges, seeds, r):
    """Hypergraph process: a hyperedge containing >= r infected vertices
    infects all its vertices.  Vertices in no hyperedge never spread."""
    eptr_l = eptr.tolist()
    everts_l = everts.tolist()
    vptr_l = vptr.tolist()
    vedges_l = vedges.tolist()
    gen = [-1] * nv
    count = [0] * ne
    for v in seeds.tolist():
        gen[v] = 0
    for v in seeds.tolist():
        for k in range(vptr_l[v], vptr_l[v + 1]):
            count[vedges_l[k]] += 1
    fired = [False] * ne
    frontier = [s for s in range(ne) if count[s] >= r]
    rnd = 0
    while frontier:
        rnd += 1
        newly = []
        for s in frontier:
            if fired[s]:
                continue
            fired[s] = True
            for k in range(eptr_l[s], eptr_l[s + 1]):
                v = everts_l[k]
                if gen[v] < 0:
                    gen[v] = rnd
                    newly.append(v)
        if not newly:
            break
        frontier = []
        for v in newly:
            for k in range(vptr_l[v], vptr_l[v + 1]):
                s = vedges_l[k]
                count[s] += 1
                if count[s] == r and not fired[s]:
                    frontier.append(s)
    return np.asarray(gen, dtype=np.int32)
