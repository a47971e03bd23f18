"""Shared corpus builders and slow reference implementations.

The reference closures and minimum searches here are deliberately naive
(rescan until nothing changes, enumerate every subset) and independent of
the package's counter-based engine and pruned search; tests compare the
two routes.
"""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from bondperc.graphs import Graph, adjacency, incident_edges, make_random_graph


def corpus(count: int, sizes, ps, seed0: int = 0) -> list[Graph]:
    """Deterministic list of random graphs cycling over sizes and edge
    probabilities."""
    out = []
    i = 0
    while len(out) < count:
        n = sizes[i % len(sizes)]
        p = ps[(i // len(sizes)) % len(ps)]
        out.append(make_random_graph(n, p, seed0 + i))
        i += 1
    return out


# ----------------------------------------------------------------------
# Slow reference closures (rescan until stable; optional random async order)
# ----------------------------------------------------------------------


def ref_bond_closure(graph: Graph, seed, r: int, rng: random.Random | None = None):
    """Reference r-bond closure.  With ``rng`` the enabled infections fire
    one at a time in random order (asynchronous schedule); without it, whole
    sweeps fire at once.  Either way the fixed point is returned."""
    inc = incident_edges(graph)
    infected = set(seed)
    while True:
        enabled = []
        for v in range(graph.n):
            if sum(1 for e in inc[v] if e in infected) >= r:
                enabled.extend(e for e in inc[v] if e not in infected)
        if not enabled:
            return frozenset(infected)
        if rng is None:
            infected.update(enabled)
        else:
            infected.add(rng.choice(enabled))


def ref_vertex_closure(graph: Graph, seed, r: int, rng: random.Random | None = None):
    adj = adjacency(graph)
    infected = set(seed)
    while True:
        enabled = [
            v
            for v in range(graph.n)
            if v not in infected
            and sum(1 for w in adj[v] if w in infected) >= r
        ]
        if not enabled:
            return frozenset(infected)
        if rng is None:
            infected.update(enabled)
        else:
            infected.add(rng.choice(enabled))


# ----------------------------------------------------------------------
# Slow exhaustive minima (no pruning, no hints)
# ----------------------------------------------------------------------


def ref_min_bond(graph: Graph, r: int) -> int:
    m = graph.num_edges
    if r == 0:
        return 0
    for s in range(m + 1):
        for subset in combinations(range(m), s):
            if len(ref_bond_closure(graph, subset, r)) == m:
                return s
    raise AssertionError("full edge set must percolate")


def ref_min_vertex(graph: Graph, r: int) -> int:
    if r == 0:
        return 0
    for s in range(graph.n + 1):
        for subset in combinations(range(graph.n), s):
            if len(ref_vertex_closure(graph, subset, r)) == graph.n:
                return s
    raise AssertionError("full vertex set must percolate")


@pytest.fixture(scope="session")
def small_corpus() -> list[Graph]:
    """Forty-five small graphs used by the slower dual-route tests."""
    return corpus(45, sizes=[3, 4, 5, 6], ps=[0.3, 0.5, 0.7], seed0=100)
