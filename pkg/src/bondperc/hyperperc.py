"""Hypergraph infection: the common generalization of the bond process.

Vertices of a hypergraph are infected; a hyperedge containing at least
``r`` infected vertices infects all its vertices.  A graph's edge process
is the special case where hypergraph vertices are the graph's edges and
each graph vertex contributes the hyperedge of its incident edges.  The
dimension bound carries over with one polynomial per hyperedge, agreeing
at the (per-hyperedge distinct) colours of shared vertices; vertices in no
hyperedge can never be infected, so they sit in every percolating set and
contribute one free dimension each.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import exactla
from .graphs import Graph, incident_edges
from .oracle import OracleResult, ascending_search
from .percolation import VertexState, _kernels, _seed_array, _trace_from_gens

__all__ = [
    "Hypergraph",
    "check_hyper_colouring",
    "hyper_closure",
    "percolates_hyper",
    "graph_to_hypergraph",
    "hyper_dim_W",
    "min_percolating_hyper",
    "hypergraph_to_json_dict",
    "hypergraph_from_json_dict",
]


@dataclass(frozen=True)
class Hypergraph:
    """Vertices ``0..n-1`` plus a canonically ordered list of non-empty
    hyperedges (each a strictly increasing vertex tuple; the list itself is
    sorted, duplicates permitted)."""

    n: int
    hyperedges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        prev = None
        for s in self.hyperedges:
            if not s:
                raise ValueError("hyperedges must be non-empty")
            if any(not 0 <= v < self.n for v in s):
                raise ValueError(f"hyperedge {s} out of range for n={self.n}")
            if any(a >= b for a, b in zip(s, s[1:])):
                raise ValueError(f"hyperedge {s} not strictly increasing")
            if prev is not None and s < prev:
                raise ValueError("hyperedge list not sorted")
            prev = s


def check_hyper_colouring(hypergraph: Hypergraph, colouring: Sequence[int]) -> bool:
    """True iff vertices within each hyperedge have pairwise distinct
    colours."""
    if len(colouring) != hypergraph.n:
        raise ValueError("colouring length must equal the vertex count")
    return all(
        len({colouring[v] for v in s}) == len(s) for s in hypergraph.hyperedges
    )


@lru_cache(maxsize=None)
def _hyper_csr(hypergraph: Hypergraph):
    ne = len(hypergraph.hyperedges)
    eptr = np.zeros(ne + 1, dtype=np.int32)
    for i, s in enumerate(hypergraph.hyperedges):
        eptr[i + 1] = eptr[i] + len(s)
    everts = np.fromiter(
        (v for s in hypergraph.hyperedges for v in s), dtype=np.int32,
        count=int(eptr[-1]),
    )
    membership: list[list[int]] = [[] for _ in range(hypergraph.n)]
    for i, s in enumerate(hypergraph.hyperedges):
        for v in s:
            membership[v].append(i)
    vptr = np.zeros(hypergraph.n + 1, dtype=np.int32)
    for v, ms in enumerate(membership):
        vptr[v + 1] = vptr[v] + len(ms)
    vedges = np.fromiter(
        (i for ms in membership for i in ms), dtype=np.int32, count=int(vptr[-1])
    )
    return eptr, everts, vptr, vedges


def _hyper_gens(hypergraph: Hypergraph, infected: Iterable[int], r: int) -> np.ndarray:
    if r < 0:
        raise ValueError("infection threshold must be non-negative")
    eptr, everts, vptr, vedges = _hyper_csr(hypergraph)
    seeds = _seed_array(infected, hypergraph.n, "vertex")
    return _kernels.hyper_gens(
        hypergraph.n, len(hypergraph.hyperedges), eptr, everts, vptr, vedges, seeds, r
    )


def hyper_closure(hypergraph: Hypergraph, infected: Iterable[int], r: int) -> VertexState:
    """Least fixed point of the hyperedge rule; at ``r = 0`` every covered
    vertex is infected.  Trace semantics as in the graph processes."""
    gens = _hyper_gens(hypergraph, infected, r)
    trace = _trace_from_gens(gens)
    return VertexState(frozenset().union(*trace), trace)


def percolates_hyper(hypergraph: Hypergraph, infected: Iterable[int], r: int) -> bool:
    """True iff the closure is every vertex (uncovered vertices must be
    seeded)."""
    return bool((_hyper_gens(hypergraph, infected, r) >= 0).all())


def graph_to_hypergraph(graph: Graph) -> Hypergraph:
    """The reduction: hypergraph vertices are the graph's edge indices and
    each graph vertex of positive degree contributes the hyperedge of its
    incident edges.  Edge-process cascades on the graph and vertex-process
    cascades here coincide generation by generation."""
    hyperedges = sorted(es for es in incident_edges(graph) if es)
    return Hypergraph(graph.num_edges, tuple(hyperedges))


def _covered(hypergraph: Hypergraph) -> list[bool]:
    covered = [False] * hypergraph.n
    for s in hypergraph.hyperedges:
        for v in s:
            covered[v] = True
    return covered


def hyper_dim_W(hypergraph: Hypergraph, colouring: Sequence[int], r: int) -> int:
    """Exact dimension of the recognizable vertex functions: families of
    per-hyperedge polynomials of degree <= r-1 agreeing at shared vertices'
    colours, evaluated at each covered vertex; uncovered vertices add one
    dimension each."""
    if not check_hyper_colouring(hypergraph, colouring):
        raise ValueError("colouring not distinct within some hyperedge")
    if r < 0:
        raise ValueError("r must be non-negative")
    covered = _covered(hypergraph)
    uncovered = covered.count(False)
    if r == 0 or not any(covered):
        return uncovered
    ne = len(hypergraph.hyperedges)
    ncols = ne * r
    owner: dict[int, int] = {}
    rows: list[list[int]] = []
    for i, s in enumerate(hypergraph.hyperedges):
        for v in s:
            if v not in owner:
                owner[v] = i
                continue
            t = colouring[v]
            row = [0] * ncols
            power = 1
            for j in range(r):
                row[owner[v] * r + j] = power
                row[i * r + j] -= power
                power *= t
            rows.append(row)
    kernel = exactla.nullspace_int(rows, ncols)
    if not kernel:
        return uncovered
    vertices = [v for v in range(hypergraph.n) if covered[v]]
    value_rows = []
    for coeffs in kernel:
        row = []
        for v in vertices:
            t = colouring[v]
            i = owner[v]
            acc = 0
            for j in reversed(range(r)):
                acc = acc * t + coeffs[i * r + j]
            row.append(acc)
        value_rows.append(row)
    return exactla.rank(value_rows) + uncovered


def min_percolating_hyper(
    hypergraph: Hypergraph, r: int, budget: int | None = None
) -> OracleResult:
    """Exact minimum percolating vertex set; uncovered vertices are part of
    every candidate.  Budget semantics as in :mod:`bondperc.oracle`."""
    if r < 0:
        raise ValueError("r must be non-negative")
    covered = _covered(hypergraph)
    mandatory = [v for v in range(hypergraph.n) if not covered[v]]
    free = [v for v in range(hypergraph.n) if covered[v]]
    return ascending_search(
        free,
        mandatory,
        lambda seed: percolates_hyper(hypergraph, seed, r),
        0,
        hypergraph.n,
        budget,
    )


def hypergraph_to_json_dict(hypergraph: Hypergraph) -> dict:
    return {
        "n": hypergraph.n,
        "hyperedges": [list(s) for s in hypergraph.hyperedges],
    }


def hypergraph_from_json_dict(data: dict) -> Hypergraph:
    try:
        n = data["n"]
        raw = data["hyperedges"]
    except (TypeError, KeyError) as exc:
        raise ValueError("hypergraph JSON needs keys 'n' and 'hyperedges'") from exc
    hyperedges = sorted(tuple(sorted(set(map(int, s)))) for s in raw)
    return Hypergraph(int(n), tuple(hyperedges))
