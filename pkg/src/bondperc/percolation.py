"""Deterministic closure computation for the r-bond (edge) and r-neighbour
(vertex) bootstrap processes, plus the conversions between percolating
vertex sets and percolating edge sets.

The closure engine keeps a per-vertex counter of infected incident edges
(resp. infected neighbours) and a work queue of saturated vertices, so a
full cascade costs time linear in the number of infections.  Two
interchangeable kernels exist: a compiled Cython module and a pure-Python
twin.  The compiled one is preferred at import; set the environment
variable ``BONDPERC_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from .graphs import Graph, degrees, incident_edges

if os.environ.get("BONDPERC_PURE_PYTHON"):
    from . import _closure_py as _kernels

    BACKEND = "python"
else:
    try:
        from . import _closure as _kernels  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _closure_py as _kernels

        BACKEND = "python"

__all__ = [
    "BACKEND",
    "BondState",
    "VertexState",
    "bond_closure",
    "percolates_bond",
    "neighbour_closure",
    "percolates_vertex",
    "vertex_to_edge_percolating",
    "edge_to_vertex_percolating",
    "state_to_json_dict",
]


@dataclass(frozen=True)
class BondState:
    """Result of an edge-process cascade: the closed infected edge set and
    the synchronous-round trace (generation 0 is the initial set)."""

    infected: frozenset[int]
    trace: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class VertexState:
    """Vertex-process analogue of :class:`BondState`."""

    infected: frozenset[int]
    trace: tuple[frozenset[int], ...]


# ======================================================================
# CSR layouts for the kernels
# ======================================================================


@lru_cache(maxsize=None)
def _bond_csr(graph: Graph):
    inc = incident_edges(graph)
    ptr = np.zeros(graph.n + 1, dtype=np.int32)
    for v, es in enumerate(inc):
        ptr[v + 1] = ptr[v] + len(es)
    eidx = np.fromiter(
        (e for es in inc for e in es), dtype=np.int32, count=int(ptr[-1])
    )
    eu = np.fromiter((u for u, _ in graph.edges), dtype=np.int32, count=graph.num_edges)
    ev = np.fromiter((v for _, v in graph.edges), dtype=np.int32, count=graph.num_edges)
    return ptr, eidx, eu, ev


@lru_cache(maxsize=None)
def _adj_csr(graph: Graph):
    from .graphs import adjacency

    adj = adjacency(graph)
    ptr = np.zeros(graph.n + 1, dtype=np.int32)
    for v, ns in enumerate(adj):
        ptr[v + 1] = ptr[v] + len(ns)
    nbr = np.fromiter(
        (w for ns in adj for w in ns), dtype=np.int32, count=int(ptr[-1])
    )
    return ptr, nbr


def _seed_array(seed: Iterable[int], limit: int, what: str) -> np.ndarray:
    seed_set = sorted(set(seed))
    if seed_set and not (0 <= seed_set[0] and seed_set[-1] < limit):
        raise ValueError(f"{what} index out of range")
    return np.asarray(seed_set, dtype=np.int32)


def _trace_from_gens(gens: np.ndarray) -> tuple[frozenset[int], ...]:
    top = int(gens.max(initial=-1))
    buckets: list[list[int]] = [[] for _ in range(top + 1)]
    for i, g in enumerate(gens.tolist()):
        if g >= 0:
            buckets[g].append(i)
    if not buckets:
        buckets = [[]]
    return tuple(frozenset(b) for b in buckets)


# ======================================================================
# Closures
# ======================================================================


def _bond_gens(graph: Graph, infected: Iterable[int], r: int) -> np.ndarray:
    if r < 0:
        raise ValueError("infection threshold must be non-negative")
    ptr, eidx, eu, ev = _bond_csr(graph)
    seeds = _seed_array(infected, graph.num_edges, "edge")
    return _kernels.bond_gens(graph.n, graph.num_edges, ptr, eidx, eu, ev, seeds, r)


def bond_closure(graph: Graph, infected: Iterable[int], r: int) -> BondState:
    """Least fixed point of the r-bond rule from the given edge set.

    With ``r = 0`` every vertex is trivially saturated, so the closure is
    the whole edge set.  The result does not depend on processing order;
    the trace records synchronous rounds.
    """
    gens = _bond_gens(graph, infected, r)
    trace = _trace_from_gens(gens)
    return BondState(frozenset().union(*trace), trace)


def percolates_bond(graph: Graph, infected: Iterable[int], r: int) -> bool:
    """True iff the closure of ``infected`` is the entire edge set."""
    return bool((_bond_gens(graph, infected, r) >= 0).all())


def _vertex_gens(graph: Graph, infected: Iterable[int], r: int) -> np.ndarray:
    if r < 0:
        raise ValueError("infection threshold must be non-negative")
    ptr, nbr = _adj_csr(graph)
    seeds = _seed_array(infected, graph.n, "vertex")
    return _kernels.vertex_gens(graph.n, ptr, nbr, seeds, r)


def neighbour_closure(graph: Graph, infected: Iterable[int], r: int) -> VertexState:
    """Least fixed point of the r-neighbour rule from the given vertex set."""
    gens = _vertex_gens(graph, infected, r)
    trace = _trace_from_gens(gens)
    return VertexState(frozenset().union(*trace), trace)


def percolates_vertex(graph: Graph, infected: Iterable[int], r: int) -> bool:
    return bool((_vertex_gens(graph, infected, r) >= 0).all())


# ======================================================================
# Vertex <-> edge percolating-set conversions
# ======================================================================


def vertex_to_edge_percolating(
    graph: Graph, vertex_set: Iterable[int], r: int
) -> frozenset[int]:
    """Turn a percolating vertex set into a percolating edge set by seeding,
    for each vertex, its ``r`` lexicographically smallest incident edges
    (all of them when the degree is below ``r``).  At most ``r * |A|``
    edges.  Raises if the input does not vertex-percolate."""
    vertex_set = frozenset(vertex_set)
    if not percolates_vertex(graph, vertex_set, r):
        raise ValueError("vertex set does not percolate the r-neighbour process")
    inc = incident_edges(graph)
    out: set[int] = set()
    for v in vertex_set:
        out.update(inc[v][:r])
    return frozenset(out)


def edge_to_vertex_percolating(
    graph: Graph, edge_set: Iterable[int], r: int
) -> frozenset[int]:
    """Turn a percolating edge set into a percolating vertex set: the
    smaller endpoint of every seeded edge plus every vertex of degree below
    ``r``.  At most ``|F| + #{deg < r}`` vertices.  Raises if the input does
    not bond-percolate."""
    edge_set = frozenset(edge_set)
    if not percolates_bond(graph, edge_set, r):
        raise ValueError("edge set does not percolate the r-bond process")
    out = {graph.edges[e][0] for e in edge_set}
    out.update(v for v, d in enumerate(degrees(graph)) if d < r)
    return frozenset(out)


def state_to_json_dict(state: BondState | VertexState, percolated: bool) -> dict:
    """Infection-result JSON: percolated flag, closure size, and the round
    trace as sorted index lists."""
    return {
        "percolated": percolated,
        "closure_size": len(state.infected),
        "generations": [sorted(g) for g in state.trace],
    }
