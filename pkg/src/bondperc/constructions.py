"""Percolating edge sets for products, tori, grids and hypercubes.

The generic lifts seed one copy of the base graph with an r-percolating
set, the middle copies with (r-1)-percolating sets, and (for cycles) the
last copy with an (r-2)-percolating set; vertices whose base degree is too
low to ever saturate get pre-infected matching edges.  Iterating a lift
over the factors of a torus or grid yields sets whose sizes match the
recursion values in :mod:`bondperc.formulas` and whose minimality the
witness dimension certifies.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graphs import (
    Graph,
    SINGLE_VERTEX,
    cartesian_product,
    degrees,
    edge_index_map,
    make_cycle,
    make_hypercube,
    make_path,
)
from .percolation import percolates_bond

__all__ = [
    "lift_cycle_percolating",
    "lift_path_percolating",
    "build_torus_set",
    "build_grid_set",
    "build_hypercube_set",
    "build_hypercube_set_recursive",
    "edge_set_to_pairs",
    "edge_set_from_pairs",
]


def _check_percolates(graph: Graph, edge_set: frozenset[int], r: int, label: str) -> None:
    if r <= 0:
        return  # threshold 0 spreads everywhere, any seed works
    if not percolates_bond(graph, edge_set, r):
        raise ValueError(f"{label} does not percolate at threshold {r}")


def _copy_edge(index, k: int, u: int, v: int, pos: int) -> int:
    return index[(u * k + pos, v * k + pos)]


def _rung_edge(index, k: int, v: int, i: int) -> int:
    a, b = v * k + i, v * k + (i + 1) % k
    return index[(min(a, b), max(a, b))]


def lift_cycle_percolating(
    graph: Graph,
    set_r: Iterable[int],
    set_rm1: Iterable[int],
    set_rm2: Iterable[int],
    k: int,
    r: int,
) -> frozenset[int]:
    """Percolating set on ``graph x C_k`` at threshold ``r`` built from
    percolating sets of ``graph`` at thresholds r, r-1, r-2.

    Copy 1 gets ``set_r``, copies 2..k-1 get ``set_rm1``, copy k gets
    ``set_rm2``.  A base vertex of degree exactly r-1 additionally seeds
    its wrap-around matching edge (copy 1 to copy k); a vertex of degree
    below r-1 seeds its whole fibre cycle, since none of those edges can
    ever be infected.  Inputs are checked to percolate at their threshold
    (thresholds <= 0 need nothing, the empty set suffices).
    """
    if r < 1:
        raise ValueError("lift needs r >= 1")
    if k < 3:
        raise ValueError("cycle lift needs k >= 3")
    set_r, set_rm1, set_rm2 = frozenset(set_r), frozenset(set_rm1), frozenset(set_rm2)
    _check_percolates(graph, set_r, r, "set_r")
    _check_percolates(graph, set_rm1, r - 1, "set_rm1")
    _check_percolates(graph, set_rm2, r - 2, "set_rm2")
    product = cartesian_product(graph, make_cycle(k))
    index = edge_index_map(product)
    out: set[int] = set()
    for e in set_r:
        u, v = graph.edges[e]
        out.add(_copy_edge(index, k, u, v, 0))
    for pos in range(1, k - 1):
        for e in set_rm1:
            u, v = graph.edges[e]
            out.add(_copy_edge(index, k, u, v, pos))
    for e in set_rm2:
        u, v = graph.edges[e]
        out.add(_copy_edge(index, k, u, v, k - 1))
    for v, d in enumerate(degrees(graph)):
        if d == r - 1:
            out.add(_rung_edge(index, k, v, k - 1))  # joins copies 1 and k
        elif d < r - 1:
            out.update(_rung_edge(index, k, v, i) for i in range(k))
    return frozenset(out)


def lift_path_percolating(
    graph: Graph,
    set_r: Iterable[int],
    set_rm1: Iterable[int],
    k: int,
    r: int,
) -> frozenset[int]:
    """Path analogue on ``graph x P_k``: copy 1 gets ``set_r`` and every
    later copy ``set_rm1`` (the last copy only ever receives one external
    infected edge, so r-2 is not enough there).  Degree-(r-1) vertices seed
    the matching edge between copies 1 and 2; lower-degree vertices seed
    their whole fibre path (k-1 edges)."""
    if r < 1:
        raise ValueError("lift needs r >= 1")
    if k < 2:
        raise ValueError("path lift needs k >= 2")
    set_r, set_rm1 = frozenset(set_r), frozenset(set_rm1)
    _check_percolates(graph, set_r, r, "set_r")
    _check_percolates(graph, set_rm1, r - 1, "set_rm1")
    product = cartesian_product(graph, make_path(k))
    index = edge_index_map(product)
    out: set[int] = set()
    for e in set_r:
        u, v = graph.edges[e]
        out.add(_copy_edge(index, k, u, v, 0))
    for pos in range(1, k):
        for e in set_rm1:
            u, v = graph.edges[e]
            out.add(_copy_edge(index, k, u, v, pos))
    for v, d in enumerate(degrees(graph)):
        if d == r - 1:
            out.add(_rung_edge(index, k, v, 0))
        elif d < r - 1:
            out.update(_rung_edge(index, k, v, i) for i in range(k - 1))
    return frozenset(out)


def _build_product_set(dims: Sequence[int], r: int, kind: str) -> frozenset[int]:
    """Iterate the lift over the factors, carrying percolating sets for
    every threshold 0..r (threshold 0 stays empty; thresholds the factor
    graph cannot spread at come out as its full edge set)."""
    if r < 0:
        raise ValueError("r must be non-negative")
    graph = SINGLE_VERTEX
    table: dict[int, frozenset[int]] = {rr: frozenset() for rr in range(r + 1)}
    for a in dims:
        new_table: dict[int, frozenset[int]] = {}
        for rr in range(r + 1):
            if rr == 0:
                new_table[rr] = frozenset()
            elif kind == "cycle":
                new_table[rr] = lift_cycle_percolating(
                    graph,
                    table[rr],
                    table.get(rr - 1, frozenset()),
                    table.get(rr - 2, frozenset()),
                    a,
                    rr,
                )
            else:
                new_table[rr] = lift_path_percolating(
                    graph, table[rr], table.get(rr - 1, frozenset()), a, rr
                )
        table = new_table
        factor = make_cycle(a) if kind == "cycle" else make_path(a)
        graph = cartesian_product(graph, factor)
    return table[r]


def build_torus_set(dims: Sequence[int], r: int) -> frozenset[int]:
    """Percolating edge set for the torus over ``dims`` (each >= 3) whose
    size equals ``formulas.torus_recursion(dims, r)``."""
    for a in dims:
        if a < 3:
            raise ValueError(f"torus dimension {a} out of range (need >= 3)")
    return _build_product_set(dims, r, "cycle")


def build_grid_set(dims: Sequence[int], r: int) -> frozenset[int]:
    """Percolating edge set for the grid over ``dims`` (each >= 2) whose
    size equals ``formulas.grid_recursion(dims, r)``."""
    for a in dims:
        if a < 2:
            raise ValueError(f"grid dimension {a} out of range (need >= 2)")
    return _build_product_set(dims, r, "path")


def _hypercube_pairs_closed(d: int, r: int) -> set[tuple[int, int]]:
    # Edge {x, x with coordinate j flipped} is kept when the first j-1
    # coordinates sum to at least d-r; coordinate j of vertex x is bit d-j.
    out: set[tuple[int, int]] = set()
    for x in range(1 << d):
        prefix = 0
        for j in range(1, d + 1):
            if prefix >= d - r:
                y = x ^ (1 << (d - j))
                out.add((min(x, y), max(x, y)))
            prefix += (x >> (d - j)) & 1
    return out


def _hypercube_pairs_recursive(d: int, r: int) -> set[tuple[int, int]]:
    # Split on the first coordinate: the sub-cube with it set keeps
    # threshold r, the other drops to r-1.  (Splitting on the first rather
    # than the last coordinate is what makes this coincide with the closed
    # form above as a set, not just up to relabelling.)
    if r == 0:
        return set()
    if d == r:
        out = set()
        for x in range(1 << d):
            for b in range(d):
                y = x ^ (1 << b)
                if x < y:
                    out.add((x, y))
        return out
    top = 1 << (d - 1)
    out = {(a + top, b + top) for a, b in _hypercube_pairs_recursive(d - 1, r)}
    out.update(_hypercube_pairs_recursive(d - 1, r - 1))
    return out


def _pairs_to_indices(d: int, pairs: set[tuple[int, int]]) -> frozenset[int]:
    index = edge_index_map(make_hypercube(d))
    return frozenset(index[p] for p in sorted(pairs))


def build_hypercube_set(d: int, r: int) -> frozenset[int]:
    """The explicit percolating set in the d-cube at threshold ``r``
    (0 <= r <= d): empty at r=0, everything at r=d, otherwise the union of
    the set at threshold r in one facet and at r-1 in the other.  Returned
    as edge indices of ``make_hypercube(d)``; size is
    ``formulas.hypercube_set_size(d, r)``."""
    if not 0 <= r <= d:
        raise ValueError("need 0 <= r <= d")
    return _pairs_to_indices(d, _hypercube_pairs_closed(d, r))


def build_hypercube_set_recursive(d: int, r: int) -> frozenset[int]:
    """Same set as :func:`build_hypercube_set`, built by the facet
    recursion; exposed separately so the two routes can be compared."""
    if not 0 <= r <= d:
        raise ValueError("need 0 <= r <= d")
    return _pairs_to_indices(d, _hypercube_pairs_recursive(d, r))


def edge_set_to_pairs(graph: Graph, edge_set: Iterable[int]) -> list[list[int]]:
    """Serialize an edge-index set as a sorted list of ``[u, v]`` pairs."""
    return [list(graph.edges[e]) for e in sorted(edge_set)]


def edge_set_from_pairs(graph: Graph, pairs: Iterable[Sequence[int]]) -> frozenset[int]:
    index = edge_index_map(graph)
    out = set()
    for u, v in pairs:
        key = (min(u, v), max(u, v))
        if key not in index:
            raise ValueError(f"edge {list(key)} not in graph")
        out.add(index[key])
    return frozenset(out)
