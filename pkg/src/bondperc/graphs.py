"""Immutable simple graphs with a canonical edge order, plus the generators
used throughout the package (paths, cycles, Cartesian products, grids, tori,
hypercubes, seeded random graphs).

The edge order is part of a graph's identity: every edge-indexed quantity in
this package (infection states, edge functions, colourings) is a vector in
the order of ``Graph.edges``.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

__all__ = [
    "Graph",
    "SINGLE_VERTEX",
    "make_path",
    "make_cycle",
    "cartesian_product",
    "make_grid",
    "make_torus",
    "make_hypercube",
    "make_random_graph",
    "degree_histogram",
    "degrees",
    "max_degree",
    "incident_edges",
    "adjacency",
    "edge_index_map",
    "graph_to_json_dict",
    "graph_from_json_dict",
    "load_graph",
    "dump_graph",
]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` is a tuple of pairs ``(u, v)`` with ``u < v``, strictly
    increasing lexicographically.  The position of a pair in this tuple is
    the edge's index (its *EdgeIndex*), and that canonical order is part of
    graph equality.  Instances are immutable values; all operations build
    new graphs.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        prev = None
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge {e} out of range for n={self.n} (need 0 <= u < v < n)")
            if prev is not None and e <= prev:
                raise ValueError(f"edge list not strictly increasing at {e}")
            prev = e

    @property
    def num_edges(self) -> int:
        return len(self.edges)


#: The one-vertex, zero-edge graph: base case of every product recursion.
SINGLE_VERTEX = Graph(1, ())


# ======================================================================
# Cached per-graph lookups
# ======================================================================


@lru_cache(maxsize=None)
def edge_index_map(graph: Graph) -> dict[tuple[int, int], int]:
    """Map each canonical edge pair to its index. Treat as read-only."""
    return {e: i for i, e in enumerate(graph.edges)}


@lru_cache(maxsize=None)
def incident_edges(graph: Graph) -> tuple[tuple[int, ...], ...]:
    """Per vertex, the ascending tuple of incident edge indices."""
    inc: list[list[int]] = [[] for _ in range(graph.n)]
    for i, (u, v) in enumerate(graph.edges):
        inc[u].append(i)
        inc[v].append(i)
    return tuple(tuple(es) for es in inc)


@lru_cache(maxsize=None)
def adjacency(graph: Graph) -> tuple[tuple[int, ...], ...]:
    """Per vertex, the ascending tuple of neighbouring vertices."""
    adj: list[list[int]] = [[] for _ in range(graph.n)]
    for u, v in graph.edges:
        adj[u].append(v)
        adj[v].append(u)
    return tuple(tuple(sorted(ns)) for ns in adj)


def degrees(graph: Graph) -> tuple[int, ...]:
    return tuple(len(es) for es in incident_edges(graph))


def max_degree(graph: Graph) -> int:
    return max(degrees(graph), default=0)


def degree_histogram(graph: Graph) -> dict[int, int]:
    """Count vertices by exact degree; values sum to ``graph.n``."""
    return dict(Counter(degrees(graph)))


# ======================================================================
# Generators
# ======================================================================


def make_path(k: int) -> Graph:
    """Path on vertices ``0..k-1`` with edges ``(i, i+1)``."""
    if k < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(k, tuple((i, i + 1) for i in range(k - 1)))


def make_cycle(k: int) -> Graph:
    """Cycle on vertices ``0..k-1`` with edges ``(i, (i+1) mod k)``."""
    if k < 3:
        raise ValueError("cycle needs at least three vertices")
    pairs = sorted(tuple(sorted((i, (i + 1) % k))) for i in range(k))
    return Graph(k, tuple(pairs))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product: one copy of ``g`` per vertex of ``h`` plus a
    perfect matching between copies for every edge of ``h``.

    Vertex ``(u, v)`` is encoded row-major as ``u * h.n + v``.  This
    encoding (and the canonical re-sort) fixes the product's edge order,
    which all downstream edge-indexed vectors depend on.
    """
    hn = h.n
    edges: list[tuple[int, int]] = []
    for u1, u2 in g.edges:
        base1, base2 = u1 * hn, u2 * hn
        for v in range(hn):
            edges.append((base1 + v, base2 + v))
    for u in range(g.n):
        base = u * hn
        for v1, v2 in h.edges:
            edges.append((base + v1, base + v2))
    edges.sort()
    return Graph(g.n * hn, tuple(edges))


def make_grid(dims: list[int]) -> Graph:
    """Left-fold of path factors ``P_{a}`` over ``dims`` (each >= 2),
    starting from the single-vertex graph.  ``dims == []`` gives
    ``SINGLE_VERTEX``."""
    for a in dims:
        if a < 2:
            raise ValueError(f"grid dimension {a} out of range (need >= 2)")
    return reduce(cartesian_product, (make_path(a) for a in dims), SINGLE_VERTEX)


def make_torus(dims: list[int]) -> Graph:
    """Left-fold of cycle factors ``C_{a}`` over ``dims`` (each >= 3)."""
    for a in dims:
        if a < 3:
            raise ValueError(f"torus dimension {a} out of range (need >= 3)")
    return reduce(cartesian_product, (make_cycle(a) for a in dims), SINGLE_VERTEX)


def make_hypercube(d: int) -> Graph:
    """d-fold product of single edges; vertex bits are read most-significant
    first, i.e. coordinate ``j`` (1-based) of vertex ``x`` is bit ``d-j``."""
    if d < 0:
        raise ValueError("hypercube dimension must be non-negative")
    return make_grid([2] * d)


def make_random_graph(n: int, p: float | Fraction, seed: int) -> Graph:
    """Erdos-Renyi style graph: every pair ``u < v``, visited in
    lexicographic order, is kept when ``rng.random() < p`` where ``rng`` is
    ``random.Random(seed)`` (one draw per pair).  Same seed, same graph.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if not 0 <= p <= 1:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = tuple(
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    )
    return Graph(n, edges)


# ======================================================================
# JSON round-trip
# ======================================================================


def graph_to_json_dict(graph: Graph) -> dict:
    return {"n": graph.n, "edges": [[u, v] for u, v in graph.edges]}


def graph_from_json_dict(data: dict) -> Graph:
    """Load ``{"n": int, "edges": [[u, v], ...]}``, normalizing each pair to
    ``u < v`` and re-sorting into canonical order; duplicate or out-of-range
    edges raise ``ValueError``."""
    try:
        n = data["n"]
        raw = data["edges"]
    except (TypeError, KeyError) as exc:
        raise ValueError("graph JSON needs keys 'n' and 'edges'") from exc
    if not isinstance(n, int):
        raise ValueError("'n' must be an integer")
    pairs = []
    for item in raw:
        u, v = item
        if not (isinstance(u, int) and isinstance(v, int)):
            raise ValueError(f"non-integer edge {item}")
        if u == v:
            raise ValueError(f"self-loop {item}")
        pairs.append((min(u, v), max(u, v)))
    pairs.sort()
    for a, b in zip(pairs, pairs[1:]):
        if a == b:
            raise ValueError(f"duplicate edge {a}")
    return Graph(n, tuple(pairs))


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_json_dict(json.load(fh))


def dump_graph(graph: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(graph_to_json_dict(graph), fh)
        fh.write("\n")
