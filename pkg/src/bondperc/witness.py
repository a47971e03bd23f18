"""The polynomial-method lower bound for bond percolation.

An edge function ``phi`` is *recognized* by a family of per-vertex
polynomials ``p_v`` of degree <= r-1 when ``p_u(c_e) = p_v(c_e) = phi(e)``
for every edge ``e = uv``, where ``c`` is a proper edge colouring.  The
recognizable functions form a vector space whose dimension lower-bounds the
size of every percolating edge set at threshold ``r``: once a vertex sees
``r`` infected edges its polynomial has ``r`` roots and must vanish, so a
function vanishing on a percolating set vanishes everywhere.

This module computes that dimension exactly (fraction-free integer
elimination), produces explicit bases with their recognizers, and lifts
bases through Cartesian products with cycles and paths, mirroring the
inductive constructions that make the bound tight on tori and grids.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import exactla
from .exactla import lagrange_interpolation, poly_eval, poly_mul, poly_scale
from .graphs import (
    Graph,
    SINGLE_VERTEX,
    cartesian_product,
    degrees,
    edge_index_map,
    incident_edges,
    make_cycle,
    make_path,
)

__all__ = [
    "WitnessBasis",
    "check_proper",
    "greedy_colouring",
    "product_colouring",
    "recursive_product_colouring",
    "witness_dimension",
    "witness_basis",
    "recognize",
    "family_recognizes",
    "validate_basis",
    "lift_basis_cycle",
    "lift_basis_path",
    "basis_to_json_dict",
]

Colouring = Sequence[int]
PolyFamily = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class WitnessBasis:
    """A linearly independent family of recognizable edge functions together
    with one recognizing polynomial family per vector.

    ``vectors[i][e]`` is the value on edge ``e``; ``recognizers[i][v]`` is
    the coefficient tuple (constant term first, length <= r) of ``p_v``.
    """

    graph: Graph
    colouring: tuple[int, ...]
    r: int
    vectors: tuple[tuple[Fraction, ...], ...]
    recognizers: tuple[PolyFamily, ...]

    def __len__(self) -> int:
        return len(self.vectors)


# ======================================================================
# Colourings
# ======================================================================


def check_proper(graph: Graph, colouring: Colouring) -> bool:
    """True iff edges sharing a vertex all have distinct colours."""
    if len(colouring) != graph.num_edges:
        raise ValueError("colouring length must equal the edge count")
    for edge_ids in incident_edges(graph):
        seen = {colouring[e] for e in edge_ids}
        if len(seen) != len(edge_ids):
            return False
    return True


def _require_proper(graph: Graph, colouring: Colouring) -> None:
    if not check_proper(graph, colouring):
        raise ValueError("edge colouring is not proper")


def greedy_colouring(graph: Graph) -> tuple[int, ...]:
    """Deterministic proper colouring: scan edges in canonical order and
    give each the smallest colour unused at both endpoints (at most
    ``2*max_degree - 1`` colours)."""
    used: list[set[int]] = [set() for _ in range(graph.n)]
    out: list[int] = []
    for u, v in graph.edges:
        taken = used[u] | used[v]
        colour = 0
        while colour in taken:
            colour += 1
        used[u].add(colour)
        used[v].add(colour)
        out.append(colour)
    return tuple(out)


def _product_parts(graph: Graph, k: int, kind: str) -> tuple[Graph, Graph]:
    if kind == "cycle":
        factor = make_cycle(k)
    elif kind == "path":
        factor = make_path(k)
    else:
        raise ValueError("kind must be 'cycle' or 'path'")
    return factor, cartesian_product(graph, factor)


def product_colouring(
    graph: Graph, colouring: Colouring, k: int, kind: str
) -> tuple[int, ...]:
    """Colour ``graph x C_k`` (or ``x P_k``): every copy keeps ``colouring``
    and the matching between copies ``i`` and ``i+1`` gets a fresh colour
    ``alpha_i = max(colouring) + i``, distinct per level and absent from the
    copies.  The result is proper and indexed by the product's canonical
    edge order."""
    _require_proper(graph, colouring)
    _, product = _product_parts(graph, k, kind)
    base = (max(colouring) + 1) if colouring else 0
    index = edge_index_map(graph)
    out: list[int] = []
    for a, b in product.edges:
        u1, i1 = divmod(a, k)
        u2, i2 = divmod(b, k)
        if i1 == i2:
            out.append(colouring[index[(u1, u2)]])
        elif i2 == i1 + 1:
            out.append(base + i1)
        else:  # cycle wrap (0, k-1): the level-k matching
            out.append(base + k - 1)
    return tuple(out)


def recursive_product_colouring(
    dims: Sequence[int], kind: str
) -> tuple[Graph, tuple[int, ...]]:
    """Build the torus/grid over ``dims`` together with the colouring
    obtained by colouring factor by factor (the colouring under which the
    dimension bound is tight)."""
    graph = SINGLE_VERTEX
    colouring: tuple[int, ...] = ()
    for a in dims:
        colouring = product_colouring(graph, colouring, a, kind)
        graph = _product_parts(graph, a, kind)[1]
    return graph, colouring


# ======================================================================
# Dimension, basis, recognition
# ======================================================================


def _agreement_kernel(graph: Graph, colouring: Colouring, r: int) -> list[list[int]]:
    """Integer basis of the coefficient-space kernel: families (r coeffs per
    vertex) whose endpoint polynomials agree at every edge colour."""
    ncols = graph.n * r
    rows: list[list[int]] = []
    for e, (u, v) in enumerate(graph.edges):
        t = colouring[e]
        row = [0] * ncols
        power = 1
        for i in range(r):
            row[u * r + i] = power
            row[v * r + i] -= power
            power *= t
        rows.append(row)
    return exactla.nullspace_int(rows, ncols)


def _edge_values(graph: Graph, colouring: Colouring, r: int, coeffs: Sequence[int]):
    """Evaluate a coefficient vector to its edge function, reading each edge
    at its smaller endpoint (both agree on the kernel)."""
    out = []
    for e, (u, _) in enumerate(graph.edges):
        t = colouring[e]
        acc = 0
        for i in reversed(range(r)):
            acc = acc * t + coeffs[u * r + i]
        out.append(acc)
    return out


def witness_dimension(graph: Graph, colouring: Colouring, r: int) -> int:
    """Exact dimension of the space of recognizable edge functions at
    threshold ``r`` under the given proper colouring.

    Computed as the rank of the evaluation map restricted to the agreement
    kernel; all arithmetic is exact (integer fraction-free elimination).
    Colour-dependent in general; 0 when ``r = 0`` (only the zero polynomial
    has degree <= -1) and |E| whenever the maximum degree is at most ``r``.
    """
    _require_proper(graph, colouring)
    if r < 0:
        raise ValueError("r must be non-negative")
    if r == 0 or graph.num_edges == 0:
        return 0
    kernel = _agreement_kernel(graph, colouring, r)
    if not kernel:
        return 0
    return exactla.rank([_edge_values(graph, colouring, r, k) for k in kernel])


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _family_from_coeffs(graph: Graph, r: int, coeffs: Sequence) -> PolyFamily:
    return tuple(_trim(coeffs[u * r : (u + 1) * r]) for u in range(graph.n))


def witness_basis(graph: Graph, colouring: Colouring, r: int) -> WitnessBasis:
    """A basis of the recognizable-function space, each vector paired with a
    recognizing polynomial family; the basis has ``witness_dimension`` many
    vectors (the whole edge space when max degree <= r)."""
    _require_proper(graph, colouring)
    if r < 0:
        raise ValueError("r must be non-negative")
    colouring = tuple(colouring)
    vectors: list[tuple[Fraction, ...]] = []
    recognizers: list[PolyFamily] = []
    if r > 0 and graph.num_edges > 0:
        pivot_rows: list[tuple[int, list[Fraction]]] = []
        for kvec in _agreement_kernel(graph, colouring, r):
            values = _edge_values(graph, colouring, r, kvec)
            cand = [Fraction(x) for x in values]
            for pc, prow in pivot_rows:
                f = cand[pc]
                if f:
                    for j in range(len(cand)):
                        cand[j] -= f * prow[j]
            lead = next((j for j, x in enumerate(cand) if x), None)
            if lead is None:
                continue
            inv = cand[lead]
            pivot_rows.append((lead, [x / inv for x in cand]))
            vectors.append(tuple(Fraction(x) for x in values))
            recognizers.append(_family_from_coeffs(graph, r, kvec))
    return WitnessBasis(graph, colouring, r, tuple(vectors), tuple(recognizers))


def family_recognizes(
    graph: Graph, colouring: Colouring, r: int, phi: Sequence, family: Sequence
) -> bool:
    """Direct check of the two recognition conditions: degree bound and
    exact agreement of both endpoint polynomials with ``phi`` on every
    edge."""
    if len(family) != graph.n or len(phi) != graph.num_edges:
        return False
    if any(len(p) > max(r, 0) for p in family):
        return False
    for e, (u, v) in enumerate(graph.edges):
        t = colouring[e]
        value = Fraction(phi[e])
        if poly_eval(family[u], t) != value or poly_eval(family[v], t) != value:
            return False
    return True


def recognize(
    graph: Graph, colouring: Colouring, r: int, phi: Sequence
) -> PolyFamily | None:
    """Return a polynomial family recognizing ``phi``, or ``None`` when
    ``phi`` is not recognizable at threshold ``r``."""
    _require_proper(graph, colouring)
    if r < 0:
        raise ValueError("r must be non-negative")
    if len(phi) != graph.num_edges:
        raise ValueError("edge function length must equal the edge count")
    phi = [Fraction(x) for x in phi]
    if r == 0:
        return tuple(() for _ in range(graph.n)) if not any(phi) else None
    rows: list[list[int]] = []
    rhs: list[Fraction] = []
    ncols = graph.n * r
    for e, (u, v) in enumerate(graph.edges):
        t = colouring[e]
        powers = [t**i for i in range(r)]
        for w in (u, v):
            row = [0] * ncols
            row[w * r : (w + 1) * r] = powers
            rows.append(row)
            rhs.append(phi[e])
    solution = exactla.solve(rows, rhs)
    if solution is None:
        return None
    family = _family_from_coeffs(graph, r, solution)
    if not family_recognizes(graph, colouring, r, phi, family):
        raise AssertionError("recognizer failed direct verification")
    return family


def validate_basis(basis: WitnessBasis) -> None:
    """Raise ``ValueError`` unless every vector is recognized by its family
    and the vectors are linearly independent."""
    for vec, fam in zip(basis.vectors, basis.recognizers):
        if not family_recognizes(basis.graph, basis.colouring, basis.r, vec, fam):
            raise ValueError("basis vector fails recognition")
    if basis.vectors and exactla.rank(basis.vectors) != len(basis.vectors):
        raise ValueError("basis vectors are not linearly independent")


# ======================================================================
# Basis lifting through products with cycles and paths
# ======================================================================


def _check_lift_inputs(
    graph: Graph, colouring: Colouring, bases: list[tuple[WitnessBasis | None, int]]
) -> None:
    for basis, want_r in bases:
        if basis is None:
            if want_r >= 0:
                raise ValueError(f"missing input basis for threshold {want_r}")
            continue
        if basis.graph != graph or basis.colouring != tuple(colouring):
            raise ValueError("input basis does not match the base graph/colouring")
        if basis.r != want_r:
            raise ValueError(f"input basis has r={basis.r}, expected {want_r}")
        validate_basis(basis)


def _assemble(
    product: Graph,
    product_colours: Sequence[int],
    polys: dict[int, Sequence[Fraction]],
) -> tuple[tuple[Fraction, ...], PolyFamily]:
    """Evaluate a sparse polynomial family into an edge function on the
    product graph (absent vertices carry the zero polynomial)."""
    values = []
    for e, (a, _) in enumerate(product.edges):
        p = polys.get(a)
        values.append(poly_eval(p, product_colours[e]) if p else Fraction(0))
    family = tuple(_trim(polys.get(v, ())) for v in range(product.n))
    return tuple(values), family


def _linear_factor(alpha: int, denom: int | None = None) -> list[Fraction]:
    factor = [Fraction(-alpha), Fraction(1)]
    return poly_scale(factor, Fraction(1, denom)) if denom else factor


def _low_degree_vectors(
    graph: Graph,
    colouring: Colouring,
    r: int,
    k: int,
    kind: str,
    product: Graph,
    product_colours: Sequence[int],
    alphas: Sequence[int],
) -> list[tuple[tuple[Fraction, ...], PolyFamily]]:
    """Vectors attached to low-degree vertices of the base graph: fibre
    functions for degree exactly r-1, and per-level matching-edge indicators
    for degree below r-1 (such edges can never be infected from within,
    and they carry one dimension each)."""
    out = []
    inc = incident_edges(graph)
    index = edge_index_map(product)
    rungs = range(k) if kind == "cycle" else range(k - 1)
    for v, d in enumerate(degrees(graph)):
        if d == r - 1:
            poly = [Fraction(1)]
            for e in inc[v]:
                poly = poly_mul(poly, _linear_factor(colouring[e]))
            polys = {v * k + i: poly for i in range(k)}
            out.append(_assemble(product, product_colours, polys))
        elif d < r - 1:
            for i in rungs:
                a, b = v * k + i, v * k + (i + 1) % k
                rung_edge = index[(min(a, b), max(a, b))]
                polys = {}
                for end in (a, b):
                    level = end % k
                    nodes = [(Fraction(colouring[e]), Fraction(0)) for e in inc[v]]
                    for other in rungs:
                        if other != i and level in (other, (other + 1) % k):
                            nodes.append((Fraction(alphas[other]), Fraction(0)))
                    nodes.append((Fraction(alphas[i]), Fraction(1)))
                    polys[end] = lagrange_interpolation(nodes)
                vec, fam = _assemble(product, product_colours, polys)
                assert vec[rung_edge] == 1
                out.append((vec, fam))
    return out


def _finish_lift(
    product: Graph,
    product_colours: Sequence[int],
    r: int,
    items: list[tuple[tuple[Fraction, ...], PolyFamily]],
) -> WitnessBasis:
    vectors = tuple(vec for vec, _ in items)
    families = tuple(fam for _, fam in items)
    return WitnessBasis(product, tuple(product_colours), r, vectors, families)


def lift_basis_cycle(
    graph: Graph,
    colouring: Colouring,
    basis_r: WitnessBasis,
    basis_rm1: WitnessBasis | None,
    basis_rm2: WitnessBasis | None,
    k: int,
) -> WitnessBasis:
    """Lift bases at thresholds r, r-1, r-2 to a family on ``graph x C_k``
    under the product colouring.

    Level 1 copies each threshold-r recognizer to every copy; levels
    ``2..k-1`` damp a threshold-(r-1) recognizer by one vanishing linear
    factor on each side; level ``k`` multiplies a threshold-(r-2)
    recognizer by the two factors vanishing at its surrounding matching
    colours.  Low-degree vertices contribute their fibre vectors and
    matching indicators.  The family size is
    ``|B_r| + (k-2)|B_rm1| + |B_rm2| + d_{r-1} + k*(d_0+...+d_{r-2})``.
    """
    r = basis_r.r
    _check_lift_inputs(graph, colouring, [(basis_r, r), (basis_rm1, r - 1),
                                          (basis_rm2, r - 2)])
    product_colours = product_colouring(graph, colouring, k, "cycle")
    product = _product_parts(graph, k, "cycle")[1]
    base = (max(colouring) + 1) if colouring else 0
    alphas = [base + i for i in range(k)]  # alphas[i] colours levels i,i+1 (mod k)
    items: list[tuple[tuple[Fraction, ...], PolyFamily]] = []

    for fam in basis_r.recognizers:
        polys = {v * k + i: fam[v] for v in range(graph.n) for i in range(k)
                 if fam[v]}
        items.append(_assemble(product, product_colours, polys))

    if basis_rm1 is not None:
        for level in range(1, k - 1):  # position of "copy ell", ell = level+1
            lo = _linear_factor(alphas[level - 1], alphas[level] - alphas[level - 1])
            hi = _linear_factor(alphas[level + 1], alphas[level] - alphas[level + 1])
            for fam in basis_rm1.recognizers:
                polys = {}
                for v in range(graph.n):
                    if fam[v]:
                        polys[v * k + level] = poly_mul(lo, fam[v])
                        polys[v * k + level + 1] = poly_mul(hi, fam[v])
                items.append(_assemble(product, product_colours, polys))

    if basis_rm2 is not None:
        quad = poly_mul(_linear_factor(alphas[k - 2]), _linear_factor(alphas[k - 1]))
        for fam in basis_rm2.recognizers:
            polys = {v * k + (k - 1): poly_mul(quad, fam[v])
                     for v in range(graph.n) if fam[v]}
            items.append(_assemble(product, product_colours, polys))

    items.extend(
        _low_degree_vectors(graph, colouring, r, k, "cycle", product,
                            product_colours, alphas)
    )
    return _finish_lift(product, product_colours, r, items)


def lift_basis_path(
    graph: Graph,
    colouring: Colouring,
    basis_r: WitnessBasis,
    basis_rm1: WitnessBasis | None,
    k: int,
) -> WitnessBasis:
    """Path analogue of :func:`lift_basis_cycle` on ``graph x P_k``.

    Levels ``2..k-2`` use the two-sided damping; level ``k-1`` has no
    matching colour above its upper copy, so copies ``k-1`` and ``k`` share
    one damped polynomial; level ``k`` uses the single factor vanishing at
    the last matching colour (unnormalized, which only rescales vectors).
    Family size ``|B_r| + (k-1)|B_rm1| + d_{r-1} + (k-1)*(d_0+...+d_{r-2})``.
    """
    if k < 2:
        raise ValueError("path lift needs k >= 2")
    r = basis_r.r
    _check_lift_inputs(graph, colouring, [(basis_r, r), (basis_rm1, r - 1)])
    product_colours = product_colouring(graph, colouring, k, "path")
    product = _product_parts(graph, k, "path")[1]
    base = (max(colouring) + 1) if colouring else 0
    alphas = [base + i for i in range(k - 1)]  # alphas[i] joins levels i,i+1
    items: list[tuple[tuple[Fraction, ...], PolyFamily]] = []

    for fam in basis_r.recognizers:
        polys = {v * k + i: fam[v] for v in range(graph.n) for i in range(k)
                 if fam[v]}
        items.append(_assemble(product, product_colours, polys))

    if basis_rm1 is not None:
        for level in range(1, k):
            lo = (
                _linear_factor(alphas[level - 1], alphas[level] - alphas[level - 1])
                if level < k - 1
                else _linear_factor(alphas[level - 1])
            )
            if level < k - 2:
                hi = _linear_factor(alphas[level + 1], alphas[level] - alphas[level + 1])
            for fam in basis_rm1.recognizers:
                polys = {}
                for v in range(graph.n):
                    if not fam[v]:
                        continue
                    polys[v * k + level] = poly_mul(lo, fam[v])
                    if level < k - 2:
                        polys[v * k + level + 1] = poly_mul(hi, fam[v])
                    elif level == k - 2:
                        polys[v * k + level + 1] = poly_mul(lo, fam[v])
                items.append(_assemble(product, product_colours, polys))

    items.extend(
        _low_degree_vectors(graph, colouring, r, k, "path", product,
                            product_colours, alphas)
    )
    return _finish_lift(product, product_colours, r, items)


def basis_to_json_dict(basis: WitnessBasis) -> dict:
    """Serialize: vectors and recognizer coefficients as exact rational
    strings."""
    return {
        "r": basis.r,
        "colouring": list(basis.colouring),
        "vectors": [[str(x) for x in vec] for vec in basis.vectors],
        "recognizers": [
            [[str(c) for c in p] for p in fam] for fam in basis.recognizers
        ],
    }
