"""Every closed-form and recursive size formula, plus a consistency
reporter that lines them up against the actual constructions, the exact
dimension bound, and (when affordable) the brute-force minimum.

The two hypercube closed forms are evaluated exactly as printed in the
literature and are *not* trusted: at (d, r) = (3, 2) they give 4 and 7
while the recursion, the construction, the dimension bound and exhaustive
search all agree on 5.  ``consistency_report`` surfaces such disagreements
instead of patching them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, prod
from typing import Sequence

from .constructions import build_grid_set, build_hypercube_set, build_torus_set
from .graphs import Graph, degree_histogram, make_grid, make_hypercube, make_torus
from .oracle import min_percolating_bond
from .witness import recursive_product_colouring, witness_dimension

__all__ = [
    "torus_recursion",
    "grid_recursion",
    "hypercube_closed_form_a",
    "hypercube_closed_form_b",
    "hypercube_set_size",
    "grid_degree_count",
    "FormulaReport",
    "consistency_report",
    "REPORT_COLUMNS",
]


def torus_recursion(dims: Sequence[int], r: int) -> int:
    """Minimum percolating edge-set size for the torus over ``dims``.

    Peeling the last factor ``C_a`` costs one threshold-r set, ``a - 2``
    threshold-(r-1) sets and one threshold-(r-2) set of the smaller torus,
    plus a correction for vertices the smaller torus (2(d-1)-regular)
    leaves too low: all of them need a wrap edge when r = 2d-1 and their
    whole fibre when r >= 2d.  Thresholds <= 0 cost nothing.
    """
    dims = list(dims)
    for a in dims:
        if a < 3:
            raise ValueError(f"torus dimension {a} out of range (need >= 3)")
    if r < 0:
        r = 0

    @lru_cache(maxsize=None)
    def value(j: int, rr: int) -> int:
        if rr <= 0 or j == 0:
            return 0
        a = dims[j - 1]
        total = value(j - 1, rr) + (a - 2) * value(j - 1, rr - 1) + value(j - 1, rr - 2)
        if rr >= 2 * j:
            total += prod(dims[:j])
        elif rr == 2 * j - 1:
            total += prod(dims[: j - 1])
        return total

    return value(len(dims), r)


def _interior_weighted_count(prefix: Sequence[int], size: int) -> int:
    """Number of grid vertices over ``prefix`` whose set of interior
    coordinates has the given size: sum over |S| = size of
    2^(len-|S|) * prod_{i in S} (a_i - 2)."""
    if size < 0 or size > len(prefix):
        return 0
    elem = [1] + [0] * len(prefix)
    for a in prefix:
        for j in range(len(prefix), 0, -1):
            elem[j] += elem[j - 1] * (a - 2)
    return elem[size] * 2 ** (len(prefix) - size)


def grid_recursion(dims: Sequence[int], r: int) -> int:
    """Minimum percolating edge-set size for the grid over ``dims``.

    Path analogue of :func:`torus_recursion`: one threshold-r set plus
    ``a - 1`` threshold-(r-1) sets of the smaller grid, one wrap... rather
    one matching edge per vertex of degree exactly r-1 there (degree of a
    grid vertex is d-1 + #interior coordinates, hence the |S| = r-d count),
    and the whole fibre path (``a - 1`` edges) per vertex of lower degree.
    """
    dims = list(dims)
    for a in dims:
        if a < 2:
            raise ValueError(f"grid dimension {a} out of range (need >= 2)")
    if r < 0:
        r = 0

    @lru_cache(maxsize=None)
    def value(j: int, rr: int) -> int:
        if rr <= 0 or j == 0:
            return 0
        a = dims[j - 1]
        prefix = dims[: j - 1]
        exactly = _interior_weighted_count(prefix, rr - j)
        below = sum(_interior_weighted_count(prefix, s) for s in range(max(rr - j, 0)))
        return (
            value(j - 1, rr)
            + (a - 1) * value(j - 1, rr - 1)
            + exactly
            + (a - 1) * below
        )

    return value(len(dims), r)


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def hypercube_closed_form_a(d: int, r: int) -> int:
    """Published closed form, variant A (binomial top d-r-1), evaluated
    verbatim with the convention C(n, k) = 0 outside 0 <= k <= n.  Recorded
    by reports as ``eq2``; known not to match the validated recursion."""
    if not 0 <= r <= d:
        raise ValueError("need 0 <= r <= d")
    return sum(_binom(d - r - 1, r - j) * j * 2 ** (j - 1) for j in range(1, r + 1))


def hypercube_closed_form_b(d: int, r: int) -> int:
    """Published closed form, variant B (binomial top d-i+1), evaluated
    verbatim; recorded by reports as ``corollary``.  Same caveat as variant
    A."""
    if not 0 <= r <= d:
        raise ValueError("need 0 <= r <= d")
    return sum(_binom(d - i + 1, r - i) * i * 2 ** (i - 1) for i in range(1, r + 1))


def hypercube_set_size(d: int, r: int) -> int:
    """Size of :func:`bondperc.constructions.build_hypercube_set` via the
    facet recursion s(d, r) = s(d-1, r) + s(d-1, r-1) with s(d, 0) = 0 and
    s(d, d) = d * 2^(d-1)."""
    if not 0 <= r <= d:
        raise ValueError("need 0 <= r <= d")

    @lru_cache(maxsize=None)
    def s(dd: int, rr: int) -> int:
        if rr == 0:
            return 0
        if dd == rr:
            return dd * 2 ** (dd - 1)
        return s(dd - 1, rr) + s(dd - 1, rr - 1)

    return s(d, r)


def grid_degree_count(dims: Sequence[int], t: int) -> int:
    """Number of grid vertices of degree exactly ``t``, computed two ways
    (combinatorial sum and direct enumeration) which must agree."""
    dims = list(dims)
    for a in dims:
        if a < 2:
            raise ValueError(f"grid dimension {a} out of range (need >= 2)")
    d = len(dims)
    combinatorial = _interior_weighted_count(dims, t - d)
    enumerated = degree_histogram(make_grid(dims)).get(t, 0)
    if combinatorial != enumerated:
        raise AssertionError(
            f"degree-count mismatch for dims={dims}, t={t}: "
            f"sum {combinatorial} vs enumeration {enumerated}"
        )
    return combinatorial


# ======================================================================
# Consistency reporting
# ======================================================================

REPORT_COLUMNS = (
    "instance",
    "r",
    "recursion",
    "eq2",
    "corollary",
    "construction_size",
    "oracle_min",
    "dim_lower_bound",
)


@dataclass(frozen=True)
class FormulaReport:
    """All applicable values for one (instance, r) pair plus agreement
    flags (pure functions of the recorded values)."""

    instance: str
    r: int
    recursion: int
    eq2: int | None
    corollary: int | None
    construction_size: int
    oracle_min: int | None
    dim_lower_bound: int | None

    @property
    def agreements(self) -> dict[str, bool]:
        flags = {"recursion_equals_construction": self.recursion == self.construction_size}
        if self.oracle_min is not None:
            flags["oracle_equals_recursion"] = self.oracle_min == self.recursion
        if self.dim_lower_bound is not None:
            flags["dim_equals_recursion"] = self.dim_lower_bound == self.recursion
        if self.eq2 is not None:
            flags["eq2_equals_recursion"] = self.eq2 == self.recursion
        if self.corollary is not None:
            flags["corollary_equals_recursion"] = self.corollary == self.recursion
        return flags

    def to_csv_row(self) -> list[str]:
        def fmt(x) -> str:
            return "" if x is None else str(x)

        return [
            self.instance,
            str(self.r),
            str(self.recursion),
            fmt(self.eq2),
            fmt(self.corollary),
            str(self.construction_size),
            fmt(self.oracle_min),
            fmt(self.dim_lower_bound),
        ]

    def to_json_dict(self) -> dict:
        return {
            "instance": self.instance,
            "r": self.r,
            "recursion": self.recursion,
            "eq2": self.eq2,
            "corollary": self.corollary,
            "construction_size": self.construction_size,
            "oracle_min": self.oracle_min,
            "dim_lower_bound": self.dim_lower_bound,
            "agreements": self.agreements,
        }


def consistency_report(
    dims_or_d: Sequence[int] | int,
    r: int,
    mode: str,
    *,
    oracle_budget: int | None = 2_000_000,
    max_oracle_edges: int = 20,
    max_dim_cells: int = 600,
) -> FormulaReport:
    """Evaluate every formula that applies to the instance and, within the
    given budgets, the exhaustive minimum and the exact dimension bound.

    ``mode`` is ``torus``, ``grid`` or ``hypercube`` (the latter takes an
    integer d).  The brute-force column is attempted only up to
    ``max_oracle_edges`` edges and ``oracle_budget`` closure evaluations,
    and the dimension bound (under the recursive product colouring) only up
    to ``max_dim_cells`` polynomial coefficients.
    """
    eq2 = corollary = None
    if mode == "hypercube":
        d = int(dims_or_d)  # type: ignore[arg-type]
        dims = [2] * d
        kind = "path"
        graph = make_hypercube(d)
        recursion = grid_recursion(dims, r)
        construction = build_hypercube_set(d, r) if r <= d else build_grid_set(dims, r)
        if r <= d:
            eq2 = hypercube_closed_form_a(d, r)
            corollary = hypercube_closed_form_b(d, r)
        instance = f"hypercube[{d}]"
    elif mode == "torus":
        dims = list(dims_or_d)  # type: ignore[arg-type]
        kind = "cycle"
        graph = make_torus(dims)
        recursion = torus_recursion(dims, r)
        construction = build_torus_set(dims, r)
        instance = "torus[" + ",".join(map(str, dims)) + "]"
    elif mode == "grid":
        dims = list(dims_or_d)  # type: ignore[arg-type]
        kind = "path"
        graph = make_grid(dims)
        recursion = grid_recursion(dims, r)
        construction = build_grid_set(dims, r)
        instance = "grid[" + ",".join(map(str, dims)) + "]"
    else:
        raise ValueError("mode must be 'torus', 'grid' or 'hypercube'")

    oracle_min = None
    if graph.num_edges <= max_oracle_edges:
        result = min_percolating_bond(graph, r, budget=oracle_budget)
        if result.status == "exact":
            oracle_min = result.size

    dim_value = None
    if graph.n * max(r, 1) <= max_dim_cells:
        product_graph, product_colours = recursive_product_colouring(dims, kind)
        assert product_graph == graph
        dim_value = witness_dimension(graph, product_colours, r)

    return FormulaReport(
        instance=instance,
        r=r,
        recursion=recursion,
        eq2=eq2,
        corollary=corollary,
        construction_size=len(construction),
        oracle_min=oracle_min,
        dim_lower_bound=dim_value,
    )
