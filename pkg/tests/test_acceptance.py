"""Acceptance suite: one test per criterion, each printing a pass/fail line
with its runtime (run with ``pytest tests/test_acceptance.py -v -s``).

Numbers asserted here are exact; no tolerances.  The brute-force searches
double as ground truth, so they never take unverified floors: whenever a
dimension value seeds a search, that value is computed exactly first and
asserted against the expected answer.
"""

import math
import time
from contextlib import contextmanager
from functools import lru_cache

from bondperc.constructions import (
    build_grid_set,
    build_hypercube_set,
    build_hypercube_set_recursive,
    build_torus_set,
)
from bondperc.formulas import (
    consistency_report,
    grid_recursion,
    hypercube_set_size,
    torus_recursion,
)
from bondperc.graphs import (
    SINGLE_VERTEX,
    degree_histogram,
    degrees,
    make_cycle,
    make_grid,
    make_hypercube,
    make_path,
    make_torus,
    make_random_graph,
    max_degree,
)
from bondperc.hyperperc import graph_to_hypergraph, hyper_closure, hyper_dim_W
from bondperc.oracle import min_percolating_bond, min_percolating_vertex
from bondperc.percolation import (
    BACKEND,
    bond_closure,
    edge_to_vertex_percolating,
    percolates_bond,
    percolates_vertex,
    vertex_to_edge_percolating,
)
from bondperc.witness import (
    family_recognizes,
    greedy_colouring,
    lift_basis_cycle,
    lift_basis_path,
    recursive_product_colouring,
    witness_basis,
    witness_dimension,
)
from bondperc import exactla
from conftest import corpus, ref_bond_closure

import random


@contextmanager
def criterion(num: int, limit: float):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {num}: FAIL after {time.perf_counter() - start:.1f}s")
        raise
    elapsed = time.perf_counter() - start
    verdict = "PASS" if elapsed < limit else "FAIL"
    print(f"ACCEPTANCE {num}: {verdict} in {elapsed:.1f}s (limit {limit:.0f}s)")
    assert elapsed < limit, f"criterion {num} exceeded its {limit}s budget"


CORPUS_200 = corpus(200, sizes=[3, 4, 5, 6], ps=[0.3, 0.5, 0.7], seed0=1)


@lru_cache(maxsize=None)
def _bond_min(idx: int, r: int):
    return min_percolating_bond(CORPUS_200[idx], r, use_hint=False)


@lru_cache(maxsize=None)
def _vertex_min(idx: int, r: int):
    return min_percolating_vertex(CORPUS_200[idx], r)


def test_criterion_1_hypercube_q3():
    with criterion(1, 60):
        q3 = make_hypercube(3)
        built = build_hypercube_set(3, 2)
        assert len(built) == 5 and percolates_bond(q3, built, 2)
        assert min_percolating_bond(q3, 2).size == 5
        graph, colours = recursive_product_colouring([2, 2, 2], "path")
        assert graph == q3 and witness_dimension(q3, colours, 2) == 5
        assert grid_recursion([2, 2, 2], 2) == 5
        report = consistency_report(3, 2, "hypercube")
        assert report.eq2 == 4 and report.corollary == 7
        assert not report.agreements["eq2_equals_recursion"]
        assert not report.agreements["corollary_equals_recursion"]


def test_criterion_2_torus_3x3():
    with criterion(2, 300):
        t33 = make_torus([3, 3])
        graph, colours = recursive_product_colouring([3, 3], "cycle")
        assert graph == t33
        budget_cap = math.comb(18, 10)
        for r, expected in ((2, 4), (3, 10)):
            assert torus_recursion([3, 3], r) == expected
            assert len(build_torus_set([3, 3], r)) == expected
            dim = witness_dimension(t33, colours, r)
            assert dim == expected
            # the exactly-computed dimension is a certified floor (criterion 5
            # checks the underlying inequality with no floor at all)
            result = min_percolating_bond(t33, r, lower_bound=dim)
            assert result.status == "exact" and result.size == expected
            assert result.closures_evaluated <= budget_cap


def test_criterion_3_grid_3x3():
    with criterion(3, 60):
        g33 = make_grid([3, 3])
        assert grid_recursion([3, 3], 2) == 6
        assert len(build_grid_set([3, 3], 2)) == 6
        graph, colours = recursive_product_colouring([3, 3], "path")
        assert graph == g33 and witness_dimension(g33, colours, 2) == 6
        assert min_percolating_bond(g33, 2).size == 6


def test_criterion_4_low_degree_sharpness():
    with criterion(4, 300):
        checked = 0
        seed = 10_000
        while checked < 100:
            n = 3 + seed % 5  # 3..7
            p = (0.2, 0.35, 0.5)[seed % 3]
            g = make_random_graph(n, p, seed)
            seed += 1
            delta = max_degree(g)
            for r in (1, 2, 3):
                if delta <= r and checked < 100:
                    dim = witness_dimension(g, greedy_colouring(g), r)
                    assert dim == g.num_edges
                    assert min_percolating_bond(g, r).size == g.num_edges
                    checked += 1
        assert checked == 100


def test_criterion_5_dimension_soundness_sweep():
    with criterion(5, 600):
        violations = 0
        for idx, g in enumerate(CORPUS_200):
            colours = greedy_colouring(g)
            for r in (1, 2, 3):
                dim = witness_dimension(g, colours, r)
                minimum = _bond_min(idx, r)
                assert minimum.status == "exact"
                if dim > minimum.size:
                    violations += 1
        assert violations == 0


def _lift_expected_cycle(g, r, k, sizes):
    hist = degree_histogram(g)
    low = sum(hist.get(t, 0) for t in range(max(r - 1, 0)))
    return sizes[0] + (k - 2) * sizes[1] + sizes[2] + hist.get(r - 1, 0) + k * low


def _lift_expected_path(g, r, k, sizes):
    hist = degree_histogram(g)
    low = sum(hist.get(t, 0) for t in range(max(r - 1, 0)))
    return sizes[0] + (k - 1) * sizes[1] + hist.get(r - 1, 0) + (k - 1) * low


def test_criterion_6_lift_verification():
    with criterion(6, 120):
        bases_graphs = [
            SINGLE_VERTEX,
            make_path(2),
            make_path(3),
            make_cycle(3),
            make_cycle(4),
        ]
        for g in bases_graphs:
            colours = greedy_colouring(g)
            for k in (3, 4):
                for r in (1, 2, 3):
                    b_r = witness_basis(g, colours, r)
                    b_rm1 = witness_basis(g, colours, r - 1) if r >= 1 else None
                    b_rm2 = witness_basis(g, colours, r - 2) if r >= 2 else None

                    lifted = lift_basis_cycle(g, colours, b_r, b_rm1, b_rm2, k)
                    expected = _lift_expected_cycle(
                        g, r, k, (len(b_r), len(b_rm1), len(b_rm2 or ()))
                    )
                    assert len(lifted) == expected
                    for vec, fam in zip(lifted.vectors, lifted.recognizers):
                        assert family_recognizes(
                            lifted.graph, lifted.colouring, r, vec, fam
                        )
                    if lifted.vectors:
                        assert exactla.rank(lifted.vectors) == expected

                    lifted = lift_basis_path(g, colours, b_r, b_rm1, k)
                    expected = _lift_expected_path(
                        g, r, k, (len(b_r), len(b_rm1))
                    )
                    assert len(lifted) == expected
                    for vec, fam in zip(lifted.vectors, lifted.recognizers):
                        assert family_recognizes(
                            lifted.graph, lifted.colouring, r, vec, fam
                        )
                    if lifted.vectors:
                        assert exactla.rank(lifted.vectors) == expected


def test_criterion_7_hypercube_identities():
    with criterion(7, 10):
        for d in range(0, 11):
            for r in range(0, d + 1):
                closed = build_hypercube_set(d, r)
                assert closed == build_hypercube_set_recursive(d, r)
                size = hypercube_set_size(d, r)
                assert len(closed) == size
                if 1 <= r < d:
                    assert size == hypercube_set_size(d - 1, r) + hypercube_set_size(
                        d - 1, r - 1
                    )
                assert grid_recursion([2] * d, r) == size


def test_criterion_8_hypergraph_reduction():
    with criterion(8, 300):
        rng = random.Random(8)
        graphs = corpus(50, sizes=[4, 5, 6, 7], ps=[0.3, 0.5, 0.7], seed0=9000)
        for g in graphs:
            h = graph_to_hypergraph(g)
            colours = greedy_colouring(g)
            for r in (1, 2, 3):
                seed = {e for e in range(g.num_edges) if rng.random() < 0.3}
                assert (
                    hyper_closure(h, seed, r).trace == bond_closure(g, seed, r).trace
                )
                assert hyper_dim_W(h, colours, r) == witness_dimension(g, colours, r)


def test_criterion_9_vertex_edge_inequality():
    with criterion(9, 600):
        for idx, g in enumerate(CORPUS_200):
            deg = degrees(g)
            for r in (1, 2, 3):
                m_e = _bond_min(idx, r).size
                m_v = _vertex_min(idx, r).size
                low = sum(1 for d in deg if d < r)
                assert m_e <= r * m_v  # m_e / r <= m without rationals
                assert m_v <= m_e + low
                edge_witness = _bond_min(idx, r).witness
                verts = edge_to_vertex_percolating(g, edge_witness, r)
                assert percolates_vertex(g, verts, r)
                assert len(verts) <= len(edge_witness) + low
                vertex_witness = _vertex_min(idx, r).witness
                edges = vertex_to_edge_percolating(g, vertex_witness, r)
                assert percolates_bond(g, edges, r)
                assert len(edges) <= r * len(vertex_witness)


def test_criterion_10_confluence_and_monotonicity():
    with criterion(10, 120):
        pool = corpus(10, sizes=[5, 6, 7], ps=[0.4, 0.6], seed0=9500) + [
            make_grid([3, 3]),
            make_torus([3, 3]),
        ]
        rng = random.Random(10)
        for trial in range(500):
            g = pool[trial % len(pool)]
            r = 1 + trial % 3
            seed = {e for e in range(g.num_edges) if rng.random() < 0.35}
            expected = bond_closure(g, seed, r).infected
            randomized = ref_bond_closure(g, seed, r, random.Random(trial))
            assert randomized == expected
        for trial in range(500):
            g = pool[trial % len(pool)]
            r = 1 + trial % 3
            m = g.num_edges
            small = {e for e in range(m) if rng.random() < 0.25}
            big = small | {e for e in range(m) if rng.random() < 0.25}
            assert bond_closure(g, small, r).infected <= bond_closure(g, big, r).infected


def test_criterion_11_scaling_smoke():
    with criterion(11, 120):
        big = make_torus([200, 200])
        built = build_torus_set([200, 200], 2)
        assert len(built) == torus_recursion([200, 200], 2)
        start = time.perf_counter()
        state = bond_closure(big, built, 2)
        elapsed = time.perf_counter() - start
        assert state.infected == frozenset(range(big.num_edges))
        print(f"  closure on 200x200 torus ({BACKEND} backend): {elapsed:.2f}s")
        assert elapsed < 5.0
