import pytest

from bondperc.constructions import (
    build_grid_set,
    build_hypercube_set,
    build_hypercube_set_recursive,
    build_torus_set,
    edge_set_from_pairs,
    edge_set_to_pairs,
    lift_cycle_percolating,
    lift_path_percolating,
)
from bondperc.formulas import grid_recursion, hypercube_set_size, torus_recursion
from bondperc.graphs import (
    SINGLE_VERTEX,
    make_cycle,
    make_grid,
    make_hypercube,
    make_path,
    make_torus,
)
from bondperc.percolation import percolates_bond
from conftest import ref_min_bond

TORUS_DIMS = [[3], [4], [5], [3, 3], [3, 4], [4, 4], [3, 3, 3]]
GRID_DIMS = [[2], [4], [2, 2], [2, 3], [3, 3], [2, 2, 2], [2, 2, 3], [3, 3, 3],
             [2, 2, 2, 2]]


def test_lift_cycle_example_c3():
    c3 = make_cycle(3)
    out = lift_cycle_percolating(c3, {0, 1, 2}, {0}, set(), 3, 2)
    assert len(out) == 4
    assert percolates_bond(make_torus([3, 3]), out, 2)


def test_lift_cycle_single_vertex_r1():
    out = lift_cycle_percolating(SINGLE_VERTEX, set(), set(), set(), 5, 1)
    # degree 0 = r-1: exactly the one wrap-around fibre edge
    assert len(out) == 1
    assert percolates_bond(make_torus([5]), out, 1)


def test_lift_cycle_r_above_everything_gives_full_set():
    c3 = make_cycle(3)
    full = frozenset(range(3))
    out = lift_cycle_percolating(c3, full, full, full, 3, 5)
    assert out == frozenset(range(18))


def test_lift_path_example_grid():
    p3 = make_path(3)
    out = lift_path_percolating(p3, {0, 1}, {0}, 3, 2)
    assert len(out) == 6
    assert percolates_bond(make_grid([3, 3]), out, 2)


def test_lift_path_q2_full():
    p2 = make_path(2)
    out = lift_path_percolating(p2, {0}, {0}, 2, 2)
    assert out == frozenset(range(4))  # max degree = r: everything needed


def test_lift_path_single_vertex():
    out = lift_path_percolating(SINGLE_VERTEX, set(), set(), 4, 1)
    assert len(out) == 1
    assert percolates_bond(make_path(4), out, 1)


def test_lift_preconditions_checked():
    c3 = make_cycle(3)
    with pytest.raises(ValueError):
        lift_cycle_percolating(c3, {0}, {0}, set(), 3, 2)  # {0} is not 2-percolating
    with pytest.raises(ValueError):
        lift_path_percolating(c3, {0, 1, 2}, set(), 3, 2)  # empty not 1-percolating
    with pytest.raises(ValueError):
        lift_cycle_percolating(c3, {0, 1, 2}, {0}, set(), 2, 2)  # k too small
    with pytest.raises(ValueError):
        lift_path_percolating(c3, {0, 1, 2}, {0}, 1, 2)


def test_torus_sets_percolate_and_match_recursion():
    for dims in TORUS_DIMS:
        graph = make_torus(dims)
        for r in range(2 * len(dims) + 2):
            out = build_torus_set(dims, r)
            assert len(out) == torus_recursion(dims, r)
            assert percolates_bond(graph, out, r)


def test_grid_sets_percolate_and_match_recursion():
    for dims in GRID_DIMS:
        graph = make_grid(dims)
        for r in range(2 * len(dims) + 2):
            out = build_grid_set(dims, r)
            assert len(out) == grid_recursion(dims, r)
            assert percolates_bond(graph, out, r)


def test_hypercube_set_example():
    q3 = make_hypercube(3)
    out = build_hypercube_set(3, 2)
    assert sorted(q3.edges[e] for e in out) == [
        (2, 3), (4, 5), (4, 6), (5, 7), (6, 7)
    ]
    assert percolates_bond(q3, out, 2)
    assert build_hypercube_set(3, 0) == frozenset()
    assert build_hypercube_set(2, 2) == frozenset(range(4))
    with pytest.raises(ValueError):
        build_hypercube_set(3, 4)


def test_hypercube_closed_form_equals_recursion():
    for d in range(0, 8):
        for r in range(0, d + 1):
            closed = build_hypercube_set(d, r)
            assert closed == build_hypercube_set_recursive(d, r)
            assert len(closed) == hypercube_set_size(d, r)


def test_hypercube_sets_percolate():
    for d in range(1, 6):
        q = make_hypercube(d)
        for r in range(0, d + 1):
            assert percolates_bond(q, build_hypercube_set(d, r), r)


def test_construction_minimality_small():
    # construction size equals the exhaustive minimum where exhaustion is cheap
    t33 = make_torus([3, 3])
    for r in (1, 2):
        assert len(build_torus_set([3, 3], r)) == ref_min_bond(t33, r)
    g33 = make_grid([3, 3])
    for r in (1, 2):
        assert len(build_grid_set([3, 3], r)) == ref_min_bond(g33, r)
    q3 = make_hypercube(3)
    for r in (1, 2):
        assert len(build_hypercube_set(3, r)) == ref_min_bond(q3, r)
    assert build_hypercube_set(3, 3) == frozenset(range(12))


def test_edge_set_pair_round_trip():
    g = make_grid([3, 3])
    f = build_grid_set([3, 3], 2)
    pairs = edge_set_to_pairs(g, f)
    assert edge_set_from_pairs(g, pairs) == f
    with pytest.raises(ValueError):
        edge_set_from_pairs(g, [[0, 8]])
