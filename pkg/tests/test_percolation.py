import random

import pytest

from bondperc.graphs import (
    degrees,
    make_cycle,
    make_grid,
    make_hypercube,
    make_path,
    Graph,
)
from bondperc.percolation import (
    bond_closure,
    edge_to_vertex_percolating,
    neighbour_closure,
    percolates_bond,
    percolates_vertex,
    state_to_json_dict,
    vertex_to_edge_percolating,
)
from conftest import corpus, ref_bond_closure, ref_vertex_closure

Q3 = make_hypercube(3)
# bottom face of Q3 (all vertices with high bit 0) plus one parallel edge
FACE = {Q3.edges.index(e) for e in [(0, 1), (0, 2), (1, 3), (2, 3)]}
PARALLEL = Q3.edges.index((4, 5))


def test_no_spread_at_max_degree():
    c4 = make_cycle(4)
    state = bond_closure(c4, {0, 1, 2}, 2)
    assert state.infected == frozenset({0, 1, 2})
    assert not percolates_bond(c4, {0, 1, 2}, 2)


def test_r1_spreads_everywhere_connected():
    p3 = make_path(3)
    state = bond_closure(p3, {0}, 1)
    assert state.infected == frozenset({0, 1})
    for g in corpus(6, sizes=[5, 6], ps=[0.9], seed0=3):
        if g.num_edges:
            # r=1 fills each connected component touched by the seed
            assert percolates_bond(g, range(g.num_edges), 1)


def test_q3_face_stalls_and_face_plus_one_percolates():
    stalled = bond_closure(Q3, FACE, 2)
    assert len(stalled.infected) == 8
    assert not percolates_bond(Q3, FACE, 2)
    state = bond_closure(Q3, FACE | {PARALLEL}, 2)
    assert state.infected == frozenset(range(12))
    assert percolates_bond(Q3, FACE | {PARALLEL}, 2)


def test_r0_closure_is_everything():
    for g in (make_cycle(5), make_grid([3, 3])):
        state = bond_closure(g, set(), 0)
        assert state.infected == frozenset(range(g.num_edges))
        assert state.trace[0] == frozenset()


def test_r_above_max_degree_freezes():
    g = make_grid([3, 3])
    seed = {0, 5, 7}
    state = bond_closure(g, seed, 5)
    assert state.infected == frozenset(seed)


def test_trace_structure():
    state = bond_closure(Q3, FACE | {PARALLEL}, 2)
    assert state.trace[0] == frozenset(FACE | {PARALLEL})
    union = set()
    for gen in state.trace:
        assert not (union & gen)
        union |= gen
    assert union == state.infected


def test_trace_synchronous_rounds():
    p4 = make_path(4)
    state = bond_closure(p4, {0}, 1)
    assert [sorted(g) for g in state.trace] == [[0], [1], [2]]


def test_errors():
    with pytest.raises(ValueError):
        bond_closure(make_path(3), {7}, 1)
    with pytest.raises(ValueError):
        bond_closure(make_path(3), {0}, -1)
    with pytest.raises(ValueError):
        neighbour_closure(make_path(3), {5}, 1)


def test_matches_reference_closure():
    rng = random.Random(0)
    for g in corpus(10, sizes=[5, 6, 7], ps=[0.3, 0.6], seed0=40):
        for r in range(4):
            seed = {e for e in range(g.num_edges) if rng.random() < 0.3}
            assert bond_closure(g, seed, r).infected == ref_bond_closure(g, seed, r)
            vseed = {v for v in range(g.n) if rng.random() < 0.3}
            assert (
                neighbour_closure(g, vseed, r).infected
                == ref_vertex_closure(g, vseed, r)
            )


def test_confluence_random_orders():
    rng = random.Random(1)
    for g in [make_grid([3, 3]), make_cycle(6), Q3]:
        for r in (1, 2):
            seed = {e for e in range(g.num_edges) if rng.random() < 0.4}
            expected = bond_closure(g, seed, r).infected
            for trial in range(20):
                async_rng = random.Random(1000 + trial)
                assert ref_bond_closure(g, seed, r, async_rng) == expected


def test_monotone_and_idempotent():
    rng = random.Random(2)
    for g in corpus(8, sizes=[6, 7], ps=[0.4, 0.7], seed0=60):
        m = g.num_edges
        for r in (1, 2, 3):
            small = {e for e in range(m) if rng.random() < 0.25}
            big = small | {e for e in range(m) if rng.random() < 0.25}
            c_small = bond_closure(g, small, r).infected
            c_big = bond_closure(g, big, r).infected
            assert c_small <= c_big
            assert bond_closure(g, c_small, r).infected == c_small


def test_neighbour_closure_examples():
    star = Graph(4, ((0, 1), (0, 2), (0, 3)))
    assert neighbour_closure(star, {0}, 1).infected == frozenset(range(4))
    c4 = make_cycle(4)
    # two adjacent vertices: each uninfected vertex sees only one of them
    state = neighbour_closure(c4, {0, 1}, 2)
    assert state.infected == frozenset({0, 1})
    assert neighbour_closure(c4, range(4), 3).infected == frozenset(range(4))


def test_vertex_to_edge_conversion():
    p3 = make_path(3)
    # {middle} alone does not vertex-percolate at r=2 (the leaves can never
    # be infected), so the precondition rejects it
    with pytest.raises(ValueError):
        vertex_to_edge_percolating(p3, {1}, 2)
    out = vertex_to_edge_percolating(p3, {0, 1, 2}, 2)
    assert out == frozenset({0, 1})
    assert percolates_bond(p3, out, 2)

    c5 = make_cycle(5)
    out = vertex_to_edge_percolating(c5, {2}, 1)
    assert len(out) == 1 and percolates_bond(c5, out, 1)

    assert vertex_to_edge_percolating(Q3, set(), 0) == frozenset()

    with pytest.raises(ValueError):
        vertex_to_edge_percolating(make_cycle(4), {0, 1}, 2)  # does not percolate


def test_edge_to_vertex_conversion():
    p3 = make_path(3)
    out = edge_to_vertex_percolating(p3, {0, 1}, 2)
    assert out == frozenset({0, 1, 2})  # both smaller endpoints union the leaves
    assert percolates_vertex(p3, out, 2)

    c5 = make_cycle(5)
    out = edge_to_vertex_percolating(c5, {0}, 1)
    assert len(out) == 1 and percolates_vertex(c5, out, 1)

    f = FACE | {PARALLEL}
    out = edge_to_vertex_percolating(Q3, f, 2)
    assert len(out) <= len(f)
    assert percolates_vertex(Q3, out, 2)

    with pytest.raises(ValueError):
        edge_to_vertex_percolating(Q3, FACE, 2)


def test_conversion_size_bounds():
    rng = random.Random(3)
    for g in corpus(8, sizes=[5, 6], ps=[0.5, 0.8], seed0=80):
        for r in (1, 2):
            full_v = frozenset(range(g.n))
            edges = vertex_to_edge_percolating(g, full_v, r)
            assert len(edges) <= r * g.n
            if g.num_edges:
                full_e = frozenset(range(g.num_edges))
                verts = edge_to_vertex_percolating(g, full_e, r)
                low = sum(1 for d in degrees(g) if d < r)
                assert len(verts) <= g.num_edges + low


def test_state_json():
    state = bond_closure(make_path(3), {0}, 1)
    data = state_to_json_dict(state, True)
    assert data == {
        "percolated": True,
        "closure_size": 2,
        "generations": [[0], [1]],
    }
