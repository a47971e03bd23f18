"""Bootstrap percolation on graphs and hypergraphs: closure engines for
the bond/neighbour/hyperedge processes, explicit minimum percolating-set
constructions for tori, grids and hypercubes, exact rational dimension
lower bounds certifying their optimality, and a brute-force oracle."""

from .graphs import (
    Graph,
    SINGLE_VERTEX,
    cartesian_product,
    degree_histogram,
    make_cycle,
    make_grid,
    make_hypercube,
    make_path,
    make_random_graph,
    make_torus,
)
from .percolation import (
    BACKEND,
    BondState,
    VertexState,
    bond_closure,
    edge_to_vertex_percolating,
    neighbour_closure,
    percolates_bond,
    percolates_vertex,
    vertex_to_edge_percolating,
)
from .constructions import (
    build_grid_set,
    build_hypercube_set,
    build_hypercube_set_recursive,
    build_torus_set,
    lift_cycle_percolating,
    lift_path_percolating,
)
from .formulas import (
    FormulaReport,
    consistency_report,
    grid_degree_count,
    grid_recursion,
    hypercube_closed_form_a,
    hypercube_closed_form_b,
    hypercube_set_size,
    torus_recursion,
)
from .witness import (
    WitnessBasis,
    check_proper,
    family_recognizes,
    greedy_colouring,
    lift_basis_cycle,
    lift_basis_path,
    product_colouring,
    recognize,
    recursive_product_colouring,
    witness_basis,
    witness_dimension,
)
from .hyperperc import (
    Hypergraph,
    graph_to_hypergraph,
    hyper_closure,
    hyper_dim_W,
    min_percolating_hyper,
    percolates_hyper,
)
from .oracle import (
    OracleResult,
    lower_bound_hint,
    min_percolating_bond,
    min_percolating_vertex,
)

__version__ = "0.1.0"
