"""General position numbers of finite simple graphs.

Exact search for arbitrary graphs, polynomial and closed-form methods
for special classes (diameter two, cographs, bipartite graphs and their
complements, named families), an executable form of the structural
characterization of general position sets, and campaigns that
cross-validate every formula against a brute-force oracle.
"""

from .errors import (
    BudgetExceededError,
    ContractError,
    DomainError,
    GenposError,
    ParseError,
    ScaleError,
)
from .graphs import (
    INFINITE,
    BipartiteLabeling,
    Graph,
    OddCycle,
    all_pairs_distances,
    cartesian_product,
    complement,
    compose,
    convex_closure,
    diameter_and_components,
    disjoint_union,
    emit_edge_list,
    induced_subgraph,
    interval,
    join,
    parse_edge_list,
    require_bipartite,
    simplicial_vertices,
    two_coloring,
)
from .graph6 import emit_graph6, parse_graph6
from .families import FamilySpec, generate, parse_family
from .verify import (
    CliquePartition,
    GpViolation,
    InteriorVertex,
    NonCliqueComponent,
    NotDistanceConstant,
    Transitive,
    clique_partition,
    distant_edges_bound,
    is_distance_constant,
    is_gp_characterized,
    is_gp_definitional,
    is_in_transitive,
)
from .exact import (
    SearchBudget,
    gp_exact,
    hull_numbers,
    max_clique,
    max_clique_union,
    max_independent_set,
    max_induced_biclique,
)
from .cograph import (
    Cotree,
    JoinNode,
    Leaf,
    NotCograph,
    UnionNode,
    build_cotree,
    cotree_invariants,
    cotree_to_graph,
)
from .formulas import (
    AlphaBound,
    GpResult,
    MaxDegreeSet,
    alpha_bipartite,
    full_degree_vertices,
    gp_bipartite,
    gp_bipartite_complement,
    gp_cograph,
    gp_complement_grid,
    gp_complement_hypercube,
    gp_complement_tree,
    gp_diameter2,
    gp_kn_minus,
    gp_tree,
    gp_universal_vertex,
    solve,
)

__version__ = "0.1.0"
