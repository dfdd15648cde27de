"""Closed-form results and the dispatcher, all against the exact oracle."""

import random

import pytest

from genpos import (
    AlphaBound,
    DomainError,
    Graph,
    GpResult,
    SearchBudget,
    complement,
    generate,
    gp_bipartite,
    gp_bipartite_complement,
    gp_cograph,
    gp_complement_grid,
    gp_complement_hypercube,
    gp_complement_tree,
    gp_diameter2,
    gp_exact,
    gp_kn_minus,
    gp_tree,
    gp_universal_vertex,
    is_gp_definitional,
    max_clique,
    require_bipartite,
    solve,
)
from genpos.crosscheck import (
    complete_bipartite_minus_edge,
    random_cograph,
    random_connected_bipartite,
    random_tree,
)
from genpos.families import (
    Complete,
    CompleteBipartite,
    Cycle,
    DoubleStar,
    Gn,
    Gnk,
    Grid,
    Hnmst,
    Hypercube,
    KnMinus,
    Path,
    Petersen,
    RandomGnp,
    Star,
    Wheel,
)
from genpos.formulas import (
    METHOD_BIPARTITE,
    METHOD_COGRAPH,
    METHOD_COMPONENTS_SUM,
    METHOD_DIAMETER2,
    METHOD_EXACT,
    METHOD_TREE,
    METHOD_UNIVERSAL,
    bipartite_complement_profile,
    full_degree_vertices,
)
from genpos.graphs import disjoint_union

BRUTE = SearchBudget(mode="brute_force")


# -- diameter 2 ----------------------------------------------------------------


def test_diameter2_fixtures():
    assert gp_diameter2(generate(Petersen())).value == 6
    assert gp_diameter2(generate(Gnk(5, 2))).value == 5
    assert gp_diameter2(generate(Cycle(4))).value == 2


def test_diameter2_witness_is_verified():
    result = gp_diameter2(generate(Petersen()))
    assert result.verified and result.method == METHOD_DIAMETER2
    assert len(result.witness) == 6


def test_diameter2_rejects_other_diameters():
    with pytest.raises(DomainError):
        gp_diameter2(generate(Path(4)))
    with pytest.raises(DomainError):
        gp_diameter2(generate(Complete(4)))


def test_diameter2_agrees_with_oracle_on_randoms():
    rng = random.Random(101)
    checked = 0
    while checked < 30:
        graph = generate(RandomGnp(rng.randint(4, 11), rng.choice((0.4, 0.6)), rng.getrandbits(32)))
        if graph.diameter != 2:
            continue
        checked += 1
        result = gp_diameter2(graph)
        assert result.value == gp_exact(graph)[0]
        assert result.verified


# -- cographs ------------------------------------------------------------------


def test_cograph_fixtures():
    assert gp_cograph(generate(CompleteBipartite(3, 3))).value == 3
    assert gp_cograph(generate(Complete(6))).value == 6


def test_cograph_where_clique_and_independence_both_lose():
    # universal vertex over (K_2 u 2K_1): alpha = omega = 3 but {0,1,2,3}
    # is in general position, so the naive max(alpha, omega) undershoots
    graph = Graph(5, [(0, 2), (0, 4), (1, 4), (2, 4), (3, 4)])
    result = gp_cograph(graph)
    assert result.value == 4 == gp_exact(graph, BRUTE)[0]
    assert result.verified
    assert max(max_clique(graph)[0], 3) == 3 < result.value


def test_cograph_rejects_p4():
    with pytest.raises(DomainError, match="induced P_4"):
        gp_cograph(generate(Path(4)))


def test_cograph_agrees_with_oracle():
    rng = random.Random(103)
    for _ in range(30):
        graph = random_cograph(rng, rng.randint(2, 14))
        result = gp_cograph(graph)
        assert result.value == gp_exact(graph)[0]
        assert result.verified


# -- universal vertices ----------------------------------------------------------


def test_star_universal_vertex():
    result = gp_universal_vertex(generate(Star(4)))
    assert result.value == 4 == gp_exact(generate(Star(4)), BRUTE)[0]


def test_k4_minus_edge():
    graph = generate(KnMinus(4, "K", (2,)))
    result = gp_universal_vertex(graph)
    assert result.value == 3 == gp_exact(graph, BRUTE)[0]
    assert result.verified


def test_universal_vertex_requires_one():
    with pytest.raises(DomainError):
        gp_universal_vertex(generate(Complete(4)))
    with pytest.raises(DomainError):
        gp_universal_vertex(generate(Petersen()))


# -- K_n minus E(H) ----------------------------------------------------------------


@pytest.mark.parametrize(
    "spec, expected",
    [
        (KnMinus(7, "C", (4,)), 5),
        (KnMinus(6, "K", (3,)), 4),
        (KnMinus(8, "P", (5,)), 6),
        (KnMinus(9, "K1", (4,)), 8),
        (KnMinus(9, "Krs", (2, 3)), 7),
        (KnMinus(8, "W", (5,)), 5),
        (KnMinus(8, "C", (5,)), 5),
        # wheel cases where the hub-plus-rim-complement term wins
        (KnMinus(6, "W", (5,)), 5),
        (KnMinus(7, "W", (6,)), 4),
        (KnMinus(10, "W", (7,)), 6),
    ],
)
def test_kn_minus_formula_values(spec, expected):
    result = gp_kn_minus(spec)
    assert result.value == expected
    assert result.witness is None and not result.verified
    assert gp_exact(generate(spec))[0] == expected


def test_kn_minus_range_errors():
    with pytest.raises(DomainError):
        gp_kn_minus(KnMinus(5, "W", (4,)))
    with pytest.raises(DomainError):
        gp_kn_minus(KnMinus(5, "K", (5,)))


# -- bipartite ---------------------------------------------------------------------


def test_bipartite_equality_on_c6():
    graph = generate(Cycle(6))
    result = gp_bipartite(graph, require_bipartite(graph))
    assert isinstance(result, GpResult)
    assert result.value == 3 == gp_exact(graph, BRUTE)[0]
    assert result.verified


def test_bipartite_equality_on_bicliques():
    for n in range(2, 6):
        graph = generate(CompleteBipartite(n, n))
        result = gp_bipartite(graph, require_bipartite(graph))
        assert result.value == n


def test_bipartite_bound_only_for_long_paths():
    graph = generate(Path(7))
    outcome = gp_bipartite(graph, require_bipartite(graph))
    assert isinstance(outcome, AlphaBound)
    assert outcome.upper_bound == 4
    assert gp_exact(graph)[0] == 2


def test_bipartite_preconditions():
    with pytest.raises(DomainError):
        gp_bipartite(generate(Path(2)), require_bipartite(generate(Path(2))))
    disconnected = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(DomainError):
        gp_bipartite(disconnected, require_bipartite(disconnected))


# -- bipartite complements ------------------------------------------------------------


def test_knn_minus_edge_complement_dominated_by_full_degree_set():
    graph, labeling = complete_bipartite_minus_edge(4)
    profile = bipartite_complement_profile(graph, labeling)
    assert profile["diameter"] == 3
    assert profile["full_degree"].size == 6
    result = gp_bipartite_complement(graph, labeling)
    assert result.value == 6 == gp_exact(complement(graph))[0]
    assert result.verified


def test_p7_complement_alpha_wins():
    graph = generate(Path(7))
    labeling = require_bipartite(graph)
    profile = bipartite_complement_profile(graph, labeling)
    assert profile["diameter"] == 2
    assert profile["alpha"] == 4 and profile["psi"] == 3
    assert gp_bipartite_complement(graph, labeling).value == 4


def test_gn_complement_biclique_wins():
    graph = generate(Gn(3))
    labeling = require_bipartite(graph)
    profile = bipartite_complement_profile(graph, labeling)
    assert profile["diameter"] == 2
    assert profile["psi"] == 6 and profile["alpha"] == 5
    result = gp_bipartite_complement(graph, labeling)
    assert result.value == 6 == gp_exact(complement(graph))[0]


def test_trivial_cases_give_everything():
    edgeless = Graph(5)
    labeling = require_bipartite(edgeless)
    assert gp_bipartite_complement(edgeless, labeling).value == 5
    biclique = generate(CompleteBipartite(3, 4))
    result = gp_bipartite_complement(biclique, require_bipartite(biclique))
    assert result.value == 7  # complement is K_3 + K_4, gp adds up
    assert result.verified


def test_hnmst_2223_complement_value_is_eight():
    # the (A1 u A3) x B2 biclique beats every closed-form term of the paper's
    # bullet list here; exact search confirms 8
    graph = generate(Hnmst(2, 2, 2, 3))
    labeling = require_bipartite(graph)
    profile = bipartite_complement_profile(graph, labeling)
    assert profile["psi_without_full_a"] == 8
    result = gp_bipartite_complement(graph, labeling)
    assert result.value == 8 == gp_exact(complement(graph))[0]


def test_full_degree_sets():
    graph, labeling = complete_bipartite_minus_edge(3)
    full = full_degree_vertices(graph, labeling)
    assert full.in_a == frozenset({1, 2}) and full.in_b == frozenset({4, 5})


# -- trees ------------------------------------------------------------------------------


def test_tree_leaf_counts():
    for n in range(2, 9):
        assert gp_tree(generate(Path(n))).value == 2
    for k in range(1, 6):
        assert gp_tree(generate(Star(k))).value == max(k, 2) if k > 1 else 2


def test_tree_rejects_non_trees():
    with pytest.raises(DomainError):
        gp_tree(generate(Cycle(5)))


def test_tree_agrees_with_oracle():
    rng = random.Random(107)
    for _ in range(30):
        tree = random_tree(rng, rng.randint(2, 14))
        result = gp_tree(tree)
        assert result.value == gp_exact(tree)[0]
        assert result.verified and result.method == METHOD_TREE


def test_complement_tree_fixtures():
    assert gp_complement_tree(generate(Star(5))).value == 6
    assert gp_complement_tree(generate(DoubleStar(2, 2))).value == 4
    # single-leaf-center double stars: the proof's diam-3 case gives alpha
    assert gp_complement_tree(generate(Path(4))).value == 2
    assert gp_complement_tree(generate(DoubleStar(1, 2))).value == 3


def test_complement_tree_agrees_with_oracle():
    rng = random.Random(109)
    deep = 0
    for _ in range(40):
        tree = random_tree(rng, rng.randint(2, 14))
        result = gp_complement_tree(tree)
        assert result.value == gp_exact(complement(tree))[0]
        assert result.verified
        if tree.diameter >= 4:
            deep += 1
    assert deep > 10


# -- closed families -----------------------------------------------------------------


def test_grid_complement_formula():
    assert gp_complement_grid(2, 2).value == 4
    assert gp_complement_grid(3, 3).value == 5
    assert gp_complement_grid(2, 3).value == 3
    for rows in range(2, 5):
        for cols in range(2, 5):
            result = gp_complement_grid(rows, cols)
            oracle = gp_exact(complement(generate(Grid(rows, cols))))[0]
            assert result.value == oracle
            assert result.verified


def test_hypercube_complement_formula():
    assert gp_complement_hypercube(3).value == 4
    assert gp_complement_hypercube(4).value == 8
    assert gp_complement_hypercube(3).value == gp_exact(complement(generate(Hypercube(3))))[0]
    with pytest.raises(DomainError):
        gp_complement_hypercube(2)


# -- dispatcher -----------------------------------------------------------------------


def test_dispatcher_method_tags():
    assert solve(generate(Petersen())).method == METHOD_DIAMETER2
    assert solve(generate(Complete(5))).method == METHOD_COGRAPH
    assert solve(generate(Path(5))).method == METHOD_TREE
    assert solve(generate(CompleteBipartite(3, 3))).method == METHOD_COGRAPH
    # Gnk is a cograph, so the cotree rule fires before the universal one
    assert solve(generate(Gnk(6, 2))).method == METHOD_COGRAPH
    # the wheel has a hub but its rim holds an induced P_4
    assert solve(generate(Wheel(6))).method == METHOD_UNIVERSAL
    assert solve(generate(Hypercube(3))).method == METHOD_BIPARTITE
    assert solve(generate(Cycle(7))).method == METHOD_EXACT


def test_dispatcher_components_sum():
    graph = disjoint_union(generate(Complete(3)), generate(Path(5)))
    result = solve(graph)
    assert result.method == METHOD_COMPONENTS_SUM
    assert result.value == 5
    assert result.verified


def test_dispatcher_on_cube_gives_alpha():
    result = solve(generate(Hypercube(3)))
    assert result.value == 4 == gp_exact(generate(Hypercube(3)), BRUTE)[0]


def test_dispatcher_always_verified_and_bounded():
    rng = random.Random(113)
    for _ in range(40):
        graph = generate(RandomGnp(rng.randint(1, 11), rng.random(), rng.getrandbits(32)))
        result = solve(graph)
        assert result.verified
        assert result.value == gp_exact(graph)[0]
        if graph.n >= 1:
            omega, _ = max_clique(graph)
            assert omega <= result.value <= graph.n


def test_formula_only_mode_refuses_hard_graphs():
    with pytest.raises(DomainError, match="no closed-form"):
        solve(generate(Cycle(7)), allow_exact=False)
    assert solve(generate(Petersen()), allow_exact=False).value == 6


def test_result_json_shape():
    blob = solve(generate(Petersen())).to_json()
    assert set(blob) == {"value", "method", "witness", "verified"}
    assert blob["value"] == 6 and blob["verified"] is True
    assert blob["witness"] == sorted(blob["witness"])


def test_empty_graph_solves_to_zero():
    assert solve(Graph(0)).value == 0
