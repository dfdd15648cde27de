"""Exact solvers: gp search, cliques, clique unions, bicliques, hull numbers."""

import itertools
import random

import networkx as nx
import pytest

from genpos import (
    BudgetExceededError,
    DomainError,
    Graph,
    ScaleError,
    SearchBudget,
    complement,
    disjoint_union,
    generate,
    gp_exact,
    hull_numbers,
    max_clique,
    max_clique_union,
    max_independent_set,
    max_induced_biclique,
    require_bipartite,
    clique_partition,
    is_gp_definitional,
)
from genpos.families import (
    Complete,
    CompleteBipartite,
    Cycle,
    Gn,
    Gnk,
    Grid,
    Path,
    Petersen,
    RandomBipartite,
    RandomGnp,
)

BRUTE = SearchBudget(mode="brute_force")


def nx_of(graph):
    out = nx.Graph()
    out.add_nodes_from(range(graph.n))
    out.add_edges_from(graph.edge_list())
    return out


def nx_max_clique(graph):
    return max((len(c) for c in nx.find_cliques(nx_of(graph))), default=0)


# -- gp_exact -------------------------------------------------------------------


def test_paper_two_valued_graphs():
    for n in range(2, 9):
        assert gp_exact(generate(Path(n)))[0] == 2
    assert gp_exact(generate(Cycle(4)))[0] == 2


def test_petersen_and_grid_fixtures():
    assert gp_exact(generate(Petersen()))[0] == 6
    assert gp_exact(generate(Grid(3, 3)))[0] == 4


def test_additive_on_components():
    graph = disjoint_union(generate(Complete(3)), generate(Path(5)))
    value, witness = gp_exact(graph)
    assert value == 5
    assert is_gp_definitional(graph, witness) is True


def test_modes_agree_with_identical_witnesses():
    rng = random.Random(8)
    for _ in range(60):
        n = rng.randint(2, 10)
        graph = generate(RandomGnp(n, rng.choice((0.2, 0.5, 0.8)), rng.getrandbits(32)))
        bb = gp_exact(graph)
        bf = gp_exact(graph, BRUTE)
        assert bb == bf
        assert is_gp_definitional(graph, bb[1]) is True


def test_witness_is_lexicographically_least():
    rng = random.Random(12)
    for _ in range(25):
        n = rng.randint(2, 8)
        graph = generate(RandomGnp(n, 0.5, rng.getrandbits(32)))
        value, witness = gp_exact(graph)
        best = min(
            (
                sorted(c)
                for c in itertools.combinations(range(n), value)
                if is_gp_definitional(graph, c) is True
            ),
        )
        assert sorted(witness) == best


def test_no_larger_set_exists_exhaustively():
    rng = random.Random(77)
    for _ in range(15):
        n = rng.randint(3, 8)
        graph = generate(RandomGnp(n, 0.5, rng.getrandbits(32)))
        value, _ = gp_exact(graph)
        for bigger in range(value + 1, n + 1):
            assert all(
                is_gp_definitional(graph, c) is not True
                for c in itertools.combinations(range(n), bigger)
            )


def test_single_vertex():
    assert gp_exact(Graph(1)) == (1, frozenset({0}))
    with pytest.raises(DomainError):
        gp_exact(Graph(0))


def test_budget_abort_carries_lower_bound():
    graph = generate(RandomGnp(14, 0.5, 5))
    with pytest.raises(BudgetExceededError) as info:
        gp_exact(graph, SearchBudget(max_nodes=3, mode="brute_force"))
    assert info.value.lower_bound >= 0
    omega, _ = max_clique(graph)
    value, _ = gp_exact(graph)
    assert info.value.lower_bound <= value


def test_budget_validation():
    with pytest.raises(DomainError):
        SearchBudget(max_nodes=0)
    with pytest.raises(DomainError):
        SearchBudget(mode="quantum")


# -- cliques and independence ------------------------------------------------------


def test_clique_fixtures():
    assert max_clique(generate(Petersen()))[0] == 2
    assert max_clique(generate(Complete(7)))[0] == 7
    for n, k in ((5, 2), (7, 3)):
        assert max_clique(generate(Gnk(n, k)))[0] == n


def test_clique_matches_networkx():
    rng = random.Random(55)
    for _ in range(40):
        graph = generate(RandomGnp(rng.randint(1, 14), rng.random(), rng.getrandbits(32)))
        value, witness = max_clique(graph)
        assert value == nx_max_clique(graph)
        assert all(graph.has_edge(u, v) for u, v in itertools.combinations(witness, 2))


def test_independence_fixtures():
    assert max_independent_set(generate(Petersen()))[0] == 4
    for n in range(2, 9):
        assert max_independent_set(generate(Path(n)))[0] == (n + 1) // 2
    for n in range(3, 6):
        assert max_independent_set(generate(Gn(n)))[0] == n + 2


def test_independent_witness_is_independent():
    rng = random.Random(4)
    for _ in range(20):
        graph = generate(RandomGnp(rng.randint(1, 12), 0.5, rng.getrandbits(32)))
        value, witness = max_independent_set(graph)
        assert len(witness) == value
        assert not any(graph.has_edge(u, v) for u, v in itertools.combinations(witness, 2))


# -- largest induced union of cliques ------------------------------------------------


def test_clique_union_convention_on_complete_graphs():
    for n in (1, 2, 5):
        assert max_clique_union(generate(Complete(n))) == (1, frozenset({0}))


def test_clique_union_fixtures():
    assert max_clique_union(generate(Petersen()))[0] == 6
    for n in (5, 6, 7):
        for k in range(0, n - 1):
            assert max_clique_union(generate(Gnk(n, k)))[0] == n - k


def test_clique_union_witness_structure():
    rng = random.Random(19)
    for _ in range(30):
        graph = generate(RandomGnp(rng.randint(2, 12), rng.choice((0.3, 0.6)), rng.getrandbits(32)))
        value, witness = max_clique_union(graph)
        assert len(witness) == value
        if graph.is_complete():
            assert value == 1
            continue
        partition = clique_partition(graph, witness)
        assert len(partition.parts) >= 2


def test_clique_union_oracle_small():
    """Independent oracle: enumerate all subsets, test P_3-freeness directly."""
    rng = random.Random(23)
    for _ in range(15):
        n = rng.randint(2, 9)
        graph = generate(RandomGnp(n, 0.5, rng.getrandbits(32)))
        if graph.is_complete():
            continue
        best = 0
        for mask in range(1 << n):
            vs = [v for v in range(n) if mask >> v & 1]
            sub = nx_of(graph).subgraph(vs)
            comps = list(nx.connected_components(sub))
            if len(comps) >= 2 and all(
                sub.subgraph(c).number_of_edges() == len(c) * (len(c) - 1) // 2
                for c in comps
            ):
                best = max(best, len(vs))
        assert max_clique_union(graph)[0] == best


# -- largest induced biclique ----------------------------------------------------------


def test_biclique_on_paths():
    for n in range(7, 11):
        graph = generate(Path(n))
        assert max_induced_biclique(graph, require_bipartite(graph))[0] == 3


def test_biclique_on_gn_family():
    for n in range(3, 6):
        graph = generate(Gn(n))
        assert max_induced_biclique(graph, require_bipartite(graph))[0] == 2 * n


def test_biclique_requires_valid_labeling():
    graph = generate(Cycle(5))
    from genpos import BipartiteLabeling

    with pytest.raises(DomainError):
        max_induced_biclique(
            graph, BipartiteLabeling(frozenset({0, 1, 2}), frozenset({3, 4}))
        )


def test_biclique_zero_when_no_edges():
    graph = Graph(4)
    from genpos import BipartiteLabeling

    labeling = BipartiteLabeling(frozenset({0, 1}), frozenset({2, 3}))
    assert max_induced_biclique(graph, labeling) == (0, frozenset())


def test_biclique_oracle_small():
    """Independent oracle: check all subsets for induced-complete-bipartite."""
    rng = random.Random(31)
    for _ in range(15):
        a = rng.randint(1, 5)
        b = rng.randint(1, 5)
        graph = generate(RandomBipartite(a, b, 0.6, rng.getrandbits(32)))
        labeling = require_bipartite(graph)
        best = 0
        for mask in range(1 << graph.n):
            vs = frozenset(v for v in range(graph.n) if mask >> v & 1)
            left = vs & labeling.side_a
            right = vs & labeling.side_b
            if left and right and all(
                graph.has_edge(u, v) for u in left for v in right
            ):
                best = max(best, len(vs))
        value, witness = max_induced_biclique(graph, labeling)
        assert value == best
        if value:
            left = witness & labeling.side_a
            right = witness & labeling.side_b
            assert left and right
            assert all(graph.has_edge(u, v) for u in left for v in right)


# -- hull numbers ----------------------------------------------------------------------


def test_upper_hull_of_balanced_bicliques():
    for n in (2, 3):
        assert hull_numbers(generate(CompleteBipartite(n, n))) == (2, 2)


def test_hull_of_paths_is_two():
    for n in range(2, 8):
        assert hull_numbers(generate(Path(n)))[0] == 2


def test_hull_of_triangle_needs_all_vertices():
    # closure of any 2 vertices of K_3 is just those 2 vertices
    assert hull_numbers(generate(Complete(3))) == (3, 3)


def test_hull_oracle_by_direct_enumeration():
    from genpos import convex_closure

    rng = random.Random(3)
    for _ in range(10):
        n = rng.randint(2, 8)
        graph = generate(RandomGnp(n, 0.5, rng.getrandbits(32)))
        if len(graph.components) != 1:
            continue
        everything = frozenset(range(n))
        hull_sets = [
            frozenset(c)
            for size in range(1, n + 1)
            for c in itertools.combinations(range(n), size)
            if convex_closure(graph, c) == everything
        ]
        h = min(len(s) for s in hull_sets)
        h_plus = max(
            len(s)
            for s in hull_sets
            if all(convex_closure(graph, s - {v}) != everything for v in s)
        )
        assert hull_numbers(graph) == (h, h_plus)


def test_hull_scale_and_domain_guards():
    with pytest.raises(ScaleError):
        hull_numbers(generate(Path(13)))
    with pytest.raises(DomainError):
        hull_numbers(Graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(DomainError):
        hull_numbers(Graph(1))
