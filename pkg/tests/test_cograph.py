"""Cograph recognition, cotree annotations, witness extraction."""

import itertools
import random

import pytest

from genpos import (
    ContractError,
    Graph,
    NotCograph,
    build_cotree,
    cotree_invariants,
    cotree_to_graph,
    generate,
    max_clique,
    max_independent_set,
)
from genpos.cograph import (
    JoinNode,
    Leaf,
    UnionNode,
    clique_witness,
    cotree_to_json,
    find_induced_p4,
    independent_set_witness,
    make_join,
    make_union,
)
from genpos.crosscheck import random_cograph
from genpos.families import CompleteBipartite, Cycle, Path, Petersen, RandomGnp


def has_induced_p4(graph):
    """Independent quadruple scan used as the recognition oracle."""
    for quad in itertools.combinations(range(graph.n), 4):
        for order in itertools.permutations(quad):
            a, b, c, d = order
            if a > d:
                continue
            if (
                graph.has_edge(a, b)
                and graph.has_edge(b, c)
                and graph.has_edge(c, d)
                and not graph.has_edge(a, c)
                and not graph.has_edge(a, d)
                and not graph.has_edge(b, d)
            ):
                return True
    return False


def test_p4_itself_is_refuted():
    outcome = build_cotree(generate(Path(4)))
    assert isinstance(outcome, NotCograph)
    assert sorted(outcome.path) == [0, 1, 2, 3]


def test_k33_cotree_shape():
    tree = build_cotree(generate(CompleteBipartite(3, 3)))
    assert isinstance(tree, JoinNode)
    assert len(tree.children) == 2
    assert all(isinstance(c, UnionNode) and len(c.children) == 3 for c in tree.children)
    assert cotree_invariants(tree) == (3, 2)


def test_c4_cotree_shape():
    tree = build_cotree(generate(Cycle(4)))
    assert isinstance(tree, JoinNode)
    assert all(isinstance(c, UnionNode) for c in tree.children)
    assert {frozenset(l.vertex for l in c.children) for c in tree.children} == {
        frozenset({0, 2}),
        frozenset({1, 3}),
    }


def test_recognition_matches_quadruple_scan():
    rng = random.Random(13)
    for _ in range(60):
        graph = generate(RandomGnp(rng.randint(1, 8), rng.random(), rng.getrandbits(32)))
        refuted = isinstance(build_cotree(graph), NotCograph)
        assert refuted == has_induced_p4(graph)


def test_refutation_witness_is_an_induced_path():
    rng = random.Random(29)
    found = 0
    while found < 25:
        graph = generate(RandomGnp(rng.randint(4, 10), 0.5, rng.getrandbits(32)))
        outcome = build_cotree(graph)
        if not isinstance(outcome, NotCograph):
            continue
        found += 1
        a, b, c, d = outcome.path
        assert graph.has_edge(a, b) and graph.has_edge(b, c) and graph.has_edge(c, d)
        assert not graph.has_edge(a, c)
        assert not graph.has_edge(a, d)
        assert not graph.has_edge(b, d)


def test_reconstruction_round_trip():
    rng = random.Random(37)
    for _ in range(40):
        graph = random_cograph(rng, rng.randint(1, 14))
        tree = build_cotree(graph)
        assert not isinstance(tree, NotCograph)
        assert cotree_to_graph(tree) == graph


def test_annotations_match_oracles():
    rng = random.Random(41)
    for _ in range(40):
        graph = random_cograph(rng, rng.randint(2, 16))
        tree = build_cotree(graph)
        alpha, omega = cotree_invariants(tree)
        assert alpha == max_independent_set(graph)[0]
        assert omega == max_clique(graph)[0]
        ind = independent_set_witness(tree)
        cli = clique_witness(tree)
        assert len(ind) == alpha
        assert not any(graph.has_edge(u, v) for u, v in itertools.combinations(ind, 2))
        assert len(cli) == omega
        assert all(graph.has_edge(u, v) for u, v in itertools.combinations(cli, 2))


def test_malformed_trees_rejected():
    with pytest.raises(ContractError):
        make_union((Leaf(0),))
    with pytest.raises(ContractError):
        make_union((make_union((Leaf(0), Leaf(1))), Leaf(2)))
    with pytest.raises(ContractError):
        make_join((make_join((Leaf(0), Leaf(1))), Leaf(2)))


def test_union_and_join_annotation_rules():
    union = make_union((Leaf(0), Leaf(1), Leaf(2)))
    assert (union.alpha, union.omega, union.size, union.cluster) == (3, 1, 3, 3)
    joined = make_join((union, Leaf(3)))
    assert (joined.alpha, joined.omega, joined.size, joined.cluster) == (3, 2, 4, 3)


def test_cluster_annotation_matches_subset_enumeration():
    """Independent oracle: largest induced P_3-free subgraph by brute force."""
    rng = random.Random(47)
    for _ in range(25):
        graph = random_cograph(rng, rng.randint(2, 10))
        n = graph.n
        best = 0
        for mask in range(1, 1 << n):
            vs = [v for v in range(n) if mask >> v & 1]
            p3_free = all(
                not (
                    graph.has_edge(a, b)
                    and graph.has_edge(b, c)
                    and not graph.has_edge(a, c)
                )
                for a in vs
                for b in vs
                for c in vs
                if a != b and b != c and a != c
            )
            if p3_free:
                best = max(best, len(vs))
        tree = build_cotree(graph)
        assert tree.cluster == best
        from genpos.cograph import cluster_witness

        witness = cluster_witness(tree)
        assert len(witness) == best


def test_petersen_not_cograph():
    assert isinstance(build_cotree(generate(Petersen())), NotCograph)
    assert find_induced_p4(generate(Petersen())) is not None


def test_json_serialization():
    tree = build_cotree(generate(CompleteBipartite(2, 2)))
    blob = cotree_to_json(tree)
    assert "join" in blob
    assert blob["alpha"] == 2 and blob["omega"] == 2 and blob["size"] == 4
    assert blob["join"][0]["union"] == [{"leaf": 0}, {"leaf": 1}]


def test_single_vertex_cotree():
    assert build_cotree(Graph(1)) == Leaf(0)
