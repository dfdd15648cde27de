"""Cograph recognition and cotree dynamic programming.

A cograph contains no induced P_4; equivalently it is built from single
vertices by disjoint unions and joins.  ``build_cotree`` applies that
characterization recursively: a disconnected piece splits into a union
node over its components, a piece with disconnected complement splits
into a join node over its co-components, a single vertex is a leaf, and
anything else proves the graph is not a cograph, in which case an
induced P_4 is extracted and returned instead.

Union and join nodes strictly alternate along every root-leaf path and
carry (independence number, clique number, size) annotations:
union adds alphas and maxes omegas, join maxes alphas and adds omegas.

Nodes also carry ``cluster``: the largest order of an induced subgraph
that is a disjoint union of complete graphs.  A union adds the children's
values; under a join such a subgraph either lives inside one factor or is
a single clique through all of them, so the join takes the larger of the
children's best and its own clique number.  For a connected cograph the
general position number equals this cluster annotation (the graph has
diameter at most two, where gp is the larger of the clique number and
the best union of at least two cliques).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Union as TUnion

from .errors import ContractError
from .graphs import Graph, iter_bits, mask_of


@dataclass(frozen=True)
class Leaf:
    vertex: int
    alpha: int = 1
    omega: int = 1
    size: int = 1
    cluster: int = 1


@dataclass(frozen=True)
class UnionNode:
    children: tuple["Cotree", ...]
    alpha: int
    omega: int
    size: int
    cluster: int


@dataclass(frozen=True)
class JoinNode:
    children: tuple["Cotree", ...]
    alpha: int
    omega: int
    size: int
    cluster: int


Cotree = TUnion[Leaf, UnionNode, JoinNode]


@dataclass(frozen=True)
class NotCograph:
    """Refutation: the four vertices of an induced P_4, in path order."""

    path: tuple[int, int, int, int]


def make_union(children: tuple[Cotree, ...]) -> UnionNode:
    if len(children) < 2:
        raise ContractError("union node needs at least two children")
    if any(isinstance(c, UnionNode) for c in children):
        raise ContractError("union children must alternate with join nodes")
    return UnionNode(
        children,
        alpha=sum(c.alpha for c in children),
        omega=max(c.omega for c in children),
        size=sum(c.size for c in children),
        cluster=sum(c.cluster for c in children),
    )


def make_join(children: tuple[Cotree, ...]) -> JoinNode:
    if len(children) < 2:
        raise ContractError("join node needs at least two children")
    if any(isinstance(c, JoinNode) for c in children):
        raise ContractError("join children must alternate with union nodes")
    omega = sum(c.omega for c in children)
    return JoinNode(
        children,
        alpha=max(c.alpha for c in children),
        omega=omega,
        size=sum(c.size for c in children),
        cluster=max(omega, max(c.cluster for c in children)),
    )


class _P4Found(Exception):
    def __init__(self, mask: int):
        self.mask = mask


def build_cotree(graph: Graph) -> Cotree | NotCograph:
    """Cotree of a cograph, or the induced P_4 showing there is none."""
    if graph.n < 1:
        raise ContractError("cotree needs at least one vertex")
    try:
        return _build(graph, (1 << graph.n) - 1)
    except _P4Found as found:
        path = find_induced_p4(graph, found.mask)
        assert path is not None
        return NotCograph(path)


def _build(graph: Graph, mask: int) -> Cotree:
    if mask & (mask - 1) == 0:
        return Leaf(mask.bit_length() - 1)
    comps = _components_within(graph, mask, co=False)
    if len(comps) > 1:
        return make_union(tuple(_build(graph, c) for c in comps))
    cocomps = _components_within(graph, mask, co=True)
    if len(cocomps) > 1:
        return make_join(tuple(_build(graph, c) for c in cocomps))
    raise _P4Found(mask)


def _components_within(graph: Graph, mask: int, co: bool) -> list[int]:
    comps = []
    seen = 0
    for s in iter_bits(mask):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            reach = 0
            for u in iter_bits(frontier):
                row = graph.adj[u]
                if co:
                    row = ~row & ~(1 << u)
                reach |= row & mask
            frontier = reach & ~comp
            comp |= reach
        seen |= comp
        comps.append(comp)
    return comps


def find_induced_p4(graph: Graph, mask: int | None = None) -> tuple[int, int, int, int] | None:
    """Scan quadruples (lexicographically) for an induced P_4."""
    members = list(iter_bits(mask)) if mask is not None else list(range(graph.n))
    for quad in itertools.combinations(members, 4):
        degrees = []
        edges = 0
        for v in quad:
            deg = sum(1 for u in quad if u != v and graph.has_edge(u, v))
            degrees.append(deg)
            edges += deg
        if edges != 6 or sorted(degrees) != [1, 1, 2, 2]:
            continue
        ends = [v for v, d in zip(quad, degrees) if d == 1]
        first = ends[0]
        second = next(u for u in quad if graph.has_edge(first, u))
        third = next(u for u in quad if u != first and graph.has_edge(second, u))
        return (first, second, third, ends[1])
    return None


def cotree_invariants(tree: Cotree) -> tuple[int, int]:
    """(independence number, clique number) read off the annotations."""
    _validate(tree, parent=None)
    return tree.alpha, tree.omega


def _validate(tree: Cotree, parent: type | None) -> None:
    if isinstance(tree, Leaf):
        return
    if not isinstance(tree, (UnionNode, JoinNode)):
        raise ContractError(f"not a cotree node: {tree!r}")
    if len(tree.children) < 2:
        raise ContractError("internal cotree node with fewer than two children")
    if parent is type(tree):
        raise ContractError("union/join nodes must alternate")
    for child in tree.children:
        _validate(child, type(tree))


def independent_set_witness(tree: Cotree) -> frozenset[int]:
    """A maximum independent set realizing the alpha annotation."""
    if isinstance(tree, Leaf):
        return frozenset({tree.vertex})
    if isinstance(tree, UnionNode):
        out: set[int] = set()
        for child in tree.children:
            out |= independent_set_witness(child)
        return frozenset(out)
    best = max(tree.children, key=lambda c: c.alpha)
    return independent_set_witness(best)


def clique_witness(tree: Cotree) -> frozenset[int]:
    """A maximum clique realizing the omega annotation."""
    if isinstance(tree, Leaf):
        return frozenset({tree.vertex})
    if isinstance(tree, JoinNode):
        out: set[int] = set()
        for child in tree.children:
            out |= clique_witness(child)
        return frozenset(out)
    best = max(tree.children, key=lambda c: c.omega)
    return clique_witness(best)


def cluster_witness(tree: Cotree) -> frozenset[int]:
    """A vertex set of size `cluster` inducing a disjoint union of cliques."""
    if isinstance(tree, Leaf):
        return frozenset({tree.vertex})
    if isinstance(tree, UnionNode):
        out: set[int] = set()
        for child in tree.children:
            out |= cluster_witness(child)
        return frozenset(out)
    if tree.omega >= max(c.cluster for c in tree.children):
        return clique_witness(tree)
    best = max(tree.children, key=lambda c: c.cluster)
    return cluster_witness(best)


def cotree_leaves(tree: Cotree) -> frozenset[int]:
    if isinstance(tree, Leaf):
        return frozenset({tree.vertex})
    out: set[int] = set()
    for child in tree.children:
        out |= cotree_leaves(child)
    return frozenset(out)


def cotree_to_graph(tree: Cotree) -> Graph:
    """Rebuild the graph a cotree describes (leaves keep their ids)."""
    leaves = cotree_leaves(tree)
    n = max(leaves) + 1
    if len(leaves) != n:
        raise ContractError("cotree leaves must be exactly 0..n-1")
    edges: list[tuple[int, int]] = []

    def walk(node: Cotree) -> frozenset[int]:
        if isinstance(node, Leaf):
            return frozenset({node.vertex})
        child_sets = [walk(c) for c in node.children]
        if isinstance(node, JoinNode):
            for i, a in enumerate(child_sets):
                for b in child_sets[i + 1 :]:
                    edges.extend((u, v) for u in a for v in b)
        out: set[int] = set()
        for cs in child_sets:
            out |= cs
        return frozenset(out)

    walk(tree)
    return Graph(n, edges)


def cotree_to_json(tree: Cotree) -> dict:
    if isinstance(tree, Leaf):
        return {"leaf": tree.vertex}
    tag = "union" if isinstance(tree, UnionNode) else "join"
    return {
        tag: [cotree_to_json(c) for c in tree.children],
        "alpha": tree.alpha,
        "omega": tree.omega,
        "size": tree.size,
        "cluster": tree.cluster,
    }
