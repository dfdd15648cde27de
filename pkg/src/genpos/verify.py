"""Deciding whether a vertex set is in general position.

Two independent routes are implemented.  The definitional check scans
ordered triples against the distance matrix: v lies on some u,w-geodesic
exactly when d(u,v) + d(v,w) = d(u,w).  The structural check partitions
the set into the components of its induced subgraph and tests the three
structural conditions (complete components, distance-constant partition,
no additive triple of parts).  Both return ``True`` or a violation
witness that re-checks in O(1) against the distance matrix; the first
witness in lexicographic order is always the one reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .errors import ContractError, DomainError
from .graphs import Graph, INFINITE, check_vertex_set, iter_bits, mask_of


@dataclass(frozen=True)
class InteriorVertex:
    """v lies on a u,w-geodesic; all three belong to the checked set."""

    u: int
    v: int
    w: int

    kind = "interior_vertex"

    def to_json(self) -> dict:
        return {"kind": self.kind, "u": self.u, "v": self.v, "w": self.w}


@dataclass(frozen=True)
class NonCliqueComponent:
    """A component of the induced subgraph carries an induced P_3."""

    part: int
    triple: tuple[int, int, int]

    kind = "non_clique_component"

    def to_json(self) -> dict:
        return {"kind": self.kind, "part": self.part, "triple": list(self.triple)}


@dataclass(frozen=True)
class NotDistanceConstant:
    """Two cross pairs between parts i, j realize different distances."""

    i: int
    j: int
    pair_a: tuple[int, int, int]
    pair_b: tuple[int, int, int]

    kind = "not_distance_constant"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "i": self.i,
            "j": self.j,
            "pairs": [list(self.pair_a), list(self.pair_b)],
        }


@dataclass(frozen=True)
class Transitive:
    """d(part_i, part_k) = d(part_i, part_j) + d(part_j, part_k)."""

    i: int
    j: int
    k: int

    kind = "transitive"

    def to_json(self) -> dict:
        return {"kind": self.kind, "i": self.i, "j": self.j, "k": self.k}


GpViolation = Union[InteriorVertex, NonCliqueComponent, NotDistanceConstant, Transitive]


@dataclass
class CliquePartition:
    """Vertex sets of the components of the induced subgraph.

    ``part_distance`` maps (i, j) with i < j to the constant cross-part
    distance; it is filled by ``is_distance_constant``.
    """

    parts: tuple[frozenset[int], ...]
    part_distance: dict[tuple[int, int], int] | None = field(default=None)

    def distance(self, i: int, j: int) -> int:
        if self.part_distance is None:
            raise ContractError("part distances not filled; run is_distance_constant first")
        return self.part_distance[(min(i, j), max(i, j))]


def is_gp_definitional(graph: Graph, vertices) -> Union[bool, InteriorVertex]:
    """Direct definition: no member on a geodesic between two other members.

    Returns True, or the lexicographically first violating triple
    (u, v, w) with u < w and v interior.  Members in different components
    never violate (no geodesic joins them).
    """
    members = sorted(check_vertex_set(graph, vertices))
    if len(members) <= 2:
        return True
    dist = graph.dist
    for u in members:
        du = dist[u]
        for v in members:
            if v == u:
                continue
            duv = du[v]
            if duv == INFINITE:
                continue
            dv = dist[v]
            for w in members:
                if w <= u or w == v:
                    continue
                duw = du[w]
                if duw != INFINITE and duv + dv[w] == duw:
                    return InteriorVertex(u, v, w)
    return True


def clique_partition(graph: Graph, vertices) -> Union[CliquePartition, NonCliqueComponent]:
    """Partition a set into induced components, requiring each to be a clique.

    On failure returns an induced P_3 (a, b, c) inside the first
    offending component, with b adjacent to both ends.
    """
    members = check_vertex_set(graph, vertices)
    set_mask = mask_of(members)
    parts = []
    seen = 0
    for s in sorted(members):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            reach = 0
            for u in iter_bits(frontier):
                reach |= graph.adj[u] & set_mask
            frontier = reach & ~comp
            comp |= reach
        seen |= comp
        part = sorted(iter_bits(comp))
        for a_idx, a in enumerate(part):
            for b in part[a_idx + 1 :]:
                if not graph.has_edge(a, b):
                    triple = _induced_p3(graph, comp, a, b)
                    return NonCliqueComponent(len(parts), triple)
        parts.append(frozenset(part))
    return CliquePartition(tuple(parts))


def _induced_p3(graph: Graph, comp_mask: int, a: int, b: int) -> tuple[int, int, int]:
    """Shortest a,b-path inside the component; its first two hops give a P_3."""
    parent = {a: -1}
    queue = [a]
    while queue:
        nxt = []
        for u in queue:
            for v in iter_bits(graph.adj[u] & comp_mask):
                if v not in parent:
                    parent[v] = u
                    nxt.append(v)
        if b in parent:
            break
        queue = nxt
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return (path[0], path[1], path[2])


def is_distance_constant(graph: Graph, partition: CliquePartition) -> Union[bool, NotDistanceConstant]:
    """Check cross-part distances are constant; fill them in on success."""
    dist = graph.dist
    parts = [sorted(p) for p in partition.parts]
    found: dict[tuple[int, int], int] = {}
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            first = None
            for u in parts[i]:
                du = dist[u]
                for v in parts[j]:
                    d = du[v]
                    if d == INFINITE:
                        raise DomainError(
                            f"parts {i} and {j} lie in different components of the graph"
                        )
                    if first is None:
                        first = (u, v, int(d))
                    elif d != first[2]:
                        return NotDistanceConstant(i, j, first, (u, v, int(d)))
            found[(i, j)] = first[2]
    partition.part_distance = found
    return True


def is_in_transitive(partition: CliquePartition) -> Union[bool, Transitive]:
    """No ordered triple of parts may satisfy d(i,k) = d(i,j) + d(j,k)."""
    if partition.part_distance is None:
        raise ContractError("run is_distance_constant before is_in_transitive")
    p = len(partition.parts)
    for i in range(p):
        for j in range(p):
            if j == i:
                continue
            for k in range(p):
                if k == i or k == j:
                    continue
                if partition.distance(i, k) == partition.distance(i, j) + partition.distance(j, k):
                    return Transitive(i, j, k)
    return True


def is_gp_characterized(graph: Graph, vertices) -> Union[bool, GpViolation]:
    """Structural route: complete components forming an in-transitive,
    distance-constant partition.

    A set touching several components of the graph is checked per
    component; it is in general position exactly when every restriction
    is.
    """
    members = check_vertex_set(graph, vertices)
    if len(members) <= 1:
        return True
    for comp in graph.components:
        local = members & comp
        if len(local) < 2:
            continue
        partition = clique_partition(graph, local)
        if isinstance(partition, NonCliqueComponent):
            return partition
        constant = is_distance_constant(graph, partition)
        if constant is not True:
            return constant
        transitive = is_in_transitive(partition)
        if transitive is not True:
            return transitive
    return True


def violation_holds(graph: Graph, vertices, violation: GpViolation) -> bool:
    """Re-check a reported witness directly against the distance matrix."""
    members = check_vertex_set(graph, vertices)
    dist = graph.dist
    if isinstance(violation, InteriorVertex):
        u, v, w = violation.u, violation.v, violation.w
        return (
            {u, v, w} <= members
            and len({u, v, w}) == 3
            and dist[u][w] != INFINITE
            and dist[u][v] + dist[v][w] == dist[u][w]
        )
    if isinstance(violation, NonCliqueComponent):
        a, b, c = violation.triple
        return (
            {a, b, c} <= members
            and graph.has_edge(a, b)
            and graph.has_edge(b, c)
            and not graph.has_edge(a, c)
        )
    if isinstance(violation, NotDistanceConstant):
        (u1, v1, d1), (u2, v2, d2) = violation.pair_a, violation.pair_b
        return (
            {u1, v1, u2, v2} <= members
            and dist[u1][v1] == d1
            and dist[u2][v2] == d2
            and d1 != d2
        )
    if isinstance(violation, Transitive):
        return True  # part indices are only meaningful next to their partition
    return False


def edge_distance(graph: Graph, e: tuple[int, int], f: tuple[int, int]) -> float:
    """min over the four endpoint distances."""
    dist = graph.dist
    (u, v), (x, y) = e, f
    return min(dist[u][x], dist[u][y], dist[v][x], dist[v][y])


def distant_edges_bound(graph: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Greedy family of edges pairwise at edge-distance exactly diam(G).

    Returns (2 * |F|, F); the endpoint set of F is a general position
    set, so the first value is a lower bound on the gp number.  Edges are
    scanned in lexicographic order; maximality of F is not claimed.
    """
    diam = graph.diameter
    if diam == INFINITE:
        raise DomainError("distant edge bound needs a connected graph")
    if diam < 2:
        raise DomainError("distant edge bound needs diameter >= 2")
    chosen: list[tuple[int, int]] = []
    for edge in graph.edge_list():
        if all(edge_distance(graph, edge, other) == diam for other in chosen):
            chosen.append(edge)
    endpoints = {v for e in chosen for v in e}
    if is_gp_characterized(graph, endpoints) is not True:
        raise ContractError("distant edge endpoints failed the structural check")
    return 2 * len(chosen), tuple(chosen)
