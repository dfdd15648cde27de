"""Immutable simple graphs with cached metric structure.

Vertices are dense integer ids ``0..n-1``.  Adjacency is stored as one
bitmask per vertex, which keeps the exact solvers tight.  All-pairs hop
distances are computed lazily (BFS from every vertex) and cached on the
graph; a disconnected pair gets the float ``INFINITE`` sentinel, so a
distance sum involving an unreachable vertex can never collide with a
finite value.

Graphs are immutable after construction and safe to share between
threads; the lazy caches use single-assignment semantics (at most one
initialization is ever visible).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import DomainError, ParseError

INFINITE = math.inf


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Simple undirected graph on vertices ``0..n-1``, immutable."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise DomainError("vertex count must be nonnegative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.adj: tuple[int, ...] = tuple(rows)

    @classmethod
    def _from_rows(cls, rows: list[int]) -> "Graph":
        out = cls.__new__(cls)
        out.n = len(rows)
        out.adj = tuple(rows)
        return out

    # -- basic accessors ------------------------------------------------

    @cached_property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        return iter_bits(self.adj[v])

    def vertices(self) -> range:
        return range(self.n)

    def edge_list(self) -> tuple[tuple[int, int], ...]:
        """All edges as sorted (u, v) pairs with u < v, in lex order."""
        return tuple(
            (u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))
        )

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    # -- cached metric structure ----------------------------------------

    @cached_property
    def dist(self) -> tuple[tuple[float, ...], ...]:
        """All-pairs hop distances; INFINITE for disconnected pairs."""
        n = self.n
        adj = self.adj
        rows = []
        for s in range(n):
            d: list[float] = [INFINITE] * n
            d[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                du1 = d[u] + 1
                rest = adj[u]
                while rest:
                    low = rest & -rest
                    v = low.bit_length() - 1
                    rest ^= low
                    if d[v] == INFINITE:
                        d[v] = du1
                        queue.append(v)
            rows.append(tuple(d))
        return tuple(rows)

    @cached_property
    def between(self) -> tuple[tuple[int, ...], ...]:
        """``between[u][w]``: bitmask of x strictly inside some u,w-geodesic.

        Endpoints are excluded; the mask is 0 when u, w are disconnected
        (no geodesic joins them) or adjacent.
        """
        n = self.n
        dist = self.dist
        rows = [[0] * n for _ in range(n)]
        for u in range(n):
            du = dist[u]
            for w in range(u + 1, n):
                duw = dist[w][u]
                if duw == INFINITE or duw == 1:
                    continue
                dw = dist[w]
                mask = 0
                for x in range(n):
                    if x != u and x != w and du[x] + dw[x] == duw:
                        mask |= 1 << x
                rows[u][w] = rows[w][u] = mask
        return tuple(map(tuple, rows))

    @cached_property
    def components(self) -> tuple[frozenset[int], ...]:
        """Connected components, ordered by smallest member."""
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                reach = 0
                for u in iter_bits(frontier):
                    reach |= self.adj[u]
                frontier = reach & ~comp
                comp |= reach
            seen |= comp
            out.append(frozenset(iter_bits(comp)))
        return tuple(out)

    @cached_property
    def diameter(self) -> float:
        """Max finite distance; INFINITE when disconnected, 0 when n <= 1."""
        if self.n <= 1:
            return 0
        if len(self.components) > 1:
            return INFINITE
        return max(max(row) for row in self.dist)

    # -- value semantics -------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- construction from text ----------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    First non-blank line: vertex count n.  Every further non-blank line:
    ``u v`` with 0 <= u,v < n and u != v.  Duplicate edges collapse.
    LF and CRLF are both accepted.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise ParseError(f"line {lineno}: expected vertex count, got {line!r}") from None
            if n < 0:
                raise ParseError(f"line {lineno}: vertex count must be nonnegative")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex id in {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex id out of range 0..{n - 1}")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
    if n is None:
        raise ParseError("empty input: missing vertex count line")
    return Graph(n, edges)


def emit_edge_list(graph: Graph) -> str:
    lines = [str(graph.n)]
    lines.extend(f"{u} {v}" for u, v in graph.edge_list())
    return "\n".join(lines) + "\n"


# -- constructions ---------------------------------------------------------


def complement(graph: Graph) -> Graph:
    n = graph.n
    full = (1 << n) - 1
    return Graph._from_rows([full & ~graph.adj[v] & ~(1 << v) for v in range(n)])


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph plus the new-id -> old-id mapping (sorted order)."""
    mapping = tuple(sorted(check_vertex_set(graph, vertices)))
    index = {old: new for new, old in enumerate(mapping)}
    edges = [
        (index[u], index[v])
        for i, u in enumerate(mapping)
        for v in mapping[i + 1 :]
        if graph.has_edge(u, v)
    ]
    return Graph(len(mapping), edges), mapping


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    edges = list(g.edge_list()) + [(u + shift, v + shift) for u, v in h.edge_list()]
    return Graph(g.n + h.n, edges)


def join(g: Graph, h: Graph) -> Graph:
    shift = g.n
    edges = list(disjoint_union(g, h).edge_list())
    edges.extend((u, v + shift) for u in range(g.n) for v in range(h.n))
    return Graph(g.n + h.n, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; pair (a, b) is numbered a * n(h) + b."""
    edges = []
    for a in range(g.n):
        base = a * h.n
        for u, v in h.edge_list():
            edges.append((base + u, base + v))
    for u, v in g.edge_list():
        for b in range(h.n):
            edges.append((u * h.n + b, v * h.n + b))
    return Graph(g.n * h.n, edges)


_COMPOSE = {
    "disjoint_union": disjoint_union,
    "join": join,
    "cartesian_product": cartesian_product,
}


def compose(mode: str, g: Graph, h: Graph) -> Graph:
    try:
        fn = _COMPOSE[mode]
    except KeyError:
        raise DomainError(f"unknown composition mode {mode!r}") from None
    return fn(g, h)


# -- metric operations ------------------------------------------------------


def all_pairs_distances(graph: Graph) -> tuple[tuple[float, ...], ...]:
    return graph.dist


def diameter_and_components(graph: Graph) -> tuple[float, tuple[frozenset[int], ...]]:
    return graph.diameter, graph.components


def check_vertex(graph: Graph, v: int) -> int:
    if not (isinstance(v, int) and 0 <= v < graph.n):
        raise DomainError(f"vertex id {v!r} out of range 0..{graph.n - 1}")
    return v


def check_vertex_set(graph: Graph, vertices: Iterable[int]) -> frozenset[int]:
    out = frozenset(vertices)
    for v in out:
        check_vertex(graph, v)
    return out


def interval(graph: Graph, u: int, v: int) -> frozenset[int]:
    """All vertices on some u,v-geodesic (endpoints included)."""
    check_vertex(graph, u)
    check_vertex(graph, v)
    duv = graph.dist[u][v]
    if duv == INFINITE:
        raise DomainError(f"vertices {u} and {v} lie in different components")
    du, dv = graph.dist[u], graph.dist[v]
    return frozenset(x for x in range(graph.n) if du[x] + dv[x] == duv)


def convex_closure(graph: Graph, vertices: Iterable[int]) -> frozenset[int]:
    """Least fixed point of repeated interval expansion over the set."""
    start = check_vertex_set(graph, vertices)
    between = graph.between
    mask = mask_of(start)
    while True:
        new = mask
        members = list(iter_bits(mask))
        for i, u in enumerate(members):
            row = between[u]
            for v in members[i + 1 :]:
                new |= row[v]
        if new == mask:
            return frozenset(members)
        mask = new


# -- bipartiteness ----------------------------------------------------------


@dataclass(frozen=True)
class BipartiteLabeling:
    """A two-coloring: every edge joins side_a to side_b."""

    side_a: frozenset[int]
    side_b: frozenset[int]


@dataclass(frozen=True)
class OddCycle:
    """Refutation of bipartiteness: a closed odd walk.

    ``walk`` lists the vertices in order; consecutive entries are
    adjacent and the last is adjacent to the first, so the walk has
    ``len(walk)`` edges, an odd number.
    """

    walk: tuple[int, ...]


def two_coloring(graph: Graph) -> BipartiteLabeling | OddCycle:
    """2-color each component by BFS, or return an odd closed walk."""
    n = graph.n
    color = [-1] * n
    parent = [-1] * n
    for s in range(n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in graph.neighbors(u):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    path_u = _root_path(u, parent)
                    path_v = _root_path(v, parent)
                    while len(path_u) > 1 and len(path_v) > 1 and path_u[-2] == path_v[-2]:
                        path_u.pop()
                        path_v.pop()
                    walk = path_u + path_v[-2::-1]
                    return OddCycle(tuple(walk))
    side_a = frozenset(v for v in range(n) if color[v] == 0)
    side_b = frozenset(v for v in range(n) if color[v] == 1)
    return BipartiteLabeling(side_a, side_b)


def _root_path(v: int, parent: list[int]) -> list[int]:
    path = [v]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path


def require_bipartite(graph: Graph) -> BipartiteLabeling:
    labeling = two_coloring(graph)
    if isinstance(labeling, OddCycle):
        raise DomainError(f"graph is not bipartite: odd closed walk {list(labeling.walk)}")
    return labeling


def check_labeling(graph: Graph, labeling: BipartiteLabeling) -> None:
    """Validate that a labeling is a genuine bipartition of the graph."""
    a, b = labeling.side_a, labeling.side_b
    if a & b or (a | b) != frozenset(range(graph.n)):
        raise DomainError("labeling sides do not partition the vertex set")
    mask_a = mask_of(a)
    for u in a:
        if graph.adj[u] & mask_a:
            raise DomainError("labeling has an edge inside one side")


# -- simplicial vertices ----------------------------------------------------


def simplicial_vertices(graph: Graph) -> frozenset[int]:
    """Vertices whose open neighborhood induces a complete graph."""
    out = []
    for v in range(graph.n):
        nb = graph.adj[v]
        ok = True
        rest = nb
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            if nb & ~graph.adj[u] & ~low:
                ok = False
                break
        if ok:
            out.append(v)
    return frozenset(out)
