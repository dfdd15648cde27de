"""Maximum bipartite matching and the Koenig vertex-cover construction.

Hopcroft-Karp style layered augmentation.  The independence number of a
bipartite graph is n minus the matching size; a maximum independent set
is the complement of the minimum vertex cover obtained by alternating
reachability from the unmatched left vertices.
"""

from __future__ import annotations

from collections import deque

from .graphs import BipartiteLabeling, Graph, check_labeling

_UNSET = -1


def maximum_matching(graph: Graph, labeling: BipartiteLabeling) -> dict[int, int]:
    """Maximum matching as a left-vertex -> right-vertex map."""
    check_labeling(graph, labeling)
    left = sorted(labeling.side_a)
    pair_left: dict[int, int] = {}
    pair_right: dict[int, int] = {}
    dist: dict[int, float] = {}

    def bfs() -> bool:
        queue = deque()
        for u in left:
            if u not in pair_left:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _UNSET
        reachable_free = False
        while queue:
            u = queue.popleft()
            for v in graph.neighbors(u):
                if v not in pair_right:
                    reachable_free = True
                else:
                    nxt = pair_right[v]
                    if dist[nxt] == _UNSET:
                        dist[nxt] = dist[u] + 1
                        queue.append(nxt)
        return reachable_free

    def dfs(u: int) -> bool:
        for v in graph.neighbors(u):
            nxt = pair_right.get(v)
            if nxt is None or (dist[nxt] == dist[u] + 1 and dfs(nxt)):
                pair_left[u] = v
                pair_right[v] = u
                return True
        dist[u] = _UNSET
        return False

    while bfs():
        for u in left:
            if u not in pair_left:
                dfs(u)
    return pair_left


def minimum_vertex_cover(
    graph: Graph, labeling: BipartiteLabeling, matching: dict[int, int] | None = None
) -> frozenset[int]:
    """Koenig construction: |cover| equals the maximum matching size."""
    if matching is None:
        matching = maximum_matching(graph, labeling)
    matched_right = {v: u for u, v in matching.items()}
    visited_left: set[int] = set()
    visited_right: set[int] = set()
    queue = deque(u for u in labeling.side_a if u not in matching)
    visited_left.update(queue)
    while queue:
        u = queue.popleft()
        for v in graph.neighbors(u):
            if v in visited_right or matching.get(u) == v:
                continue
            visited_right.add(v)
            owner = matched_right.get(v)
            if owner is not None and owner not in visited_left:
                visited_left.add(owner)
                queue.append(owner)
    cover = (labeling.side_a - visited_left) | visited_right
    return frozenset(cover)


def bipartite_independent_set(
    graph: Graph, labeling: BipartiteLabeling
) -> tuple[int, frozenset[int]]:
    """(independence number, witness) = complement of a minimum cover."""
    matching = maximum_matching(graph, labeling)
    cover = minimum_vertex_cover(graph, labeling, matching)
    witness = frozenset(range(graph.n)) - cover
    return graph.n - len(matching), witness
