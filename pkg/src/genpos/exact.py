"""Exact exponential-time solvers.

These are both the production fallback for arbitrary graphs and the
oracle every closed-form result is validated against.  All searches work
on bitmasks over the cached betweenness structure: a vertex x may join a
partial general position set S exactly when x is not between any pair of
S and no member of S is between x and another member.

``gp_exact`` reports, in single-threaded mode, the lexicographically
smallest maximum witness (as a sorted id sequence): the optimum value is
found by branch and bound first, then the witness is rebuilt greedily by
prefix feasibility tests.  Budgets cap search nodes and wall-clock time;
exceeding one aborts loudly with the best lower bound found, never with
a wrong answer.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .errors import BudgetExceededError, DomainError, ScaleError
from .graphs import (
    Graph,
    INFINITE,
    check_labeling,
    induced_subgraph,
    iter_bits,
    mask_of,
    simplicial_vertices,
)
from .verify import distant_edges_bound


@dataclass(frozen=True)
class SearchBudget:
    """Caps for exact search; exceeding one raises BudgetExceededError."""

    max_nodes: int = 100_000_000
    max_millis: int = 60_000
    mode: str = "branch_and_bound"

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_millis <= 0:
            raise DomainError("budget caps must be positive")
        if self.mode not in {"branch_and_bound", "brute_force"}:
            raise DomainError(f"unknown search mode {self.mode!r}")


class _Tracker:
    """Counts search nodes, watches the clock, carries the running bound.

    ``offset`` is the value already locked in by fully solved components,
    so an abort always reports a valid global lower bound.
    """

    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.offset = 0
        self.best = 0
        self._deadline = time.monotonic() + budget.max_millis / 1000.0

    def note(self, local_best: int):
        self.best = max(self.best, self.offset + local_best)

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise BudgetExceededError(
                f"node budget {self.budget.max_nodes} exhausted", self.best
            )
        if self.nodes % 4096 == 0 and time.monotonic() > self._deadline:
            raise BudgetExceededError(
                f"time budget {self.budget.max_millis} ms exhausted", self.best
            )


def _mask_is_gp(members: tuple[int, ...], mask: int, between) -> bool:
    for i, u in enumerate(members):
        row = between[u]
        for w in members[i + 1 :]:
            if row[w] & mask:
                return False
    return True


def _compatible(between, chosen: list[int], chosen_mask: int, pair_forbidden: int, x: int) -> bool:
    """May x join the general position set `chosen`?"""
    if pair_forbidden >> x & 1:
        return False
    row = between[x]
    for u in chosen:
        if row[u] & chosen_mask:
            return False
    return True


def gp_exact(graph: Graph, budget: SearchBudget | None = None) -> tuple[int, frozenset[int]]:
    """Largest general position set, with a witness attaining it.

    Disconnected graphs are solved per component and summed (the gp
    number is additive on components).  Witness: deterministic, the
    lexicographically smallest maximum set within each component.
    """
    if graph.n < 1:
        raise DomainError("gp_exact needs at least one vertex")
    budget = budget or SearchBudget()
    tracker = _Tracker(budget)
    comps = graph.components
    if len(comps) == 1:
        return _gp_component(graph, tracker, budget.mode)
    total = 0
    witness: set[int] = set()
    for comp in comps:
        sub, mapping = induced_subgraph(graph, comp)
        tracker.offset = total
        value, local = _gp_component(sub, tracker, budget.mode)
        total += value
        witness.update(mapping[v] for v in local)
        tracker.note(value)
    return total, frozenset(witness)


def _gp_component(graph: Graph, tracker: _Tracker, mode: str) -> tuple[int, frozenset[int]]:
    if graph.n == 1:
        return 1, frozenset({0})
    if mode == "brute_force":
        return _gp_brute_force(graph, tracker)
    return _gp_branch_and_bound(graph, tracker)


def _gp_brute_force(graph: Graph, tracker: _Tracker) -> tuple[int, frozenset[int]]:
    """Subsets in decreasing size, lexicographic within a size, early exit."""
    n = graph.n
    between = graph.between
    for size in range(n, 1, -1):
        for members in itertools.combinations(range(n), size):
            tracker.tick()
            if _mask_is_gp(members, mask_of(members), between):
                tracker.note(size)
                return size, frozenset(members)
    return 1, frozenset({0})


def _gp_branch_and_bound(graph: Graph, tracker: _Tracker) -> tuple[int, frozenset[int]]:
    n = graph.n
    between = graph.between

    # seed the incumbent with cheap valid general position sets
    omega, _ = max_clique(graph)
    best = max(omega, len(simplicial_vertices(graph)))
    if 2 <= graph.diameter != INFINITE:
        bound, _ = distant_edges_bound(graph)
        best = max(best, bound)
    tracker.note(best)

    order = sorted(range(n), key=lambda v: (-graph.degree(v), v))
    value = _bb_value(between, order, best, tracker)
    if value == n:
        return n, frozenset(range(n))
    witness = _lex_min_witness(graph, value, tracker)
    return value, witness


def _bb_value(between, order: list[int], start_best: int, tracker: _Tracker) -> int:
    best = start_best

    def expand(chosen: list[int], chosen_mask: int, pair_forbidden: int, cand: list[int]):
        nonlocal best
        for idx, v in enumerate(cand):
            if len(chosen) + len(cand) - idx <= best:
                return
            tracker.tick()
            new_mask = chosen_mask | 1 << v
            new_forbidden = pair_forbidden
            row_v = between[v]
            for u in chosen:
                new_forbidden |= row_v[u]
            chosen.append(v)
            if len(chosen) > best:
                best = len(chosen)
                tracker.note(best)
            narrowed = [
                x
                for x in cand[idx + 1 :]
                if _compatible(between, chosen, new_mask, new_forbidden, x)
            ]
            if narrowed:
                expand(chosen, new_mask, new_forbidden, narrowed)
            chosen.pop()

    expand([], 0, 0, order)
    return best


def _lex_min_witness(graph: Graph, target: int, tracker: _Tracker) -> frozenset[int]:
    """Greedy prefix construction of the lexicographically smallest witness."""
    between = graph.between
    n = graph.n
    chosen: list[int] = []
    chosen_mask = 0
    pair_forbidden = 0
    for v in range(n):
        if len(chosen) == target:
            break
        if not _compatible(between, chosen, chosen_mask | 1 << v, pair_forbidden, v):
            continue
        new_forbidden = pair_forbidden
        row_v = between[v]
        for u in chosen:
            new_forbidden |= row_v[u]
        chosen.append(v)
        new_mask = chosen_mask | 1 << v
        rest = [
            x
            for x in range(v + 1, n)
            if _compatible(between, chosen, new_mask, new_forbidden, x)
        ]
        if len(chosen) + len(rest) >= target and _completable(
            between, chosen, new_mask, new_forbidden, rest, target, tracker
        ):
            chosen_mask = new_mask
            pair_forbidden = new_forbidden
        else:
            chosen.pop()
    if len(chosen) != target:
        raise AssertionError("witness reconstruction failed to reach the proven optimum")
    return frozenset(chosen)


def _completable(between, chosen, chosen_mask, pair_forbidden, cand, target, tracker) -> bool:
    """Can `chosen` extend to `target` vertices using candidates?"""
    if len(chosen) >= target:
        return True
    if len(chosen) + len(cand) < target:
        return False
    for idx, v in enumerate(cand):
        if len(chosen) + len(cand) - idx < target:
            return False
        tracker.tick()
        new_mask = chosen_mask | 1 << v
        new_forbidden = pair_forbidden
        row_v = between[v]
        for u in chosen:
            new_forbidden |= row_v[u]
        chosen.append(v)
        narrowed = [
            x
            for x in cand[idx + 1 :]
            if _compatible(between, chosen, new_mask, new_forbidden, x)
        ]
        ok = _completable(between, chosen, new_mask, new_forbidden, narrowed, target, tracker)
        chosen.pop()
        if ok:
            return True
    return False


# -- clique and independence ------------------------------------------------


def max_clique(graph: Graph) -> tuple[int, frozenset[int]]:
    """Exact maximum clique: branch and bound with greedy coloring bounds."""
    n = graph.n
    if n == 0:
        return 0, frozenset()
    adj = graph.adj
    best = 0
    best_mask = 0

    def expand(r_mask: int, r_size: int, p_mask: int):
        nonlocal best, best_mask
        if not p_mask:
            if r_size > best:
                best, best_mask = r_size, r_mask
            return
        # greedy coloring of the candidates; color number bounds the clique
        order: list[tuple[int, int]] = []
        rest = p_mask
        color = 0
        while rest:
            color += 1
            q = rest
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q ^= low
                q &= ~adj[v]
                rest ^= low
                order.append((v, color))
        p = p_mask
        for v, c in reversed(order):
            if r_size + c <= best:
                return
            bit = 1 << v
            expand(r_mask | bit, r_size + 1, p & adj[v])
            p ^= bit

    expand(0, 0, (1 << n) - 1)
    return best, frozenset(iter_bits(best_mask))


def max_independent_set(graph: Graph) -> tuple[int, frozenset[int]]:
    """Maximum independent set via maximum clique of the complement."""
    from .graphs import complement

    return max_clique(complement(graph))


# -- largest induced union of at least two cliques ---------------------------


def max_clique_union(graph: Graph) -> tuple[int, frozenset[int]]:
    """Largest vertex set inducing a disjoint union of >= 2 complete graphs.

    Equivalently the largest induced complete multipartite subgraph of
    the complement.  For a complete graph (no such set exists) the value
    is 1 with a single-vertex witness, matching the usual convention.
    """
    n = graph.n
    if n < 1:
        raise DomainError("needs at least one vertex")
    if graph.is_complete():
        return 1, frozenset({0})
    adj = graph.adj
    best = 1
    best_mask = 1

    def dfs(start: int, size: int, set_mask: int, parts: list[int]):
        nonlocal best, best_mask
        for x in range(start, n):
            if size + (n - x) <= best:
                return
            seen = adj[x] & set_mask
            if seen == 0:
                new_parts = parts + [1 << x]
            elif seen in parts:
                new_parts = [p | 1 << x if p == seen else p for p in parts]
            else:
                continue
            new_mask = set_mask | 1 << x
            if len(new_parts) >= 2 and size + 1 > best:
                best = size + 1
                best_mask = new_mask
            dfs(x + 1, size + 1, new_mask, new_parts)

    dfs(0, 0, 0, [])
    return best, frozenset(iter_bits(best_mask))


# -- largest induced complete bipartite subgraph ------------------------------


def max_induced_biclique(graph: Graph, labeling) -> tuple[int, frozenset[int]]:
    """Largest induced complete bipartite subgraph with both sides nonempty.

    The smaller side of the bipartition is enumerated; for a fixed choice
    there the other side is maximized as the common neighborhood.
    Returns (0, empty) when no cross edge exists at all.
    """
    check_labeling(graph, labeling)
    side_x = sorted(labeling.side_a)
    side_y = sorted(labeling.side_b)
    if len(side_y) < len(side_x):
        side_x, side_y = side_y, side_x
    adj = graph.adj
    y_mask = mask_of(side_y)
    best = 0
    best_witness: frozenset[int] = frozenset()

    def record(chosen: list[int], common: int):
        nonlocal best, best_witness
        total = len(chosen) + common.bit_count()
        if total < best:
            return
        witness = frozenset(chosen) | frozenset(iter_bits(common))
        if total > best or sorted(witness) < sorted(best_witness):
            best, best_witness = total, witness

    def dfs(idx: int, chosen: list[int], common: int):
        if len(chosen) + (len(side_x) - idx) + common.bit_count() <= best:
            return
        for i in range(idx, len(side_x)):
            v = side_x[i]
            narrowed = common & adj[v]
            if not narrowed:
                continue
            chosen.append(v)
            record(chosen, narrowed)
            dfs(i + 1, chosen, narrowed)
            chosen.pop()

    dfs(0, [], y_mask)
    return best, best_witness


# -- hull numbers (tiny scale) ------------------------------------------------


def hull_numbers(graph: Graph) -> tuple[int, int]:
    """(hull number, upper hull number) by subset enumeration, n <= 12.

    h: minimum size of a set whose convex closure is everything.
    h+: maximum size of a hull set none of whose proper subsets is one.
    """
    n = graph.n
    if n > 12:
        raise ScaleError("hull numbers are only computed for n <= 12")
    if n < 2 or len(graph.components) != 1:
        raise DomainError("hull numbers need a connected graph on >= 2 vertices")
    between = graph.between
    pair = [
        [between[u][v] | 1 << u | 1 << v for v in range(n)]
        for u in range(n)
    ]
    full = (1 << n) - 1
    closure_of: dict[int, int] = {}

    def close(mask: int) -> int:
        cached = closure_of.get(mask)
        if cached is not None:
            return cached
        current = mask
        while True:
            new = current
            members = list(iter_bits(current))
            for i, u in enumerate(members):
                row = pair[u]
                for v in members[i + 1 :]:
                    new |= row[v]
            if new == current:
                break
            current = new
        closure_of[mask] = current
        return current

    h = None
    h_plus = 0
    for mask in range(1, 1 << n):
        if close(mask) != full:
            continue
        size = mask.bit_count()
        if h is None or size < h:
            h = size
        if size > h_plus:
            minimal = True
            rest = mask
            while rest:
                low = rest & -rest
                rest ^= low
                if close(mask ^ low) == full:
                    minimal = False
                    break
            if minimal:
                h_plus = size
    return h, h_plus
