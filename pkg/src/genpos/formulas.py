"""Closed-form and polynomial general position numbers, plus a dispatcher.

Every routine returns a :class:`GpResult` whose ``verified`` flag records
whether its witness re-passed the definitional check and has exactly the
reported cardinality; results without a witness report ``verified=False``.

The dispatcher :func:`solve` tries, in order: per-component additivity,
complete graphs, trees, cographs, universal vertices, diameter two,
connected bipartite with diameter two or three, and finally exact search.
The first applicable rule wins and its tag is reported.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cograph import NotCograph, build_cotree, cluster_witness
from .errors import DomainError
from .exact import (
    SearchBudget,
    gp_exact,
    max_clique,
    max_clique_union,
    max_induced_biclique,
)
from .families import KnMinus, check_kn_minus_ranges
from .graphs import (
    BipartiteLabeling,
    Graph,
    INFINITE,
    complement,
    check_labeling,
    induced_subgraph,
    require_bipartite,
    two_coloring,
)
from .matching import bipartite_independent_set
from .verify import is_gp_definitional

METHOD_EXACT = "Exact"
METHOD_DIAMETER2 = "Diameter2"
METHOD_COGRAPH = "Cograph"
METHOD_UNIVERSAL = "UniversalVertex"
METHOD_KN_MINUS = "KnMinusFormula"
METHOD_BIPARTITE = "BipartiteEquality"
METHOD_BIPARTITE_COMPLEMENT = "BipartiteComplement"
METHOD_TREE = "TreeLeaves"
METHOD_COMPLEMENT_TREE = "ComplementTree"
METHOD_COMPLEMENT_GRID = "ComplementGrid"
METHOD_COMPLEMENT_HYPERCUBE = "ComplementHypercube"
METHOD_COMPONENTS_SUM = "ComponentsSum"


@dataclass(frozen=True)
class GpResult:
    """A computed gp number with provenance and an optional witness."""

    value: int
    method: str
    witness: frozenset[int] | None = None
    verified: bool = False

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "method": self.method,
            "witness": sorted(self.witness) if self.witness is not None else None,
            "verified": self.verified,
        }


@dataclass(frozen=True)
class AlphaBound:
    """Upper-bound report for bipartite graphs of diameter >= 4.

    The independence number only bounds the gp number here; it is NOT
    the answer, and callers must fall back to exact search.
    """

    upper_bound: int
    witness: frozenset[int]

    def to_json(self) -> dict:
        return {"upper_bound": self.upper_bound, "witness": sorted(self.witness)}


@dataclass(frozen=True)
class MaxDegreeSet:
    """Vertices adjacent to the entire opposite side of a bipartition."""

    in_a: frozenset[int]
    in_b: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.in_a) + len(self.in_b)

    @property
    def vertices(self) -> frozenset[int]:
        return self.in_a | self.in_b


def _result(graph: Graph, value: int, witness: frozenset[int] | None, method: str) -> GpResult:
    verified = (
        witness is not None
        and len(witness) == value
        and is_gp_definitional(graph, witness) is True
    )
    return GpResult(value, method, witness, verified)


def full_degree_vertices(graph: Graph, labeling: BipartiteLabeling) -> MaxDegreeSet:
    check_labeling(graph, labeling)
    deg_a = len(labeling.side_b)
    deg_b = len(labeling.side_a)
    return MaxDegreeSet(
        frozenset(v for v in labeling.side_a if graph.degree(v) == deg_a),
        frozenset(v for v in labeling.side_b if graph.degree(v) == deg_b),
    )


# -- diameter 2 and friends ---------------------------------------------------


def gp_diameter2(graph: Graph) -> GpResult:
    """gp = max(clique number, largest induced union of >= 2 cliques)."""
    if graph.diameter != 2:
        raise DomainError("gp_diameter2 needs a connected graph of diameter exactly 2")
    omega, clique = max_clique(graph)
    eta, union_set = max_clique_union(graph)
    if omega >= eta:
        return _result(graph, omega, clique, METHOD_DIAMETER2)
    return _result(graph, eta, union_set, METHOD_DIAMETER2)


def gp_cograph(graph: Graph) -> GpResult:
    """gp of a connected cograph, by linear DP on the cotree.

    A connected cograph has diameter at most 2, so its gp number is the
    largest induced disjoint union of complete subgraphs (the clique
    number when a single clique wins); that is the cotree's ``cluster``
    annotation.  Note this can exceed max(alpha, omega): for
    K_1 + (K_2 u 2K_1) the cluster value is 4 while alpha = omega = 3.
    """
    if len(graph.components) != 1:
        raise DomainError("gp_cograph needs a connected graph")
    tree = build_cotree(graph)
    if isinstance(tree, NotCograph):
        raise DomainError(f"not a cograph: induced P_4 {list(tree.path)}")
    return _result(graph, tree.cluster, cluster_witness(tree), METHOD_COGRAPH)


def universal_vertices(graph: Graph) -> frozenset[int]:
    return frozenset(v for v in range(graph.n) if graph.degree(v) == graph.n - 1)


def gp_universal_vertex(graph: Graph) -> GpResult:
    """gp = max(|U| + omega(G - U), eta(G - U)) when universal vertices exist."""
    if graph.is_complete():
        raise DomainError("gp_universal_vertex needs a non-complete graph")
    universal = universal_vertices(graph)
    if not universal:
        raise DomainError("gp_universal_vertex needs at least one universal vertex")
    rest = frozenset(range(graph.n)) - universal
    sub, mapping = induced_subgraph(graph, rest)
    omega, clique = max_clique(sub)
    eta, union_set = max_clique_union(sub)
    clique_value = len(universal) + omega
    if clique_value >= eta:
        witness = universal | frozenset(mapping[v] for v in clique)
        return _result(graph, clique_value, witness, METHOD_UNIVERSAL)
    witness = frozenset(mapping[v] for v in union_set)
    return _result(graph, eta, witness, METHOD_UNIVERSAL)


def gp_kn_minus(spec: KnMinus) -> GpResult:
    """Closed forms for complete graphs minus the edges of a small subgraph.

    The wheel case keeps a second term beyond the clique one: deleting
    E(W_k) isolates the hub among the wheel's vertices, so the hub plus
    the best induced clique union of the rim complement is in general
    position.  That term is 5 for k = 5 (hub plus two diagonal edges),
    4 for k = 6, and at most the clique term for k >= 7.
    """
    n, kind, args = spec.n, spec.h_kind, spec.h_args
    check_kn_minus_ranges(spec)
    if kind == "K":
        (k,) = args
        value = max(k, n - k + 1)
    elif kind == "K1":
        (k,) = args
        value = max(k + 1, n - 1)
    elif kind == "P":
        (k,) = args
        value = max(3, n - k + (k + 1) // 2)
    elif kind == "Krs":
        r, s = args
        value = max(r + s, n - r)
    elif kind == "W":
        (k,) = args
        rim = k - 1
        rim_cluster = 4 if rim == 4 else max(3, rim // 2)
        value = max(n - k + (k - 1) // 2, 1 + rim_cluster)
    else:  # cycle
        (k,) = args
        value = max(4, n - 2) if k == 4 else max(3, n - k + k // 2)
    return GpResult(value, METHOD_KN_MINUS, None, False)


# -- bipartite results --------------------------------------------------------


def alpha_bipartite(graph: Graph, labeling: BipartiteLabeling) -> tuple[int, frozenset[int]]:
    """Independence number of a bipartite graph via maximum matching."""
    return bipartite_independent_set(graph, labeling)


def gp_bipartite(graph: Graph, labeling: BipartiteLabeling) -> GpResult | AlphaBound:
    """gp of connected bipartite G: alpha when diam is 2 or 3.

    For diameter >= 4 the independence number is only an upper bound and
    an :class:`AlphaBound` is returned instead of an answer.
    """
    if graph.n < 3:
        raise DomainError("gp_bipartite needs at least 3 vertices")
    if len(graph.components) != 1:
        raise DomainError("gp_bipartite needs a connected graph")
    check_labeling(graph, labeling)
    alpha, witness = alpha_bipartite(graph, labeling)
    if graph.diameter in (2, 3):
        return _result(graph, alpha, witness, METHOD_BIPARTITE)
    return AlphaBound(alpha, witness)


def bipartite_complement_profile(graph: Graph, labeling: BipartiteLabeling) -> dict:
    """All ingredients of the bipartite-complement formula, by diameter case.

    Keys: ``diameter`` (of the complement), ``case`` in {"trivial", 2, 3},
    and for the nontrivial cases the term values and their witnesses
    (vertex sets of the original graph, reusable in the complement since
    ids are shared).
    """
    check_labeling(graph, labeling)
    co = complement(graph)
    diam = co.diameter
    profile: dict = {"diameter": diam}
    if diam == INFINITE or diam <= 1:
        profile["case"] = "trivial"
        profile["value"] = graph.n
        return profile
    alpha, alpha_wit = alpha_bipartite(graph, labeling)
    if diam == 2:
        psi, psi_wit = max_induced_biclique(graph, labeling)
        profile.update(
            {
                "case": 2,
                "alpha": alpha,
                "alpha_witness": alpha_wit,
                "psi": psi,
                "psi_witness": psi_wit,
                "value": max(alpha, psi),
            }
        )
        return profile
    full = full_degree_vertices(graph, labeling)
    psi_wo_a, wit_a = _psi_without(graph, labeling, full.in_a)
    psi_wo_b, wit_b = _psi_without(graph, labeling, full.in_b)
    profile.update(
        {
            "case": 3,
            "alpha": alpha,
            "alpha_witness": alpha_wit,
            "psi_without_full_a": psi_wo_a,
            "psi_without_full_a_witness": wit_a,
            "psi_without_full_b": psi_wo_b,
            "psi_without_full_b_witness": wit_b,
            "full_degree": full,
            "value": max(alpha, psi_wo_a, psi_wo_b, full.size),
        }
    )
    return profile


def _psi_without(
    graph: Graph, labeling: BipartiteLabeling, removed: frozenset[int]
) -> tuple[int, frozenset[int]]:
    """Biclique value of G minus a vertex set, witness lifted back."""
    keep = frozenset(range(graph.n)) - removed
    if not (keep & labeling.side_a) or not (keep & labeling.side_b):
        return 0, frozenset()
    sub, mapping = induced_subgraph(graph, keep)
    index = {old: new for new, old in enumerate(mapping)}
    sub_labeling = BipartiteLabeling(
        frozenset(index[v] for v in labeling.side_a & keep),
        frozenset(index[v] for v in labeling.side_b & keep),
    )
    value, witness = max_induced_biclique(sub, sub_labeling)
    return value, frozenset(mapping[v] for v in witness)


def gp_bipartite_complement(graph: Graph, labeling: BipartiteLabeling) -> GpResult:
    """gp of the complement of a bipartite graph, by the diameter cases."""
    profile = bipartite_complement_profile(graph, labeling)
    co = complement(graph)
    if profile["case"] == "trivial":
        witness = frozenset(range(graph.n))
        return _result(co, graph.n, witness, METHOD_BIPARTITE_COMPLEMENT)
    if profile["case"] == 2:
        candidates = [
            (profile["alpha"], profile["alpha_witness"]),
            (profile["psi"], profile["psi_witness"]),
        ]
    else:
        candidates = [
            (profile["alpha"], profile["alpha_witness"]),
            (profile["psi_without_full_a"], profile["psi_without_full_a_witness"]),
            (profile["psi_without_full_b"], profile["psi_without_full_b_witness"]),
            (profile["full_degree"].size, profile["full_degree"].vertices),
        ]
    value = profile["value"]
    witness = next(wit for val, wit in candidates if val == value)
    return _result(co, value, witness, METHOD_BIPARTITE_COMPLEMENT)


# -- trees and named complements ----------------------------------------------


def _leaves(graph: Graph) -> frozenset[int]:
    return frozenset(v for v in range(graph.n) if graph.degree(v) == 1)


def is_tree(graph: Graph) -> bool:
    return len(graph.components) == 1 and graph.m == graph.n - 1


def gp_tree(graph: Graph) -> GpResult:
    """gp of a tree is its number of leaves (the leaf set is the gp-set)."""
    if graph.n < 2 or not is_tree(graph):
        raise DomainError("gp_tree needs a tree on at least 2 vertices")
    leaves = _leaves(graph)
    return _result(graph, len(leaves), leaves, METHOD_TREE)


def gp_complement_tree(graph: Graph) -> GpResult:
    """gp of the complement of a tree.

    Stars give the whole vertex set (the complement splits off the
    center); diameter-3 trees (double stars) give n - 2, realized by the
    leaves; deeper trees have complements of diameter 2 where the answer
    is max(independence number, max degree + 1).  Note the max-degree
    term only competes when the tree has diameter >= 4: for double stars
    with a single-leaf center it would overshoot, so it is not used
    there.
    """
    if graph.n < 2 or not is_tree(graph):
        raise DomainError("gp_complement_tree needs a tree on at least 2 vertices")
    co = complement(graph)
    diam = graph.diameter
    if diam <= 2:  # star: complement = K_{n-1} plus the isolated center
        witness = frozenset(range(graph.n))
        return _result(co, graph.n, witness, METHOD_COMPLEMENT_TREE)
    labeling = require_bipartite(graph)
    alpha, alpha_wit = alpha_bipartite(graph, labeling)
    if diam == 3:  # double star
        return _result(co, alpha, alpha_wit, METHOD_COMPLEMENT_TREE)
    delta = max(graph.degree(v) for v in range(graph.n))
    if alpha >= delta + 1:
        return _result(co, alpha, alpha_wit, METHOD_COMPLEMENT_TREE)
    center = min(v for v in range(graph.n) if graph.degree(v) == delta)
    witness = frozenset({center}) | frozenset(graph.neighbors(center))
    return _result(co, delta + 1, witness, METHOD_COMPLEMENT_TREE)


def gp_complement_grid(rows: int, cols: int) -> GpResult:
    """gp of the complement of the rows x cols grid."""
    if rows < 2 or cols < 2:
        raise DomainError("grid complement formula needs rows, cols >= 2")
    from .families import Grid, generate

    grid = generate(Grid(rows, cols))
    co = complement(grid)
    if rows == 2 and cols == 2:
        witness = frozenset(range(4))
        return _result(co, 4, witness, METHOD_COMPLEMENT_GRID)
    value = -(-rows // 2) * -(-cols // 2) + (rows // 2) * (cols // 2)
    witness = frozenset(
        i * cols + j for i in range(rows) for j in range(cols) if (i + j) % 2 == 0
    )
    return _result(co, value, witness, METHOD_COMPLEMENT_GRID)


def gp_complement_hypercube(k: int) -> GpResult:
    """gp of the complement of the k-cube: 2^(k-1), one parity class."""
    if k < 3:
        raise DomainError("hypercube complement formula needs k >= 3")
    from .families import Hypercube, generate

    cube = generate(Hypercube(k))
    co = complement(cube)
    witness = frozenset(x for x in range(1 << k) if x.bit_count() % 2 == 0)
    return _result(co, 1 << (k - 1), witness, METHOD_COMPLEMENT_HYPERCUBE)


# -- the dispatcher -----------------------------------------------------------


def solve(
    graph: Graph, budget: SearchBudget | None = None, *, allow_exact: bool = True
) -> GpResult:
    """Pick the cheapest applicable method; fall back to exact search.

    With ``allow_exact=False`` the cascade refuses graphs no closed-form
    or polynomial method covers instead of falling back.
    """
    comps = graph.components
    if len(comps) == 0:
        return GpResult(0, METHOD_COMPONENTS_SUM, frozenset(), True)
    if len(comps) > 1:
        total = 0
        witness: set[int] = set()
        for comp in comps:
            sub, mapping = induced_subgraph(graph, comp)
            part = solve(sub, budget, allow_exact=allow_exact)
            total += part.value
            witness.update(mapping[v] for v in part.witness)
        return _result(graph, total, frozenset(witness), METHOD_COMPONENTS_SUM)
    if graph.is_complete():
        witness = frozenset(range(graph.n))
        return _result(graph, graph.n, witness, METHOD_COGRAPH)
    if is_tree(graph):
        return gp_tree(graph)
    if not isinstance(build_cotree(graph), NotCograph):
        return gp_cograph(graph)
    if universal_vertices(graph):
        return gp_universal_vertex(graph)
    if graph.diameter == 2:
        return gp_diameter2(graph)
    labeling = two_coloring(graph)
    if isinstance(labeling, BipartiteLabeling) and graph.diameter in (2, 3):
        outcome = gp_bipartite(graph, labeling)
        if isinstance(outcome, GpResult):
            return outcome
    if not allow_exact:
        raise DomainError("no closed-form method applies; rerun with exact search allowed")
    value, witness = gp_exact(graph, budget)
    return _result(graph, value, witness, METHOD_EXACT)
