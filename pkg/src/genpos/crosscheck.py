"""Formula-versus-oracle validation campaigns.

Each campaign builds instances of one family, computes the closed-form
or polynomial value and the exact search value, and records any
disagreement together with the offending graph in graph6 form and a
reproducer command line.  Campaigns are deterministic under a fixed
seed: instance i of a campaign seeded s uses the derived seed
s * 1_000_003 + i fed to Python's Mersenne Twister.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import formulas
from .cograph import Leaf, build_cotree, cotree_to_graph, make_join, make_union
from .errors import DomainError
from .exact import (
    SearchBudget,
    gp_exact,
    hull_numbers,
    max_clique,
    max_independent_set,
)
from .families import (
    CompleteBipartite,
    Gn,
    Hnmst,
    KnMinus,
    generate,
)
from .graph6 import emit_graph6
from .graphs import (
    BipartiteLabeling,
    Graph,
    INFINITE,
    complement,
    require_bipartite,
    simplicial_vertices,
    two_coloring,
)
from .verify import distant_edges_bound, is_gp_definitional


@dataclass
class Mismatch:
    family: str
    description: str
    graph6: str

    @property
    def repro(self) -> str:
        return f"genpos solve --input g6:{self.graph6} --method exact"

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "description": self.description,
            "graph6": self.graph6,
            "repro": self.repro,
        }


@dataclass
class CampaignSummary:
    family: str
    instances: int = 0
    agreements: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    max_millis: float = 0.0

    def check(self, graph: Graph, ok: bool, description: str):
        self.instances += 1
        if ok:
            self.agreements += 1
        else:
            self.mismatches.append(Mismatch(self.family, description, emit_graph6(graph)))

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "instances": self.instances,
            "agreements": self.agreements,
            "mismatches": [m.to_json() for m in self.mismatches],
        }


def derived_seed(seed: int, index: int) -> int:
    return seed * 1_000_003 + index


# -- random instance builders -------------------------------------------------


def random_connected_gnp(rng: random.Random, n: int, p: float) -> Graph:
    """Redraw G(n, p) until connected."""
    while True:
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ]
        graph = Graph(n, edges)
        if len(graph.components) <= 1:
            return graph


def random_connected_bipartite(rng: random.Random, n: int) -> tuple[Graph, BipartiteLabeling]:
    """Connected bipartite graph on n >= 3 vertices."""
    while True:
        a = rng.randint(1, n - 1)
        b = n - a
        p = rng.uniform(0.3, 0.8)
        edges = [
            (u, a + v) for u in range(a) for v in range(b) if rng.random() < p
        ]
        graph = Graph(n, edges)
        if len(graph.components) <= 1:
            labeling = two_coloring(graph)
            assert isinstance(labeling, BipartiteLabeling)
            return graph, labeling


def random_bipartite_any(rng: random.Random, n: int) -> tuple[Graph, BipartiteLabeling]:
    """Bipartite graph on n vertices, connectivity not required."""
    a = rng.randint(1, n - 1)
    b = n - a
    p = rng.uniform(0.2, 0.9)
    edges = [(u, a + v) for u in range(a) for v in range(b) if rng.random() < p]
    graph = Graph(n, edges)
    labeling = two_coloring(graph)
    assert isinstance(labeling, BipartiteLabeling)
    return graph, labeling


def random_cograph(rng: random.Random, n: int) -> Graph:
    """Connected random cograph on n vertices via a random cotree."""

    def build(ids: list[int], as_join: bool):
        if len(ids) == 1:
            return Leaf(ids[0])
        parts_count = rng.randint(2, len(ids))
        cuts = sorted(rng.sample(range(1, len(ids)), parts_count - 1))
        pieces = []
        prev = 0
        for cut in cuts + [len(ids)]:
            pieces.append(ids[prev:cut])
            prev = cut
        children = tuple(build(piece, not as_join) for piece in pieces)
        return make_join(children) if as_join else make_union(children)

    if n == 1:
        return Graph(1)
    return cotree_to_graph(build(list(range(n)), as_join=True))


def random_tree(rng: random.Random, n: int) -> Graph:
    from .families import RandomTree

    return generate(RandomTree(n, rng.getrandbits(63)))


def complete_bipartite_minus_edge(n: int) -> tuple[Graph, BipartiteLabeling]:
    """K_{n,n} minus the edge between the first vertices of each side."""
    base = generate(CompleteBipartite(n, n))
    edges = [e for e in base.edge_list() if e != (0, n)]
    graph = Graph(2 * n, edges)
    return graph, BipartiteLabeling(frozenset(range(n)), frozenset(range(n, 2 * n)))


def kn_minus_grid(n_max: int):
    """All legal KnMinus parameter combinations with n <= n_max."""
    for n in range(3, n_max + 1):
        for k in range(2, n):
            yield KnMinus(n, "K", (k,))
            yield KnMinus(n, "K1", (k,))
        for k in range(3, n):
            yield KnMinus(n, "P", (k,))
        for r in range(2, n):
            for s in range(r, n - r):
                if r + s < n:
                    yield KnMinus(n, "Krs", (r, s))
        for k in range(5, n):
            yield KnMinus(n, "W", (k,))
        for k in range(4, n):
            yield KnMinus(n, "C", (k,))


# -- campaigns ----------------------------------------------------------------


def campaign_kn_minus(n_max: int, trials, seed: int, budget=None) -> CampaignSummary:
    """Bullet formula = universal-vertex corollary = exact search."""
    summary = CampaignSummary("kn_minus")
    start = time.monotonic()
    for spec in kn_minus_grid(min(n_max, 10)):
        graph = generate(spec)
        formula = formulas.gp_kn_minus(spec).value
        exact, _ = gp_exact(graph, budget)
        ok = formula == exact
        detail = f"{spec}: formula={formula} exact={exact}"
        if formulas.universal_vertices(graph) and not graph.is_complete():
            corollary = formulas.gp_universal_vertex(graph).value
            ok = ok and corollary == formula
            detail += f" corollary={corollary}"
        else:
            # K_{1,n-1} removal isolates the star center; the corollary
            # needs a universal vertex, so only formula vs exact applies.
            detail += " corollary=n/a"
        summary.check(graph, ok, detail)
    summary.max_millis = (time.monotonic() - start) * 1000
    return summary


def campaign_cograph(n_max: int, trials: int, seed: int, budget=None) -> CampaignSummary:
    """Cotree gp and invariants against the exact oracles."""
    summary = CampaignSummary("cograph")
    start = time.monotonic()
    for i in range(trials):
        rng = random.Random(derived_seed(seed, i))
        n = rng.randint(2, n_max)
        graph = random_cograph(rng, n)
        tree = build_cotree(graph)
        result = formulas.gp_cograph(graph)
        exact, _ = gp_exact(graph, budget)
        alpha, _ = max_independent_set(graph)
        omega, _ = max_clique(graph)
        ok = (
            result.value == exact
            and result.verified
            and tree.alpha == alpha
            and tree.omega == omega
        )
        summary.check(
            graph,
            ok,
            f"n={n}: cograph={result.value} exact={exact} "
            f"alpha={tree.alpha}/{alpha} omega={tree.omega}/{omega}",
        )
    summary.max_millis = (time.monotonic() - start) * 1000
    return summary


def campaign_bipartite(n_max: int, trials: int, seed: int, budget=None) -> CampaignSummary:
    """gp <= alpha, equality at diameter 2 or 3, matching alpha = oracle alpha."""
    summary = CampaignSummary("bipartite")
    start = time.monotonic()
    for i in range(trials):
        rng = random.Random(derived_seed(seed, i))
        n = rng.randint(3, n_max)
        graph, labeling = random_connected_bipartite(rng, n)
        alpha, witness = formulas.alpha_bipartite(graph, labeling)
        alpha_oracle, _ = max_independent_set(graph)
        exact, _ = gp_exact(graph, budget)
        ok = alpha == alpha_oracle and exact <= alpha
        diam = graph.diameter
        if diam in (2, 3):
            outcome = formulas.gp_bipartite(graph, labeling)
            ok = ok and isinstance(outcome, formulas.GpResult)
            ok = ok and outcome.value == exact and outcome.verified
        elif graph.n >= 3:
            outcome = formulas.gp_bipartite(graph, labeling)
            ok = ok and isinstance(outcome, formulas.AlphaBound)
            ok = ok and outcome.upper_bound == alpha
        summary.check(
            graph, ok, f"n={n} diam={diam}: alpha={alpha}/{alpha_oracle} exact={exact}"
        )
    summary.max_millis = (time.monotonic() - start) * 1000
    return summary


def campaign_bipartite_complement(n_max: int, trials: int, seed: int, budget=None) -> CampaignSummary:
    """Theorem for complements of bipartite graphs against the oracle."""
    summary = CampaignSummary("bipartite_complement")
    start = time.monotonic()

    def check_one(graph: Graph, labeling: BipartiteLabeling, tag: str):
        result = formulas.gp_bipartite_complement(graph, labeling)
        exact, _ = gp_exact(complement(graph), budget)
        ok = result.value == exact and (result.witness is None or result.verified)
        summary.check(graph, ok, f"{tag}: formula={result.value} exact={exact}")

    for i in range(trials):
        rng = random.Random(derived_seed(seed, i))
        n = rng.randint(2, n_max)
        graph, labeling = random_bipartite_any(rng, n)
        check_one(graph, labeling, f"random n={n}")
    for n in range(2, 7):
        graph, labeling = complete_bipartite_minus_edge(n)
        check_one(graph, labeling, f"K_{{{n},{n}}}-e")
    for n in range(2, 6):
        graph = generate(Gn(n))
        check_one(graph, require_bipartite(graph), f"Gn({n})")
    for params in _hnmst_fixture_params():
        graph = generate(Hnmst(*params))
        check_one(graph, require_bipartite(graph), f"Hnmst{params}")
    summary.max_millis = (time.monotonic() - start) * 1000
    return summary


def _hnmst_fixture_params():
    values = (2, 3)
    return [
        (n, m, s, t) for n in values for m in values for s in values for t in values
    ]


def campaign_tree(n_max: int, trials: int, seed: int, budget=None) -> CampaignSummary:
    """Leaf count = exact gp for trees; complement formula = exact."""
    summary = CampaignSummary("tree")
    start = time.monotonic()
    for i in range(trials):
        rng = random.Random(derived_seed(seed, i))
        n = rng.randint(2, n_max)
        graph = random_tree(rng, n)
        leaves = formulas.gp_tree(graph)
        exact, _ = gp_exact(graph, budget)
        ok = leaves.value == exact and leaves.verified
        summary.check(graph, ok, f"n={n}: leaves={leaves.value} exact={exact}")
    summary.max_millis = (time.monotonic() - start) * 1000
    return summary


def campaign_complement_tree(n_max: int, trials: int, seed: int, budget=None) -> CampaignSummary:
    summary = CampaignSummary("complement_tree")
    start = time.monotonic()

    def check_one(graph: Graph, tag: str):
        result = formulas.gp_complement_tree(graph)
        exact, _ = gp_exact(complement(graph), budget)
        ok = result.value == exact and result.verified
        summary.check(graph, ok, f"{tag}: formula={result.value} exact={exact}")

    for i in range(trials):
        rng = random.Random(derived_seed(seed, i))
        n = rng.randint(2, n_max)
        check_one(random_tree(rng, n), f"random n={n}")
    from .families import DoubleStar, Star

    for k in range(1, 6):
        check_one(generate(Star(k)), f"star {k}")
    for a in range(1, 4):
        for b in range(a, 4):
            check_one(generate(DoubleStar(a, b)), f"double star {a},{b}")
    summary.max_millis = (time.monotonic() - start) * 1000
    return summary


def campaign_grid_complement(n_max: int, trials, seed: int, budget=None) -> CampaignSummary:
    summary = CampaignSummary("grid_complement")
    start = time.monotonic()
    top = max(2, min(n_max, 4))
    for rows in range(2, top + 1):
        for cols in range(2, top + 1):
            result = formulas.gp_complement_grid(rows, cols)
            from .families import Grid

            exact, _ = gp_exact(complement(generate(Grid(rows, cols))), budget)
            ok = result.value == exact and result.verified
            summary.check(
                generate(Grid(rows, cols)),
                ok,
                f"{rows}x{cols}: formula={result.value} exact={exact}",
            )
    summary.max_millis = (time.monotonic() - start) * 1000
    return summary


def campaign_hypercube_complement(n_max: int, trials, seed: int, budget=None) -> CampaignSummary:
    summary = CampaignSummary("hypercube_complement")
    start = time.monotonic()
    from .families import Hypercube

    for k in (3, 4):
        cube = generate(Hypercube(k))
        result = formulas.gp_complement_hypercube(k)
        exact, _ = gp_exact(complement(cube), budget)
        ok = result.value == exact and result.verified
        summary.check(cube, ok, f"k={k}: formula={result.value} exact={exact}")
    summary.max_millis = (time.monotonic() - start) * 1000
    return summary


def campaign_solver(n_max: int, trials: int, seed: int, budget=None) -> CampaignSummary:
    """Branch and bound versus brute force, witnesses included."""
    summary = CampaignSummary("solver")
    start = time.monotonic()
    brute = SearchBudget(mode="brute_force")
    for i in range(trials):
        rng = random.Random(derived_seed(seed, i))
        n = rng.randint(2, min(n_max, 12))
        p = rng.choice((0.2, 0.35, 0.5, 0.65, 0.8))
        graph = Graph(
            n,
            [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p],
        )
        bb_value, bb_witness = gp_exact(graph, budget)
        bf_value, bf_witness = gp_exact(graph, brute)
        again_value, again_witness = gp_exact(graph, budget)
        ok = (
            bb_value == bf_value
            and bb_witness == bf_witness
            and (bb_value, bb_witness) == (again_value, again_witness)
            and is_gp_definitional(graph, bb_witness) is True
        )
        summary.check(graph, ok, f"n={n} p={p}: bb={bb_value} bf={bf_value}")
    summary.max_millis = (time.monotonic() - start) * 1000
    return summary


def campaign_hull_chain(n_max: int, trials: int, seed: int, budget=None) -> CampaignSummary:
    """2 <= h <= h+ <= gp <= n on random connected graphs."""
    summary = CampaignSummary("hull_chain")
    start = time.monotonic()
    for i in range(trials):
        rng = random.Random(derived_seed(seed, i))
        n = rng.randint(2, min(n_max, 10))
        graph = random_connected_gnp(rng, n, rng.choice((0.3, 0.5, 0.8)))
        h, h_plus = hull_numbers(graph)
        gp, _ = gp_exact(graph, budget)
        ok = 2 <= h <= h_plus <= gp <= n
        summary.check(graph, ok, f"n={n}: h={h} h+={h_plus} gp={gp}")
    summary.max_millis = (time.monotonic() - start) * 1000
    return summary


def campaign_lower_bounds(n_max: int, trials: int, seed: int, budget=None) -> CampaignSummary:
    """max(omega, simplicial count, distant-edge bound) <= gp."""
    summary = CampaignSummary("lower_bounds")
    start = time.monotonic()
    for i in range(trials):
        rng = random.Random(derived_seed(seed, i))
        n = rng.randint(2, min(n_max, 12))
        graph = random_connected_gnp(rng, n, rng.choice((0.2, 0.5, 0.8)))
        omega, _ = max_clique(graph)
        bound = max(omega, len(simplicial_vertices(graph)))
        if graph.diameter >= 2 and graph.diameter != INFINITE:
            distant, _ = distant_edges_bound(graph)
            bound = max(bound, distant)
        gp, _ = gp_exact(graph, budget)
        summary.check(graph, bound <= gp, f"n={n}: bound={bound} gp={gp}")
    summary.max_millis = (time.monotonic() - start) * 1000
    return summary


def campaign_characterization(n_max: int, trials: int, seed: int, budget=None) -> CampaignSummary:
    """Definitional equals structural on exhaustive subsets.

    Instance i deterministically walks the (n, p) grid with
    n in 4..min(n_max, 9) and p in {0.2, 0.5, 0.8}, so a full campaign
    covers every combination evenly.
    """
    from .verify import is_gp_characterized

    summary = CampaignSummary("characterization")
    start = time.monotonic()
    sizes = list(range(4, min(n_max, 9) + 1))
    probs = (0.2, 0.5, 0.8)
    for i in range(trials):
        rng = random.Random(derived_seed(seed, i))
        n = sizes[i % len(sizes)]
        p = probs[(i // len(sizes)) % len(probs)]
        graph = random_connected_gnp(rng, n, p)
        ok = True
        detail = f"n={n} p={p}"
        for mask in range(1 << n):
            subset = [v for v in range(n) if mask >> v & 1]
            a = is_gp_definitional(graph, subset) is True
            b = is_gp_characterized(graph, subset) is True
            if a != b:
                ok = False
                detail += f" disagree on {subset}"
                break
        summary.check(graph, ok, detail)
    summary.max_millis = (time.monotonic() - start) * 1000
    return summary


CAMPAIGNS = {
    "kn_minus": campaign_kn_minus,
    "cograph": campaign_cograph,
    "bipartite": campaign_bipartite,
    "bipartite_complement": campaign_bipartite_complement,
    "tree": campaign_tree,
    "complement_tree": campaign_complement_tree,
    "grid_complement": campaign_grid_complement,
    "hypercube_complement": campaign_hypercube_complement,
    "solver": campaign_solver,
    "hull_chain": campaign_hull_chain,
    "lower_bounds": campaign_lower_bounds,
    "characterization": campaign_characterization,
}

# documented oracle feasibility caps per family
N_MAX_CAPS = {
    "kn_minus": 10,
    "cograph": 16,
    "bipartite": 16,
    "bipartite_complement": 16,
    "tree": 16,
    "complement_tree": 16,
    "grid_complement": 4,
    "hypercube_complement": 4,
    "solver": 12,
    "hull_chain": 10,
    "lower_bounds": 12,
    "characterization": 9,
}


def run_campaigns(
    names: list[str], n_max: int, trials: int, seed: int, budget=None
) -> list[CampaignSummary]:
    if not names:
        raise DomainError("campaign family list must be nonempty")
    out = []
    for name in names:
        runner = CAMPAIGNS.get(name)
        if runner is None:
            raise DomainError(
                f"unknown campaign family {name!r}; known: {', '.join(sorted(CAMPAIGNS))}"
            )
        cap = N_MAX_CAPS[name]
        if n_max > cap:
            raise DomainError(
                f"campaign {name!r} is oracle-feasible only up to n-max {cap}"
            )
        out.append(runner(n_max, trials, seed, budget))
    return out
