"""Named graph families with documented canonical vertex numberings.

Every generator pins an exact numbering so fixtures are reproducible
bit-for-bit:

* ``Path(n)``: 0-1-...-(n-1).
* ``Cycle(n)``: 0-1-...-(n-1)-0, n >= 3.
* ``Complete(n)``, ``CompleteBipartite(r, s)``: side A is 0..r-1.
* ``Star(k)``: K_{1,k} with center 0.
* ``Wheel(k)``: order k, hub 0, rim cycle 1..k-1, k >= 4.
* ``Hypercube(k)``: vertex ids are the k-bit words, edges flip one bit.
* ``Grid(rows, cols)``: cell (i, j) is i*cols + j; equals the Cartesian
  product Path(rows) x Path(cols) with the product numbering.
* ``Petersen``: outer cycle 0..4, inner pentagram 5..9 (i+5 ~ ((i+2)%5)+5),
  spokes i ~ i+5.
* ``KnMinus(n, h_kind, h_args)``: K_n with the edges of H removed, H
  embedded on vertices 0..|V(H)|-1 using the numberings above.  Kinds:
  "K" (clique K_k), "K1" (star K_{1,k}), "P" (path P_k), "Krs"
  (biclique K_{r,s}), "W" (wheel W_k), "C" (cycle C_k); parameter
  ranges follow the closed-form results implemented in ``formulas``.
* ``Gnk(n, k)``: K_n on 0..n-1 plus vertex n adjacent to 0..k.
* ``Gn(n)``: bipartite; x_i = 0..n-1, a1 = n, a2 = n+1, y_i = n+2..2n+1,
  b1 = 2n+2, b2 = 2n+3; K_{n,n} on the x/y block plus edges a1-y1,
  a2-y2, b1-x1, b2-x2.
* ``Hnmst(n, m, s, t)``: bipartite; A1 = 0..n-1, A2 = next s, A3 = next
  t, then B1 = next m, B2 = next t, B3 = next s; complete bipartite
  blocks (A1+A2) x (B1+B2), A2 x B3, A3 x B2.
* ``DoubleStar(a, b)``: adjacent centers 0, 1; leaves of 0 are
  2..a+1, leaves of 1 are a+2..a+b+1.
* Random families draw from ``random.Random(seed)`` (Mersenne Twister):
  ``RandomGnp`` flips each pair in lexicographic order, ``RandomTree``
  decodes a uniform Pruefer sequence, ``RandomBipartite`` flips cross
  pairs in lexicographic order.
"""

from __future__ import annotations

import heapq
import random
import re
from dataclasses import dataclass
from typing import Union

from .errors import DomainError, ParseError
from .graphs import Graph, cartesian_product


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class CompleteBipartite:
    r: int
    s: int


@dataclass(frozen=True)
class Star:
    k: int


@dataclass(frozen=True)
class Wheel:
    k: int


@dataclass(frozen=True)
class Hypercube:
    k: int


@dataclass(frozen=True)
class Grid:
    rows: int
    cols: int


@dataclass(frozen=True)
class Petersen:
    pass


@dataclass(frozen=True)
class KnMinus:
    n: int
    h_kind: str
    h_args: tuple[int, ...]


@dataclass(frozen=True)
class Gnk:
    n: int
    k: int


@dataclass(frozen=True)
class Gn:
    n: int


@dataclass(frozen=True)
class Hnmst:
    n: int
    m: int
    s: int
    t: int


@dataclass(frozen=True)
class DoubleStar:
    a: int
    b: int


@dataclass(frozen=True)
class RandomTree:
    n: int
    seed: int


@dataclass(frozen=True)
class RandomGnp:
    n: int
    p: float
    seed: int


@dataclass(frozen=True)
class RandomBipartite:
    a: int
    b: int
    p: float
    seed: int


FamilySpec = Union[
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Wheel,
    Hypercube,
    Grid,
    Petersen,
    KnMinus,
    Gnk,
    Gn,
    Hnmst,
    DoubleStar,
    RandomTree,
    RandomGnp,
    RandomBipartite,
]


def _require(cond: bool, constraint: str) -> None:
    if not cond:
        raise DomainError(f"family parameter out of range: requires {constraint}")


def _path_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def _cycle_edges(n: int) -> list[tuple[int, int]]:
    return _path_edges(n) + [(n - 1, 0)]


def _complete_edges(vertices: list[int]) -> list[tuple[int, int]]:
    return [(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1 :]]


def _biclique_edges(side_a: list[int], side_b: list[int]) -> list[tuple[int, int]]:
    return [(u, v) for u in side_a for v in side_b]


def _star_edges(k: int) -> list[tuple[int, int]]:
    return [(0, i) for i in range(1, k + 1)]


def _wheel_edges(k: int) -> list[tuple[int, int]]:
    rim = [(i, i + 1) for i in range(1, k - 1)] + [(k - 1, 1)]
    return rim + [(0, i) for i in range(1, k)]


def removed_subgraph_edges(h_kind: str, h_args: tuple[int, ...]) -> tuple[int, list[tuple[int, int]]]:
    """Vertex count and edges of the subgraph H used by KnMinus."""
    if h_kind == "K":
        (k,) = h_args
        return k, _complete_edges(list(range(k)))
    if h_kind == "K1":
        (k,) = h_args
        return k + 1, _star_edges(k)
    if h_kind == "P":
        (k,) = h_args
        return k, _path_edges(k)
    if h_kind == "Krs":
        r, s = h_args
        return r + s, _biclique_edges(list(range(r)), list(range(r, r + s)))
    if h_kind == "W":
        (k,) = h_args
        return k, _wheel_edges(k)
    if h_kind == "C":
        (k,) = h_args
        return k, _cycle_edges(k)
    raise DomainError(f"unknown removed-subgraph kind {h_kind!r}")


def check_kn_minus_ranges(spec: KnMinus) -> None:
    n, kind, args = spec.n, spec.h_kind, spec.h_args
    if kind == "K":
        _require(len(args) == 1 and 2 <= args[0] < n, "2 <= k < n")
    elif kind == "K1":
        _require(len(args) == 1 and 2 <= args[0] < n, "2 <= k < n")
    elif kind == "P":
        _require(len(args) == 1 and 3 <= args[0] < n, "3 <= k < n")
    elif kind == "Krs":
        _require(
            len(args) == 2 and 2 <= args[0] <= args[1] and args[0] + args[1] < n,
            "2 <= r <= s and r+s < n",
        )
    elif kind == "W":
        _require(len(args) == 1 and 5 <= args[0] < n, "5 <= k < n")
    elif kind == "C":
        _require(len(args) == 1 and 4 <= args[0] < n, "k = 4 or 5 <= k < n")
    else:
        raise DomainError(f"unknown removed-subgraph kind {kind!r}")


def _decode_pruefer(seq: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def generate(spec: FamilySpec) -> Graph:
    """Build the named graph with its documented canonical numbering."""
    if isinstance(spec, Path):
        _require(spec.n >= 1, "n >= 1")
        return Graph(spec.n, _path_edges(spec.n))
    if isinstance(spec, Cycle):
        _require(spec.n >= 3, "n >= 3")
        return Graph(spec.n, _cycle_edges(spec.n))
    if isinstance(spec, Complete):
        _require(spec.n >= 1, "n >= 1")
        return Graph(spec.n, _complete_edges(list(range(spec.n))))
    if isinstance(spec, CompleteBipartite):
        _require(spec.r >= 1 and spec.s >= 1, "r, s >= 1")
        return Graph(
            spec.r + spec.s,
            _biclique_edges(list(range(spec.r)), list(range(spec.r, spec.r + spec.s))),
        )
    if isinstance(spec, Star):
        _require(spec.k >= 1, "k >= 1")
        return Graph(spec.k + 1, _star_edges(spec.k))
    if isinstance(spec, Wheel):
        _require(spec.k >= 4, "k >= 4")
        return Graph(spec.k, _wheel_edges(spec.k))
    if isinstance(spec, Hypercube):
        _require(spec.k >= 0, "k >= 0")
        n = 1 << spec.k
        edges = [(x, x ^ (1 << b)) for x in range(n) for b in range(spec.k) if x < x ^ (1 << b)]
        return Graph(n, edges)
    if isinstance(spec, Grid):
        _require(spec.rows >= 1 and spec.cols >= 1, "rows, cols >= 1")
        return cartesian_product(generate(Path(spec.rows)), generate(Path(spec.cols)))
    if isinstance(spec, Petersen):
        outer = _cycle_edges(5)
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        return Graph(10, outer + inner + spokes)
    if isinstance(spec, KnMinus):
        check_kn_minus_ranges(spec)
        h_order, h_edges = removed_subgraph_edges(spec.h_kind, spec.h_args)
        _require(h_order <= spec.n, "H fits inside K_n")
        removed = {frozenset(e) for e in h_edges}
        edges = [
            (u, v)
            for u, v in _complete_edges(list(range(spec.n)))
            if frozenset((u, v)) not in removed
        ]
        return Graph(spec.n, edges)
    if isinstance(spec, Gnk):
        _require(spec.n >= 3, "n >= 3")
        _require(0 <= spec.k and spec.k + 1 < spec.n, "1 <= k+1 < n")
        edges = _complete_edges(list(range(spec.n)))
        edges.extend((i, spec.n) for i in range(spec.k + 1))
        return Graph(spec.n + 1, edges)
    if isinstance(spec, Gn):
        _require(spec.n >= 2, "n >= 2")
        n = spec.n
        xs = list(range(n))
        a1, a2 = n, n + 1
        ys = list(range(n + 2, 2 * n + 2))
        b1, b2 = 2 * n + 2, 2 * n + 3
        edges = _biclique_edges(xs, ys)
        edges.extend([(a1, ys[0]), (a2, ys[1]), (b1, xs[0]), (b2, xs[1])])
        return Graph(2 * n + 4, edges)
    if isinstance(spec, Hnmst):
        n, m, s, t = spec.n, spec.m, spec.s, spec.t
        _require(min(n, m, s, t) >= 2, "n, m, s, t >= 2")
        a1 = list(range(n))
        a2 = list(range(n, n + s))
        a3 = list(range(n + s, n + s + t))
        base = n + s + t
        b1 = list(range(base, base + m))
        b2 = list(range(base + m, base + m + t))
        b3 = list(range(base + m + t, base + m + t + s))
        edges = _biclique_edges(a1 + a2, b1 + b2)
        edges += _biclique_edges(a2, b3)
        edges += _biclique_edges(a3, b2)
        return Graph(base + m + t + s, edges)
    if isinstance(spec, DoubleStar):
        _require(spec.a >= 1 and spec.b >= 1, "a, b >= 1")
        edges = [(0, 1)]
        edges.extend((0, i) for i in range(2, spec.a + 2))
        edges.extend((1, i) for i in range(spec.a + 2, spec.a + spec.b + 2))
        return Graph(spec.a + spec.b + 2, edges)
    if isinstance(spec, RandomTree):
        _require(spec.n >= 1, "n >= 1")
        if spec.n == 1:
            return Graph(1)
        if spec.n == 2:
            return Graph(2, [(0, 1)])
        rng = random.Random(spec.seed)
        seq = [rng.randrange(spec.n) for _ in range(spec.n - 2)]
        return Graph(spec.n, _decode_pruefer(seq, spec.n))
    if isinstance(spec, RandomGnp):
        _require(spec.n >= 0, "n >= 0")
        _require(0.0 <= spec.p <= 1.0, "0 <= p <= 1")
        rng = random.Random(spec.seed)
        edges = [
            (u, v)
            for u in range(spec.n)
            for v in range(u + 1, spec.n)
            if rng.random() < spec.p
        ]
        return Graph(spec.n, edges)
    if isinstance(spec, RandomBipartite):
        _require(spec.a >= 1 and spec.b >= 1, "a, b >= 1")
        _require(0.0 <= spec.p <= 1.0, "0 <= p <= 1")
        rng = random.Random(spec.seed)
        edges = [
            (u, spec.a + v)
            for u in range(spec.a)
            for v in range(spec.b)
            if rng.random() < spec.p
        ]
        return Graph(spec.a + spec.b, edges)
    raise DomainError(f"unknown family spec {spec!r}")


# -- the CLI mini-grammar ----------------------------------------------------

_H_TOKEN = re.compile(r"^([KPWCSB])(\d+)(?:x(\d+))?$", re.IGNORECASE)


def _parse_h_token(token: str) -> tuple[str, tuple[int, ...]]:
    """Removed-subgraph token: K5, S4 (star K_{1,4}), P4, B2x3 (K_{2,3}), W5, C5."""
    m = _H_TOKEN.match(token.strip())
    if not m:
        raise ParseError(f"cannot parse removed-subgraph token {token!r}")
    kind = m.group(1).upper()
    a = int(m.group(2))
    b = m.group(3)
    if kind == "B":
        if b is None:
            raise ParseError(f"biclique token needs RxS, got {token!r}")
        return "Krs", (a, int(b))
    if b is not None:
        raise ParseError(f"unexpected 'x' in token {token!r}")
    if kind == "S":
        return "K1", (a,)
    return kind, (a,)


def parse_family(text: str) -> FamilySpec:
    """Parse a generator spec such as ``grid:3x4`` or ``kn_minus:n=9,h=C5``.

    Grammar (case-insensitive family names):
      path:N  cycle:N  complete:N  complete_bipartite:RxS  star:K  wheel:K
      hypercube:K  grid:NxM  petersen  kn_minus:n=N,h=TOKEN  gnk:N,K  gn:N
      hnmst:N,M,S,T  double_star:A,B  random_tree:N,seed=S
      gnp:N,P,seed=S  random_bipartite:A,B,P,seed=S
    """
    name, _, rest = text.strip().partition(":")
    name = name.strip().lower()
    rest = rest.strip()

    def ints(count: int) -> list[int]:
        parts = [p for p in rest.replace("x", ",").split(",") if p]
        if len(parts) != count:
            raise ParseError(f"family {name!r} expects {count} integer parameter(s)")
        try:
            return [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"non-integer parameter in {text!r}") from None

    def keyed(parts: list[str]) -> dict[str, str]:
        out = {}
        for part in parts:
            key, _, value = part.partition("=")
            if not value:
                raise ParseError(f"expected key=value, got {part!r}")
            out[key.strip().lower()] = value.strip()
        return out

    if name == "path":
        return Path(*ints(1))
    if name == "cycle":
        return Cycle(*ints(1))
    if name == "complete":
        return Complete(*ints(1))
    if name in {"complete_bipartite", "biclique"}:
        return CompleteBipartite(*ints(2))
    if name == "star":
        return Star(*ints(1))
    if name == "wheel":
        return Wheel(*ints(1))
    if name == "hypercube":
        return Hypercube(*ints(1))
    if name == "grid":
        return Grid(*ints(2))
    if name == "petersen":
        if rest:
            raise ParseError("petersen takes no parameters")
        return Petersen()
    if name == "kn_minus":
        kv = keyed(rest.split(","))
        if set(kv) != {"n", "h"}:
            raise ParseError("kn_minus expects n=<int>,h=<token>")
        kind, args = _parse_h_token(kv["h"])
        try:
            n = int(kv["n"])
        except ValueError:
            raise ParseError(f"non-integer n in {text!r}") from None
        return KnMinus(n, kind, args)
    if name == "gnk":
        return Gnk(*ints(2))
    if name == "gn":
        return Gn(*ints(1))
    if name == "hnmst":
        return Hnmst(*ints(4))
    if name == "double_star":
        return DoubleStar(*ints(2))
    if name in {"random_tree", "gnp", "random_bipartite"}:
        parts = [p for p in rest.split(",") if p]
        if not parts or not parts[-1].lower().startswith("seed="):
            raise ParseError(f"family {name!r} needs a trailing seed=<int> parameter")
        try:
            seed = int(parts[-1].partition("=")[2])
            nums = parts[:-1]
            if name == "random_tree":
                (n,) = (int(x) for x in nums)
                return RandomTree(n, seed)
            if name == "gnp":
                n_s, p_s = nums
                return RandomGnp(int(n_s), float(p_s), seed)
            a_s, b_s, p_s = nums
            return RandomBipartite(int(a_s), int(b_s), float(p_s), seed)
        except (ValueError, TypeError):
            raise ParseError(f"cannot parse parameters of {text!r}") from None
    raise ParseError(f"unknown family {name!r}")
