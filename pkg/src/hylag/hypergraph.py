"""Uniform hypergraphs with colexicographic structure.

Vertices are positive integers 1, 2, 3, ...  An r-graph is a finite set of
r-element subsets ("edges").  Everything downstream leans on the colex order
on r-sets -- A < B iff max(A difference B) lies in B -- which for ascending
tuples a = (a_1 < ... < a_r) is plain lexicographic order on the reversed
tuple (a_r, ..., a_1).  The initial segment of m r-sets in this order is
written H^{m,r} throughout.

Also here: links and pair-difference links, left-compression (ij-shifts),
the equivalent domination-downset test, pair coverage, vertex deletion, and
the Kruskal-Katona-style bounds on link sizes of left-compressed graphs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "Hypergraph",
    "ShiftPair",
    "KKLinkBounds",
    "binom",
    "colex_key",
    "colex_rank",
    "colex_unrank",
    "colex_segment",
    "clique",
    "link",
    "link_diff",
    "apply_shift",
    "left_compress",
    "is_left_compressed",
    "covers_pairs",
    "delete_vertex",
    "generalized_binomial",
    "binomial_inverse",
    "kk_link_bounds",
]

# A colex rank is just a nonnegative int (0-based position among all r-sets).
ColexIndex = int


def binom(n: int, k: int) -> int:
    """C(n, k) as a count: zero whenever k < 0 or n < k."""
    if k < 0 or n < k:
        return 0
    return math.comb(n, k)


def colex_key(edge: Iterable[int]) -> tuple[int, ...]:
    """Sort key realizing colex order: the edge sorted descending."""
    return tuple(sorted(edge, reverse=True))


def colex_rank(edge: Iterable[int]) -> int:
    """0-based position of an r-set in the colex order on all r-sets.

    For A = {a_1 < ... < a_r} this is sum_i C(a_i - 1, i): the number of
    r-sets that precede A.
    """
    a = sorted(edge)
    if not a:
        raise ValueError("empty edge has no colex rank")
    if a[0] < 1:
        raise ValueError(f"vertex labels must be positive, got {a}")
    if len(set(a)) != len(a):
        raise ValueError(f"edge {a} has repeated vertices")
    return sum(binom(v - 1, i + 1) for i, v in enumerate(a))


def _max_c_with_binom_le(k: int, i: int) -> int:
    # largest c >= i-1 with C(c, i) <= k; C(i-1, i) = 0 so the bracket exists
    lo, hi = i - 1, i
    while binom(hi, i) <= k:
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if binom(mid, i) <= k:
            lo = mid
        else:
            hi = mid
    return lo


def colex_unrank(rank: int, r: int) -> tuple[int, ...]:
    """The r-set at 0-based position `rank` in colex order (combinadic)."""
    if r < 1:
        raise ValueError("uniformity r must be >= 1")
    if rank < 0:
        raise ValueError("rank must be nonnegative")
    k = rank
    out = []
    for i in range(r, 0, -1):
        c = _max_c_with_binom_le(k, i)
        out.append(c + 1)
        k -= binom(c, i)
    out.reverse()
    return tuple(out)


class Hypergraph:
    """An immutable r-uniform hypergraph on positive-integer vertices.

    Edges are canonicalized on construction: each edge an ascending tuple,
    duplicates merged, the edge list sorted in colex order.  Equality and
    hashing follow the canonical form, so values are safe dict keys and safe
    to share across worker processes.
    """

    __slots__ = ("r", "edges", "_edge_set")

    def __init__(self, r: int, edges: Iterable[Iterable[int]] = ()):
        if r < 1:
            raise ValueError("uniformity r must be >= 1")
        canon = set()
        for e in edges:
            t = tuple(sorted(e))
            if len(t) != r:
                raise ValueError(f"edge {t} has {len(t)} vertices, expected r={r}")
            if len(set(t)) != r:
                raise ValueError(f"edge {t} has repeated vertices")
            if t[0] < 1:
                raise ValueError(f"edge {t} has a vertex < 1")
            canon.add(t)
        self.r = r
        self.edges = tuple(sorted(canon, key=colex_key))
        self._edge_set = frozenset(canon)

    # -- basic queries ----------------------------------------------------

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.edges)

    def __contains__(self, edge: Iterable[int]) -> bool:
        return tuple(sorted(edge)) in self._edge_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.r == other.r and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.r, self.edges))

    def __repr__(self) -> str:
        shown = ",".join("".join(map(str, e)) if max(e, default=0) <= 9
                         else str(e) for e in self.edges[:8])
        more = f",... ({len(self.edges)} edges)" if len(self.edges) > 8 else ""
        return f"Hypergraph(r={self.r}, {{{shown}{more}}})"

    @property
    def support(self) -> tuple[int, ...]:
        """Sorted tuple of vertices that appear in at least one edge."""
        verts: set[int] = set()
        for e in self.edges:
            verts.update(e)
        return tuple(sorted(verts))

    def max_vertex(self) -> int:
        """Largest vertex label used (0 if edgeless)."""
        return max((e[-1] for e in self.edges), default=0)

    def degree(self, i: int) -> int:
        """Number of edges containing vertex i."""
        return sum(1 for e in self.edges if i in e)

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"r": self.r, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "Hypergraph":
        try:
            return cls(int(obj["r"]), obj["edges"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed hypergraph JSON: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, text: str) -> "Hypergraph":
        return cls.from_json_dict(json.loads(text))

    def to_text(self) -> str:
        """Edge-list text: `r=<int>` header, one ascending edge per line."""
        lines = [f"r={self.r}"]
        lines.extend(" ".join(map(str, e)) for e in self.edges)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Hypergraph":
        r = None
        edges = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if r is None:
                if not line.startswith("r="):
                    raise ValueError(f"line {lineno}: expected header 'r=<int>', got {raw!r}")
                try:
                    r = int(line[2:])
                except ValueError as exc:
                    raise ValueError(f"line {lineno}: bad uniformity in {raw!r}") from exc
                continue
            try:
                edge = tuple(int(tok) for tok in line.split())
            except ValueError as exc:
                raise ValueError(f"line {lineno}: bad edge line {raw!r}") from exc
            edges.append(edge)
        if r is None:
            raise ValueError("missing 'r=<int>' header line")
        return cls(r, edges)


def colex_segment(m: int, r: int) -> Hypergraph:
    """H^{m,r}: the first m r-sets in colex order."""
    if m < 0:
        raise ValueError("edge count m must be nonnegative")
    return Hypergraph(r, (colex_unrank(k, r) for k in range(m)))


def clique(t: int, r: int) -> Hypergraph:
    """[t]^{(r)}: all r-subsets of {1, ..., t} (edgeless when t < r)."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    import itertools

    return Hypergraph(r, itertools.combinations(range(1, t + 1), r))


# -- links ---------------------------------------------------------------


def link(H: Hypergraph, S: Iterable[int]) -> Hypergraph:
    """H_S: the (r-|S|)-graph {A : A disjoint from S, A union S in H}."""
    s = tuple(sorted(set(S)))
    if not 0 < len(s) < H.r:
        raise ValueError(f"link set must have 1..r-1 vertices, got {len(s)}")
    sset = set(s)
    out = []
    for e in H.edges:
        if sset.issubset(e):
            out.append(tuple(v for v in e if v not in sset))
    return Hypergraph(H.r - len(s), out)


def link_diff(H: Hypergraph, i: int, j: int) -> Hypergraph:
    """H_{i \\ j}: (r-1)-sets A avoiding j with A+i an edge but A+j not.

    These are the edges at i that j cannot imitate; the pair identity at a
    maximizer gives L(H_{i\\j}, x) = (x_i - x_j) L(H_{ij}, x).
    """
    if i == j:
        raise ValueError("link_diff needs two distinct vertices")
    if H.r < 2:
        raise ValueError("link_diff needs uniformity >= 2")
    out = []
    for e in H.edges:
        if i in e and j not in e:
            a = tuple(v for v in e if v != i)
            if tuple(sorted(a + (j,))) not in H:
                out.append(a)
    return Hypergraph(H.r - 1, out)


# -- left-compression ----------------------------------------------------


@dataclass(frozen=True)
class ShiftPair:
    """A compression direction: replace vertex j by vertex i < j."""

    i: int
    j: int

    def __post_init__(self):
        if not 0 < self.i < self.j:
            raise ValueError(f"shift pair needs 0 < i < j, got ({self.i}, {self.j})")


def apply_shift(H: Hypergraph, i: int, j: int) -> Hypergraph:
    """One simultaneous ij-shift: each edge with j but not i moves to
    (edge - j + i) unless that set is already an edge."""
    ShiftPair(i, j)
    out = []
    for e in H.edges:
        if j in e and i not in e:
            b = tuple(sorted(v if v != j else i for v in e))
            out.append(e if b in H else b)
        else:
            out.append(e)
    return Hypergraph(H.r, out)


def left_compress(H: Hypergraph) -> Hypergraph:
    """Apply all ij-shifts (ascending i, then j) repeatedly to fixpoint.

    Shifts preserve the edge count; the fixpoint is exactly the downset
    condition tested by is_left_compressed.
    """
    cur = H
    while True:
        changed = False
        n = cur.max_vertex()
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                nxt = apply_shift(cur, i, j)
                if nxt != cur:
                    cur = nxt
                    changed = True
        if not changed:
            return cur


def _lower_covers(edge: tuple[int, ...]) -> Iterator[tuple[ShiftPair, tuple[int, ...]]]:
    # decrement one coordinate by 1 where that keeps the tuple strictly ascending
    for pos, v in enumerate(edge):
        if v - 1 >= 1 and (pos == 0 or edge[pos - 1] < v - 1):
            yield ShiftPair(v - 1, v), edge[:pos] + (v - 1,) + edge[pos + 1 :]


def is_left_compressed(
    H: Hypergraph,
) -> tuple[bool, tuple[ShiftPair, tuple[int, ...]] | None]:
    """True iff left_compress(H) = H, i.e. the edge set is a downset in the
    coordinatewise domination order (a_i <= b_i for all i).

    Downward closure under single-coordinate decrements is equivalent to
    closure under all ij-shifts, so only the covers are checked.  On failure
    returns the first violation in (colex-edge, ascending-coordinate) scan
    order as (ShiftPair(i, j), offending edge).
    """
    for e in H.edges:
        for pair, below in _lower_covers(e):
            if below not in H:
                return False, (pair, e)
    return True, None


# -- pair coverage & deletion --------------------------------------------


def covers_pairs(H: Hypergraph) -> tuple[bool, list[tuple[int, int]]]:
    """Does every pair of support vertices lie in a common edge?

    Returns (flag, sorted list of uncovered pairs).
    """
    import itertools

    support = H.support
    covered: set[tuple[int, int]] = set()
    for e in H.edges:
        covered.update(itertools.combinations(e, 2))
    uncovered = [p for p in itertools.combinations(support, 2) if p not in covered]
    return not uncovered, uncovered


def delete_vertex(H: Hypergraph, i: int) -> Hypergraph:
    """Drop every edge containing i (uniformity unchanged)."""
    return Hypergraph(H.r, (e for e in H.edges if i not in e))


# -- Kruskal-Katona-style link bounds ------------------------------------


def generalized_binomial(x: float, r: int) -> float:
    """C(x, r) for real x via the falling factorial x(x-1)...(x-r+1)/r!."""
    out = 1.0
    for k in range(r):
        out *= x - k
    return out / math.factorial(r)


def binomial_inverse(e: int, r: int, tol: float = 1e-12) -> float:
    """The real x >= r with C(x, r) = e, found by monotone bisection."""
    if e < 1:
        raise ValueError("need at least one edge to invert C(x, r)")
    lo, hi = float(r), float(r)
    while generalized_binomial(hi, r) < e:
        hi *= 2
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if generalized_binomial(mid, r) < e:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


@dataclass(frozen=True)
class KKLinkBounds:
    """Shadow-style bounds for a left-compressed H with e(H) = C(x, r):
    e(H_1) >= C(x-1, r-1) and e(H_j) <= r e(H) / j."""

    x: float
    e_h1: int
    lower: float
    degrees: tuple[int, ...]  # degrees[j-1] = e(H_j) for j = 1..max support
    uppers: tuple[float, ...]  # uppers[j-1] = r e(H) / j


def kk_link_bounds(H: Hypergraph) -> KKLinkBounds:
    ok, violation = is_left_compressed(H)
    if not ok:
        raise ValueError(f"kk_link_bounds needs a left-compressed hypergraph; {violation}")
    e = len(H)
    if e == 0:
        raise ValueError("kk_link_bounds needs at least one edge")
    x = binomial_inverse(e, H.r)
    n = H.max_vertex()
    degrees = tuple(H.degree(j) for j in range(1, n + 1))
    uppers = tuple(H.r * e / j for j in range(1, n + 1))
    return KKLinkBounds(
        x=x,
        e_h1=degrees[0] if degrees else 0,
        lower=generalized_binomial(x - 1, H.r - 1),
        degrees=degrees,
        uppers=uppers,
    )
