"""Digraphs with bitset adjacency, plus every graph constructor used here.

Vertices are 0..n-1 and `adj[v]` is an integer whose bit w is set exactly when
the arc v -> w exists.  Undirected graphs are stored as symmetric digraphs.
Constructors: Cayley digraphs on finite abelian groups, hypercubes, cycles,
Kneser graphs (Petersen as J(5,2,0)), metacirculants, and wreath products.
Tournament-specific machinery: connection-set validity and the per-arc
directed-triangle profile used as an isomorphism invariant.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .groups import AbelianGroup, Element, cyclic
from .groups import units as unit_list


@dataclass(frozen=True)
class Digraph:
    """Immutable digraph; adj[v] bit w set iff arc v -> w.  No loops allowed."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("digraph needs at least one vertex")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, bits in enumerate(self.adj):
            if bits & ~full:
                raise ValueError(f"adjacency bits of vertex {v} out of range")
            if bits >> v & 1:
                raise ValueError(f"loop at vertex {v}")

    @classmethod
    def from_arcs(cls, n: int, arcs) -> "Digraph":
        adj = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
        return cls(n, tuple(adj))

    @cached_property
    def preds(self) -> tuple[int, ...]:
        """Per-vertex predecessor bitsets (bit u of preds[v] iff u -> v)."""
        pred = [0] * self.n
        for u, bits in enumerate(self.adj):
            w = bits
            while w:
                low = w & -w
                pred[low.bit_length() - 1] |= 1 << u
                w ^= low
        return tuple(pred)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def out_degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.preds[v].bit_count()

    def out_neighbors(self, v: int) -> list[int]:
        return _bits_to_list(self.adj[v])

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs sorted lexicographically."""
        return [(u, w) for u in range(self.n) for w in _bits_to_list(self.adj[u])]

    @property
    def num_arcs(self) -> int:
        return sum(bits.bit_count() for bits in self.adj)

    def is_symmetric(self) -> bool:
        return self.adj == self.preds


def _bits_to_list(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


@dataclass(frozen=True)
class ConnectionSet:
    """Non-identity subset of a group, defining a Cayley digraph."""

    group: AbelianGroup
    members: frozenset[Element]

    def negated(self) -> frozenset[Element]:
        return frozenset(self.group.neg(x) for x in self.members)

    def is_tournament_set(self) -> bool:
        return validate_tournament_set(self.group, self.members)

    def is_graph_set(self) -> bool:
        return self.members == self.negated()


def connection_set(group: AbelianGroup, members) -> ConnectionSet:
    mem = frozenset(group.coerce(x) for x in members)
    if group.identity in mem:
        raise ValueError("invalid connection set: contains the identity")
    return ConnectionSet(group, mem)


def _members_of(group: AbelianGroup, s) -> frozenset[Element]:
    if isinstance(s, ConnectionSet):
        if s.group != group:
            raise ValueError("connection set belongs to a different group")
        return s.members
    return frozenset(group.coerce(x) for x in s)


def cayley_digraph(group: AbelianGroup, s) -> Digraph:
    """Digraph on the group's elements with an arc g -> h iff h - g is in s."""
    members = _members_of(group, s)
    if group.identity in members:
        raise ValueError("invalid connection set: contains the identity")
    n = group.order
    adj = [0] * n
    elems = group.elements()
    for i, g in enumerate(elems):
        bits = 0
        for step in members:
            bits |= 1 << group.index(group.add(g, step))
        adj[i] = bits
    return Digraph(n, tuple(adj))


def validate_tournament_set(group: AbelianGroup, s) -> bool:
    """True iff s and -s partition the non-identity elements.

    Such a set orients every pair of group elements exactly once, so the
    resulting Cayley digraph is a tournament.  Always false on groups of even
    order, where some element equals its own negative.
    """
    members = _members_of(group, s)
    if group.identity in members:
        return False
    neg = frozenset(group.neg(x) for x in members)
    if members & neg:
        return False
    nonidentity = frozenset(group.elements()) - {group.identity}
    return members | neg == nonidentity


def is_tournament(g: Digraph) -> bool:
    """True iff exactly one arc joins every unordered vertex pair."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (g.adj[u] >> v & 1) == (g.adj[v] >> u & 1):
                return False
    return True


def k_cube(k: int) -> Digraph:
    """The k-dimensional hypercube as a symmetric digraph."""
    if k < 1:
        raise ValueError(f"k_cube requires k >= 1, got {k}")
    group = AbelianGroup((2,) * k)
    basis = [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]
    return cayley_digraph(group, basis)


def cycle(n: int) -> Digraph:
    """The undirected n-cycle, i.e. the circulant with steps {1, -1}."""
    if n < 3:
        raise ValueError(f"cycle requires n >= 3, got {n}")
    return cayley_digraph(cyclic(n), {1, n - 1})


def kneser(v: int, k: int, i: int) -> Digraph:
    """Graph on k-subsets of a v-set, adjacent when the intersection has size i.

    kneser(5, 2, 0) is the Petersen graph.
    """
    if not v >= k >= i >= 0:
        raise ValueError(f"kneser requires v >= k >= i >= 0, got ({v}, {k}, {i})")
    verts = list(combinations(range(v), k))
    index = {m: j for j, m in enumerate(verts)}
    arcs = []
    for a, b in combinations(verts, 2):
        if len(set(a) & set(b)) == i:
            arcs.append((index[a], index[b]))
            arcs.append((index[b], index[a]))
    return Digraph.from_arcs(len(verts), arcs)


def petersen() -> Digraph:
    return kneser(5, 2, 0)


def metacirculant(m: int, n: int, a: int, sets) -> Digraph:
    """Metacirculant digraph on Z_m x Z_n from step sets S_0..S_{m-1}.

    Vertex (i, j) has index i*n + j.  There is an arc from (i, j) to
    (i + r, h) exactly when h lies in j + a^i * S_r.  Validity requires
    0 not in S_0 and a^m * S_r = S_r for every r; the failing r is reported.
    """
    if m < 1 or n < 2:
        raise ValueError(f"metacirculant requires m >= 1 and n >= 2, got ({m}, {n})")
    if a % n == 0 or a % n not in unit_list(n):
        raise ValueError(f"{a} is not a unit mod {n}")
    step_sets = [frozenset(x % n for x in s) for s in sets]
    if len(step_sets) != m:
        raise ValueError(f"expected {m} step sets, got {len(step_sets)}")
    if 0 in step_sets[0]:
        raise ValueError("invalid metacirculant: 0 in S_0")
    am = pow(a, m, n)
    for r, sr in enumerate(step_sets):
        if frozenset(am * x % n for x in sr) != sr:
            raise ValueError(f"invalid metacirculant: a^m * S_r != S_r at r={r}")
    adj = [0] * (m * n)
    for i in range(m):
        ai = pow(a, i, n)
        for r, sr in enumerate(step_sets):
            level = (i + r) % m
            shifted = [ai * x % n for x in sr]
            for j in range(n):
                bits = 0
                for d in shifted:
                    bits |= 1 << (level * n + (j + d) % n)
                adj[i * n + j] |= bits
    return Digraph(m * n, tuple(adj))


def wreath_product(g: Digraph, h: Digraph) -> Digraph:
    """Wreath (lexicographic) product: (v, w) -> (v', w') iff v -> v', or v = v' and w -> w'."""
    n = g.n * h.n
    adj = [0] * n
    block = [0] * g.n
    for v in range(g.n):
        bits = 0
        for w in _bits_to_list(g.adj[v]):
            bits |= ((1 << h.n) - 1) << (w * h.n)
        block[v] = bits
    for v in range(g.n):
        for w in range(h.n):
            adj[v * h.n + w] = block[v] | (h.adj[w] << (v * h.n))
    return Digraph(n, tuple(adj))


lexicographic_product = wreath_product


@dataclass(frozen=True)
class TriangleProfile:
    """Directed 3-cycle counts through each arc of a tournament.

    arc_counts holds (u, v, c) for every arc u -> v, where c is the number of
    vertices w with v -> w -> u.  The sorted multiset of counts is invariant
    under digraph isomorphism, which makes it a cheap separating invariant.
    """

    arc_counts: tuple[tuple[int, int, int], ...]
    summary: tuple[int, ...]

    @property
    def max_count(self) -> int:
        return self.summary[-1] if self.summary else 0


def triangle_profile(g: Digraph) -> TriangleProfile:
    if not is_tournament(g):
        raise ValueError("triangle_profile requires a tournament")
    counts = []
    for u, v in g.arcs():
        counts.append((u, v, (g.adj[v] & g.preds[u]).bit_count()))
    return TriangleProfile(tuple(counts), tuple(sorted(c for _, _, c in counts)))


def coset_saturated(group: AbelianGroup, s, subgroup) -> bool:
    """True iff every member of s outside `subgroup` brings its whole coset.

    Equivalently: s minus the subgroup is a union of subgroup cosets.  This is
    the coset condition a connection set must satisfy for the digraph to be
    expressible as a wreath product over that subgroup.
    """
    members = _members_of(group, s)
    sub = frozenset(group.coerce(x) for x in subgroup)
    for x in sub:
        for y in sub:
            if group.add(x, y) not in sub:
                raise ValueError("input is not closed under addition")
    if group.identity not in sub:
        raise ValueError("subgroup must contain the identity")
    for x in members - sub:
        if not all(group.add(x, hh) in members for hh in sub):
            return False
    return True


def relabel(g: Digraph, images) -> Digraph:
    """Apply a vertex permutation: arc u -> v becomes images[u] -> images[v]."""
    images = tuple(images)
    if sorted(images) != list(range(g.n)):
        raise ValueError("images is not a permutation of the vertices")
    adj = [0] * g.n
    for u in range(g.n):
        bits = 0
        for w in _bits_to_list(g.adj[u]):
            bits |= 1 << images[w]
        adj[images[u]] = bits
    return Digraph(g.n, tuple(adj))


def to_edge_list(g: Digraph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.arcs())


def to_dot(g: Digraph) -> str:
    lines = ["digraph G {"]
    lines += [f"  {u} -> {v};" for u, v in g.arcs()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: Digraph) -> str:
    payload = {"n": g.n, "edges": [list(arc) for arc in g.arcs()]}
    return json.dumps(payload, separators=(",", ":")) + "\n"


def export(g: Digraph, fmt: str) -> str:
    """Serialize deterministically; fmt is one of edge-list, dot, json."""
    if fmt == "edge-list":
        return to_edge_list(g)
    if fmt == "dot":
        return to_dot(g)
    if fmt == "json":
        return to_json(g)
    raise ValueError(f"unknown export format {fmt!r}")


def from_json(text: str) -> Digraph:
    try:
        payload = json.loads(text)
        n = payload["n"]
        arcs = [(int(u), int(v)) for u, v in payload["edges"]]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed digraph json: {exc}") from exc
    return Digraph.from_arcs(n, arcs)


def parse_graph_text(text: str) -> Digraph:
    """Parse the header + edge-list format: first line "digraph n" or "graph n".

    A "graph" header applies symmetric closure to the listed edges.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty graph file")
    head = lines[0].split()
    if len(head) != 2 or head[0] not in ("digraph", "graph"):
        raise ValueError(f"bad header {lines[0]!r}: expected 'digraph n' or 'graph n'")
    try:
        n = int(head[1])
    except ValueError as exc:
        raise ValueError(f"bad vertex count in header {lines[0]!r}") from exc
    arcs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ValueError(f"bad edge line {ln!r}") from exc
        arcs.append((u, v))
        if head[0] == "graph":
            arcs.append((v, u))
    return Digraph.from_arcs(n, arcs)
