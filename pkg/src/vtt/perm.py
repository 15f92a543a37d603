"""Permutations, digraph isomorphism search, orbits, and Cayley recognition.

The isomorphism and automorphism routines share one backtracking engine with
two pruning invariants per vertex: the (out-degree, in-degree) pair and the
number of directed 3-cycles through the vertex.  Candidates are always tried
in ascending vertex order, so results are deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InconsistencyError, SizeLimitError
from .graphs import Digraph

Permutation = tuple[int, ...]

DEFAULT_AUT_CAP = 16


def identity_perm(n: int) -> Permutation:
    return tuple(range(n))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Composition applying q first, then p."""
    return tuple(p[q[i]] for i in range(len(p)))


def inverse_perm(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def perm_cycles(p: Permutation) -> list[tuple[int, ...]]:
    """Nontrivial cycles, each rotated to start at its minimum, sorted."""
    seen = [False] * len(p)
    cycles = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        cycles.append(tuple(cyc))
    return cycles


def perm_order(p: Permutation) -> int:
    return math.lcm(*(len(c) for c in perm_cycles(p)), 1)


def fixed_points(p: Permutation) -> int:
    return sum(1 for i, x in enumerate(p) if i == x)


def perm_str(p: Permutation) -> str:
    cycles = perm_cycles(p)
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(v) for v in c) + ")" for c in cycles)


@dataclass(frozen=True)
class PermGroup:
    """A permutation group materialized as an explicit element list."""

    degree: int
    elements: tuple[Permutation, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self.elements

    @classmethod
    def from_generators(cls, degree: int, generators) -> "PermGroup":
        gens = [tuple(g) for g in generators]
        for g in gens:
            if sorted(g) != list(range(degree)):
                raise ValueError(f"{g} is not a permutation of degree {degree}")
        closure = _close({identity_perm(degree), *gens})
        return cls(degree, tuple(sorted(closure)))

    def orbit(self, v: int) -> set[int]:
        return {p[v] for p in self.elements}

    def stabilizer(self, v: int) -> "PermGroup":
        return PermGroup(self.degree, tuple(p for p in self.elements if p[v] == v))


def _close(perms: set[Permutation], limit: int | None = None,
           allowed: frozenset[Permutation] | None = None) -> set[Permutation] | None:
    """Closure under composition; None once `limit` is exceeded or an element
    falls outside `allowed`."""
    closure = set(perms)
    frontier = list(perms)
    while frontier:
        x = frontier.pop()
        for y in tuple(closure):
            for z in (compose(x, y), compose(y, x)):
                if z not in closure:
                    if allowed is not None and z not in allowed:
                        return None
                    closure.add(z)
                    if limit is not None and len(closure) > limit:
                        return None
                    frontier.append(z)
    return closure


def _vertex_invariants(g: Digraph) -> list[tuple[int, int, int]]:
    inv = []
    for v in range(g.n):
        tri = 0
        for w in g.out_neighbors(v):
            tri += (g.adj[w] & g.preds[v]).bit_count()
        inv.append((g.out_degree(v), g.in_degree(v), tri))
    return inv


def _search_isomorphisms(g: Digraph, h: Digraph, find_all: bool) -> list[Permutation]:
    if g.n != h.n or g.num_arcs != h.num_arcs:
        return []
    n = g.n
    inv_g = _vertex_invariants(g)
    inv_h = _vertex_invariants(h)
    if sorted(inv_g) != sorted(inv_h):
        return []
    candidates = [[w for w in range(n) if inv_h[w] == inv_g[u]] for u in range(n)]
    if any(not c for c in candidates):
        return []

    gadj, hadj = g.adj, h.adj
    mapping = [-1] * n
    used = [False] * n
    found: list[Permutation] = []

    def place(u: int) -> bool:
        if u == n:
            found.append(tuple(mapping))
            return not find_all
        for w in candidates[u]:
            if used[w]:
                continue
            ok = True
            for v in range(u):
                mv = mapping[v]
                if (gadj[v] >> u & 1) != (hadj[mv] >> w & 1) or \
                   (gadj[u] >> v & 1) != (hadj[w] >> mv & 1):
                    ok = False
                    break
            if ok:
                mapping[u] = w
                used[w] = True
                if place(u + 1):
                    return True
                used[w] = False
        return False

    place(0)
    return found


def is_automorphism(g: Digraph, p: Permutation) -> bool:
    if sorted(p) != list(range(g.n)):
        return False
    return all(g.has_arc(p[u], p[v]) for u, v in g.arcs())


def isomorphic(g: Digraph, h: Digraph) -> Permutation | None:
    """A digraph isomorphism g -> h if one exists, else None.

    Every returned witness is re-verified arc by arc before being handed out.
    """
    found = _search_isomorphisms(g, h, find_all=False)
    if not found:
        return None
    p = found[0]
    mapped = {(p[u], p[v]) for u, v in g.arcs()}
    if mapped != set(h.arcs()):
        raise InconsistencyError("isomorphism witness failed arc-by-arc verification")
    return p


def automorphisms(g: Digraph, cap: int = DEFAULT_AUT_CAP) -> PermGroup:
    """All arc-preserving permutations of g, fully enumerated."""
    if g.n > cap:
        raise SizeLimitError(
            f"automorphism enumeration capped at {cap} vertices, graph has {g.n}")
    found = _search_isomorphisms(g, g, find_all=True)
    return PermGroup(g.n, tuple(sorted(found)))


def orbits(group: PermGroup, n: int) -> list[list[int]]:
    """Orbit partition of {0..n-1}, blocks sorted by their minimum."""
    if group.degree != n:
        raise ValueError(f"group degree {group.degree} does not match n={n}")
    seen = [False] * n
    blocks = []
    for v in range(n):
        if seen[v]:
            continue
        block = sorted({p[v] for p in group.elements})
        for w in block:
            seen[w] = True
        blocks.append(block)
    return blocks


def burnside_orbit_count(group: PermGroup, n: int) -> int:
    """Number of orbits as the average fixed-point count over the group."""
    if group.degree != n:
        raise ValueError(f"group degree {group.degree} does not match n={n}")
    if not group.elements:
        raise ValueError("empty element list is not a group")
    total = sum(fixed_points(p) for p in group.elements)
    if total % len(group.elements):
        raise InconsistencyError(
            f"fixed-point sum {total} is not divisible by {len(group.elements)}; "
            "input is not a group")
    return total // len(group.elements)


def find_regular_subgroup(aut: PermGroup, n: int) -> PermGroup | None:
    """A transitive subgroup of order n with trivial stabilizers, if any.

    Searches closures of fixed-point-free elements: in a regular group every
    non-identity element is fixed-point-free and has order dividing n, which
    prunes the candidate pool hard.
    """
    ident = identity_perm(n)
    pool = sorted(p for p in aut
                  if p != ident and fixed_points(p) == 0 and n % perm_order(p) == 0)
    allowed = frozenset(pool) | {ident}
    seen: set[frozenset[Permutation]] = set()

    def extend(current: frozenset[Permutation], start: int) -> frozenset[Permutation] | None:
        if len(current) == n:
            return current
        for idx in range(start, len(pool)):
            p = pool[idx]
            if p in current:
                continue
            closed = _close(set(current) | {p}, limit=n, allowed=allowed)
            if closed is None or n % len(closed):
                continue
            key = frozenset(closed)
            if key in seen:
                continue
            seen.add(key)
            result = extend(key, idx + 1)
            if result is not None:
                return result
        return None

    if n == 1:
        return PermGroup(1, (ident,))
    hit = extend(frozenset({ident}), 0)
    if hit is None:
        return None
    sub = PermGroup(n, tuple(sorted(hit)))
    if len(sub.orbit(0)) != n:
        raise InconsistencyError("regular subgroup candidate is not transitive")
    return sub


def is_cayley(g: Digraph, cap: int = DEFAULT_AUT_CAP) -> PermGroup | None:
    """A regular subgroup of Aut(g) when g is a Cayley digraph, else None."""
    return find_regular_subgroup(automorphisms(g, cap), g.n)
