"""Tournament connection sets on Z_p as bitmasks, and their orbit structure.

A tournament set on Z_p picks one of {i, p-i} for each i in 1..(p-1)/2, so it
packs into (p-1)/2 bits: bit i-1 set means i is in the set, clear means p-i
is.  Multiplication by a unit permutes these choices; orbits of that action
are exactly the isomorphism classes of the corresponding Cayley tournaments.
This module enumerates the orbits explicitly (union-find over the full mask
universe) and provides the Burnside fixed-point count as a second, formula
independent oracle.
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass

from .errors import InconsistencyError, SizeLimitError
from .groups import generating_units, is_prime, mult_order, units

DEFAULT_BUDGET_BITS = 30

_CHUNK_BITS = 8


@dataclass(frozen=True)
class SetMask:
    """A tournament connection set on Z_p packed into (p-1)/2 choice bits."""

    p: int
    bits: int

    def __post_init__(self) -> None:
        if self.p < 3 or not is_prime(self.p):
            raise ValueError(f"{self.p} is not an odd prime")
        if not 0 <= self.bits < 1 << ((self.p - 1) // 2):
            raise ValueError(f"mask {self.bits:#x} out of range for p={self.p}")

    def members(self) -> tuple[int, ...]:
        """The set members as sorted residues in [1, p)."""
        half = (self.p - 1) // 2
        out = []
        for i in range(1, half + 1):
            out.append(i if self.bits >> (i - 1) & 1 else self.p - i)
        return tuple(sorted(out))

    @classmethod
    def from_members(cls, p: int, members) -> "SetMask":
        half = (p - 1) // 2
        mem = {x % p for x in members}
        if len(mem) != half:
            raise ValueError(f"expected {half} members, got {sorted(mem)}")
        bits = 0
        for i in range(1, half + 1):
            if i in mem:
                if p - i in mem:
                    raise ValueError(f"both {i} and {p - i} present: not a tournament set")
                bits |= 1 << (i - 1)
            elif p - i not in mem:
                raise ValueError(f"neither {i} nor {p - i} present: not a tournament set")
        return cls(p, bits)


def _check_enumerable(p: int, budget_bits: int) -> int:
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    half = (p - 1) // 2
    if half > budget_bits:
        raise SizeLimitError(
            f"p={p} needs {half} mask bits, over the budget of {budget_bits}")
    return half


def all_sets(p: int, budget_bits: int = DEFAULT_BUDGET_BITS):
    """Yield every tournament connection set on Z_p once, ascending by mask."""
    half = _check_enumerable(p, budget_bits)
    for bits in range(1 << half):
        yield SetMask(p, bits)


def _act_table(p: int, a: int) -> tuple[list[list[int]], int]:
    """Chunked lookup tables for the action of unit a on masks.

    Returns (chunk_tables, flip_mask): applying the action to `bits` is
    OR-of-table-lookups over 8-bit chunks, XORed with flip_mask.
    """
    half = (p - 1) // 2
    moves = []
    flip_mask = 0
    for i in range(1, half + 1):
        v = a * i % p
        if v <= half:
            moves.append((i - 1, v - 1))
        else:
            moves.append((i - 1, p - v - 1))
            flip_mask |= 1 << (p - v - 1)
    nchunks = (half + _CHUNK_BITS - 1) // _CHUNK_BITS
    tables = []
    for c in range(nchunks):
        lo = c * _CHUNK_BITS
        width = min(_CHUNK_BITS, half - lo)
        table = [0] * (1 << width)
        local = [(src - lo, dst) for src, dst in moves if lo <= src < lo + width]
        for chunk in range(1 << width):
            out = 0
            for src, dst in local:
                out |= (chunk >> src & 1) << dst
            table[chunk] = out
        tables.append(table)
    return tables, flip_mask


def _apply(tables: list[list[int]], flip_mask: int, bits: int) -> int:
    out = 0
    for table in tables:
        out |= table[bits & 0xFF]
        bits >>= _CHUNK_BITS
    return out ^ flip_mask


def act(a: int, s: SetMask) -> SetMask:
    """The set {a*x mod p | x in s}, renormalized to the choice-bit encoding."""
    a %= s.p
    if a == 0:
        raise ValueError("multiplier must be nonzero mod p")
    tables, flip_mask = _act_table(s.p, a)
    return SetMask(s.p, _apply(tables, flip_mask, s.bits))


def unit_multiplier(n: int, s, t) -> int | None:
    """The smallest unit a with a*s = t as residue sets mod n, if one exists."""
    s = {x % n for x in s}
    t = {x % n for x in t}
    for a in units(n):
        if {a * x % n for x in s} == t:
            return a
    return None


def invariant_sets(p: int, a: int, budget_bits: int = DEFAULT_BUDGET_BITS) -> list[SetMask]:
    """All tournament sets fixed by multiplication with a, ascending by mask."""
    half = _check_enumerable(p, budget_bits)
    a %= p
    if a == 0:
        raise ValueError("multiplier must be nonzero mod p")
    tables, flip_mask = _act_table(p, a)
    return [SetMask(p, bits) for bits in range(1 << half)
            if _apply(tables, flip_mask, bits) == bits]


@dataclass(frozen=True)
class ClassInfo:
    rep: SetMask
    size: int
    members: tuple[SetMask, ...] | None = None


@dataclass(frozen=True)
class ClassReport:
    """Equivalence classes of tournament sets on Z_p under the unit action."""

    p: int
    total_sets: int
    classes: tuple[ClassInfo, ...]

    @property
    def count(self) -> int:
        return len(self.classes)

    def sizes(self) -> tuple[int, ...]:
        return tuple(sorted(c.size for c in self.classes))

    def json_lines(self) -> list[str]:
        lines = []
        for c in self.classes:
            record: dict = {"p": self.p, "rep": list(c.rep.members()), "size": c.size}
            if c.members is not None:
                record["members"] = [list(m.members()) for m in c.members]
            lines.append(json.dumps(record, separators=(",", ":")))
        return lines


def _edges_chunk(args: tuple[int, list[int], int, int]) -> list[int]:
    """Worker: action images for masks in [lo, hi), flattened per generator."""
    p, gens, lo, hi = args
    images = []
    for a in gens:
        tables, flip_mask = _act_table(p, a)
        images.extend(_apply(tables, flip_mask, bits) for bits in range(lo, hi))
    return images


def equivalence_classes(p: int, include_members: bool = False,
                        budget_bits: int = DEFAULT_BUDGET_BITS,
                        workers: int = 1) -> ClassReport:
    """Orbits of the unit action, canonical representative = smallest mask.

    Workers > 1 only parallelizes the embarrassingly parallel image
    computation; the union-find merge runs in a fixed order, so output is
    identical for any worker count.
    """
    half = _check_enumerable(p, budget_bits)
    total = 1 << half
    gens = generating_units(p)

    parent = list(range(total))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            if rx > ry:
                rx, ry = ry, rx
            parent[ry] = rx

    if workers > 1:
        nchunks = min(workers * 4, total)
        bounds = [(total * i // nchunks, total * (i + 1) // nchunks)
                  for i in range(nchunks)]
        with multiprocessing.Pool(workers) as pool:
            results = pool.map(_edges_chunk, [(p, gens, lo, hi) for lo, hi in bounds])
        for (lo, hi), images in zip(bounds, results):
            width = hi - lo
            for gi in range(len(gens)):
                base = gi * width
                for off in range(width):
                    union(lo + off, images[base + off])
    else:
        for a in gens:
            tables, flip_mask = _act_table(p, a)
            for bits in range(total):
                union(bits, _apply(tables, flip_mask, bits))

    sizes: dict[int, int] = {}
    members: dict[int, list[int]] = {}
    order: list[int] = []
    for bits in range(total):
        root = find(bits)
        if root not in sizes:
            sizes[root] = 0
            order.append(root)
            if include_members:
                members[root] = []
        sizes[root] += 1
        if include_members:
            members[root].append(bits)

    classes = []
    for root in order:
        mem = tuple(SetMask(p, b) for b in members[root]) if include_members else None
        classes.append(ClassInfo(SetMask(p, root), sizes[root], mem))
    return ClassReport(p, total, tuple(classes))


def burnside_count(p: int) -> int:
    """Class count as the average number of fixed sets over all units.

    A unit of even order fixes nothing (its cyclic subgroup contains -1);
    a unit of odd order d fixes exactly 2^((p-1)/(2d)) sets.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    total = 0
    for a in units(p):
        d = mult_order(a, p)
        if d % 2 == 1:
            total += 1 << ((p - 1) // (2 * d))
    if total % (p - 1):
        raise InconsistencyError(
            f"fixed-set total {total} is not divisible by {p - 1}")
    return total // (p - 1)
