"""Bundled cross-checks on the order-9 and order-25 comparison graphs.

Three independent facts, each verified from scratch at run time:

  a. On Z_25 there are two connection sets whose Cayley graphs are isomorphic
     (both are wreath squares of the 5-cycle) although no unit multiplier maps
     one set to the other, so the prime-order equivalence criterion does not
     survive to composite moduli.
  b. The order-9 Cayley tournaments on Z_9 and Z_3 x Z_3 are separated by the
     directed-triangle profile: one has an arc lying on 4 directed triangles,
     the other never exceeds 3.
  c. Some Cayley tournament on Z_9 *is* isomorphic to the Z_3 x Z_3 one, found
     by searching all 16 tournament sets on Z_9 with full backtracking.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enumeration import unit_multiplier
from .graphs import cayley_digraph, cycle, triangle_profile, wreath_product
from .groups import AbelianGroup, cyclic
from .perm import isomorphic

Z25_SET = frozenset({1, 4, 5, 6, 9, 11, 14, 16, 19, 20, 21, 24})
Z25_SET_ALT = frozenset({1, 4, 6, 9, 10, 11, 14, 15, 16, 19, 21, 24})
Z9_SET = frozenset({1, 7, 3, 5})
Z33_SET = frozenset({(0, 1), (2, 0), (1, 1), (2, 1)})


@dataclass(frozen=True)
class FixtureResult:
    name: str
    ok: bool
    detail: str
    data: dict


def unit_multiplier_gap() -> FixtureResult:
    """Fixture a: isomorphic Z_25 circulants with no unit multiplier between them."""
    z25 = cyclic(25)
    g = cayley_digraph(z25, Z25_SET)
    g_alt = cayley_digraph(z25, Z25_SET_ALT)
    a = unit_multiplier(25, Z25_SET, Z25_SET_ALT)
    w = wreath_product(cycle(5), cycle(5))
    iso_first = isomorphic(w, g) is not None
    iso_second = isomorphic(w, g_alt) is not None
    ok = a is None and iso_first and iso_second
    detail = (f"unit multiplier: {'none over 20 units' if a is None else a}; "
              f"5-cycle wreath square isomorphic to both: {iso_first and iso_second}")
    return FixtureResult("a", ok, detail,
                         {"unit_multiplier": a, "wreath_isomorphic_to_first": iso_first,
                          "wreath_isomorphic_to_second": iso_second})


def triangle_separation() -> FixtureResult:
    """Fixture b: triangle profiles separate the Z_9 and Z_3 x Z_3 tournaments."""
    g9 = cayley_digraph(cyclic(9), Z9_SET)
    g33 = cayley_digraph(AbelianGroup((3, 3)), Z33_SET)
    max9 = triangle_profile(g9).max_count
    max33 = triangle_profile(g33).max_count
    ok = max9 == 4 and max33 < 4
    return FixtureResult("b", ok,
                         f"directed-triangle witness: max {max9} vs max {max33}",
                         {"cyclic_max": max9, "product_max": max33})


def cyclic_relabel_witness() -> FixtureResult:
    """Fixture c: a Z_9 Cayley tournament isomorphic to the Z_3 x Z_3 one exists."""
    g33 = cayley_digraph(AbelianGroup((3, 3)), Z33_SET)
    z9 = cyclic(9)
    for bits in range(16):
        members = {i if bits >> (i - 1) & 1 else 9 - i for i in range(1, 5)}
        witness = isomorphic(cayley_digraph(z9, members), g33)
        if witness is not None:
            return FixtureResult(
                "c", True,
                f"witness set {sorted(members)} on Z_9 with isomorphism found",
                {"witness_set": sorted(members), "witness_map": list(witness)})
    return FixtureResult("c", False, "no Z_9 tournament set matched over all 16",
                         {"witness_set": None, "witness_map": None})


def run_all() -> list[FixtureResult]:
    return [unit_multiplier_gap(), triangle_separation(), cyclic_relabel_witness()]
