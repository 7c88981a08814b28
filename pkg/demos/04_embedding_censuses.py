"""Censuses of order embeddings and their structure laws.

Every convex-range embedding between subset lattices is a ground map plus
a constant baseline; between products of chains it is a shifted partial
projection.  The censuses here are enumerated by backtracking search and
compared against the closed families, member by member.
"""

from latkit.builders import chain_product, powerset_lattice
from latkit.embedding import (
    atom_image_check,
    chainprod_decompose,
    continuity_checks,
    enumerate_embeddings,
    powerset_decompose,
    powerset_formula_census,
)
from latkit.lattice import is_convex
from latkit.order import MonotoneMap

p2, p3 = powerset_lattice(2), powerset_lattice(3)

print("== the subset-lattice census P(2) -> P(3) ==")
census = enumerate_embeddings(p2, p3, convex_range=True)
formula = powerset_formula_census(2, 3, p2, p3)
print(f"search found {len(census)} convex-range embeddings;",
      f"formula family has {len(formula)}; equal: {census.images() == formula}")
for mm in census.maps[:4]:
    dec = powerset_decompose(mm)
    print(f"  image {mm.image}  =  ground map {dec.h} with baseline {dec.b:03b}")

print("\n== the map that fits no ground function ==")
cex = MonotoneMap(p2, p3, (0, 1, 2, 7))
print("order embedding:", cex.is_embedding)
print("convex range:", is_convex(p3, cex.range_mask),
      " (the two-point set {0,1} is missing between {0} and the top)")

print("\n== chain products ==")
dom, cod = chain_product([2, 2]), chain_product([2, 2, 2])
cen = enumerate_embeddings(dom.order, cod.order, convex_range=True)
print(f"C2^2 -> C2^3 has {len(cen)} convex-range embeddings:")
for mm in cen.maps[:4]:
    dec = chainprod_decompose(mm, dom, cod)
    print(f"  coordinates {dict(dec.g)} shifted by {dec.y}")

print("\n== continuity comes for free with a preregular range ==")
for mm in census.maps[:3]:
    print(f"  {mm.image} ->", continuity_checks(mm))

print("\n== atoms map onto relative atoms of the range ==")
print("all census maps respect the atom law:",
      all(atom_image_check(mm) for mm in census.maps))
