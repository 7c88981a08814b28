"""Extending an embedding from a dense basis to the whole lattice.

A map defined only on the bottom and the singletons of a subset lattice
pins down its unique continuous extension; when the partial map is an
embedding with convex range inside a well-behaved target, the extension
is again an embedding with convex range.
"""

from latkit.builders import powerset_lattice
from latkit.embedding import (
    HypothesisFailed,
    enumerate_continuous_extensions,
    enumerate_embeddings,
    extend_from_join_dense,
    verify_convexity_transfer,
)

p2, p3 = powerset_lattice(2), powerset_lattice(3)
basis = [0b00, 0b01, 0b10]  # bottom plus singletons of P(2)

print("== reconstruction from the basis ==")
census = enumerate_embeddings(p2, p3, convex_range=True)
mm = census.maps[7]
partial = {b: mm.image[b] for b in basis}
print("full map:      ", mm.image)
print("basis fragment:", partial)
ext = extend_from_join_dense(p2, basis, partial, p3)
print("extension:     ", ext.image, " equal:", ext.image == mm.image)

print("\n== uniqueness, by enumerating every continuous extension ==")
exts = enumerate_continuous_extensions(p2, basis, partial, p3)
print(f"continuous extensions agreeing on the basis: "
      f"{len({e.image for e in exts})}")

print("\n== the packaged theorem check ==")
report = verify_convexity_transfer(p2, basis, p3.full_mask, p3, partial)
for key in ("holds", "unique", "convex_range", "embedding"):
    print(f"  {key}: {report[key]}")

print("\n== hypothesis violations are named ==")
thin_target = [0, 1, 2, 4, 7]  # bottom, singletons, top: not preregular
try:
    verify_convexity_transfer(p2, basis, thin_target, p3, {0: 0, 1: 1, 2: 2})
except HypothesisFailed as exc:
    print("  rejected:", exc)

print("\n== without the bottom the extension can float ==")
from latkit.builders import chain

c2, c3 = chain(2), chain(3)
floats = enumerate_continuous_extensions(c2, [1], {1: 2}, c3)
images = sorted({e.image for e in floats})
print(f"  the top of a 2-chain sent to 2 in a 3-chain extends {len(images)}",
      f"ways: {images}")
print("  (all agree off the bottom; adding the bottom to the dense set",
      "restores uniqueness)")
