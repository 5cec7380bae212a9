#!/usr/bin/env python3
"""Intersection matrix of the named curves, K and D."""
from pvmoduli.surface import (
    NAMED, canonical_class, curve_census, discrepancy, discrepancy_total_space,
    moduli_divisor_D, signature,
)

names = list(NAMED)
print("      " + " ".join(f"{n:>7}" for n in names))
for a in names:
    print(f"{a:>7} " + " ".join(f"{NAMED[a] @ NAMED[b]:>7}" for b in names))

K = canonical_class()
D, _ = moduli_divisor_D()
print("K =", K, "  K.K =", K @ K)
print("D =", D, "  D.C:", {n: D @ c for n, c in NAMED.items()})
c = curve_census()
print("(-2)-curves:", c.minus_two, " (-1)-curves:", c.minus_one)
print("discrepancy of Ainf:", discrepancy(NAMED["Ainf"]),
      " in the total space:", discrepancy_total_space().discrepancy)
print("signature:", signature())
