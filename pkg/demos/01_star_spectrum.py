"""Spectrum of the equilateral 3-star under different vertex conditions.

The unit 3-star is small enough that every eigenvalue has a closed form,
which makes it a good first check of the secular solver: standard
conditions give 0, (pi/2)^2 (x2), pi^2, ..., while Dirichlet conditions
decouple the edges into three identical intervals.
"""
import math

from graphspec import ALL_DIRICHLET, ANTI_STANDARD, STANDARD, builtin, find_spectrum

g = builtin("star", 3, 1)
lam_max = (2 * math.pi) ** 2 + 1e-6

for label, spec in (("standard", STANDARD), ("anti-standard", ANTI_STANDARD), ("Dirichlet", ALL_DIRICHLET)):
    s = find_spectrum(g, spec, lam_max)
    print(f"{label} conditions:")
    for r in s.records:
        print(f"  k = {r.k:10.6f}   lambda = {r.lam:12.6f}   multiplicity {r.multiplicity}")
    print()

print("closed forms: (pi/2)^2 =", (math.pi / 2) ** 2, "  pi^2 =", math.pi**2)
