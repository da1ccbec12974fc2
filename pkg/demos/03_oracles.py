"""Two independent oracles confirming the secular solver.

For equilateral graphs the metric spectrum is determined by the
normalized discrete Laplacian through the transfer 1 - cos(k l) = mu;
for arbitrary lengths a piecewise-linear finite element discretization
converges to the same eigenvalues.  Both routes are compared with the
secular root finder here.
"""
import math

from graphspec import (
    STANDARD,
    build_normalized_laplacian,
    builtin,
    find_spectrum,
    finite_difference_spectrum,
    spectrum_values,
    symmetric_eigenvalues,
    von_below_metric_spectrum,
)

# --- equilateral route on the unit triangle ---------------------------------
g = builtin("cycle", 1, 1, 1)
mus = symmetric_eigenvalues(build_normalized_laplacian(g))
print("discrete normalized Laplacian eigenvalues:", [round(m, 6) for m in mus])

lam_max = (2 * math.pi) ** 2 + 1e-6
oracle = von_below_metric_spectrum(g, 1.0, lam_max)
direct = find_spectrum(g, STANDARD, lam_max)
print("\n transfer oracle        secular solver")
for ro, rd in zip(oracle.records, direct.records):
    print(f" k={ro.k:9.6f} x{ro.multiplicity}     k={rd.k:9.6f} x{rd.multiplicity}")

# --- finite element route on a non-equilateral cycle ------------------------
g2 = builtin("cycle", 1, 3)
fd = finite_difference_spectrum(g2, STANDARD, 2000.0, 6)
exact = spectrum_values(g2, STANDARD, 6)
print("\ncycle(1,3):  finite elements   vs   secular")
for got, want in zip(fd, exact):
    err = abs(got - want) / max(1.0, abs(want))
    print(f"  {got:14.8f}   {want:14.8f}   rel err {err:.1e}")
