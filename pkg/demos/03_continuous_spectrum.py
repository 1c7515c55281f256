"""
Truncated spectra of -C
=======================

The Jacobi matrix of the Hahn recurrence is unbounded, so finite sections
only hint at the continuous spectrum [1/2, oo).  The smallest eigenvalue
creeps down toward 1/2, slowly, and the Gauss rule built
from the truncation tracks the orthogonality measure.
"""

import numpy as np

from sp2branch import EVEN_PARAMS, ODD_PARAMS, measure_density, spectrum_report

print("density at x = 0 for (0, 1/3, 2/3):", measure_density(0.0, ODD_PARAMS), "vs 4/sqrt(3) =", 4 / np.sqrt(3))
print("density at x = 0 for (1/2, 1/6, 5/6):", measure_density(0.0, EVEN_PARAMS))

for weight in (-1, 0):
    print(f"\nweight {weight}")
    for N in (125, 250, 500, 1000, 2000):
        r = spectrum_report(weight, N)
        print(f"  N={N:5d}  min -C = {r.min:.6f}   KS(mid) = {r.ks_weighted:.4f}   KS(sup) = {r.ks_weighted_sup:.3f}")

# two readings of the same numbers: -C = 2 x^2 + 1/2 = lambda^2 + 1/2
r = spectrum_report(-1, 250)
print("\nlowest five, x-scale:     ", np.round(r.x_parametrization[:5], 4))
print("lowest five, lambda-scale:", np.round(r.lambda_parametrization[:5], 4))
