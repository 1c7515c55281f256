"""
Generalized eigenfunctions on weight -1
=======================================

Psi_x = sum_m e_m(z) e~_m(x^2) pairs the orthonormal Fock basis with the
orthonormal Hahn polynomials.  Truncations fail to be eigenvectors only in
their last two modes.
"""

from fractions import Fraction

from sp2branch import eigen_residual, eigenfunction_coefficients, generalized_eigenfunction

x = Fraction(3)
print("coefficients of W_m in Psi_3:", [str(c) for c in eigenfunction_coefficients(x, 4, exact=True)])
print("(-C - (2x^2 + 1/2)) Psi^(6) on W_0..W_7:")
for j, c in enumerate(eigen_residual(x, 6)):
    print(f"   W_{j}: {c}")

# pointwise values settle as M grows
z = (0.4 + 0.3j, 0.8)
for M in (2, 5, 10, 20, 40):
    print(f"M={M:3d}  Psi_1.2(z) = {generalized_eigenfunction(1.2, z, M):.12f}")
