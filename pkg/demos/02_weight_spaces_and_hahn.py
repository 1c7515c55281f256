"""
Weight spaces and a three-term recurrence
=========================================

On weight -1 every vector is a series in I = z1 z2^3 / (3 sqrt 3).  The
operator (1/9) E+E- moves I^m only to I^(m-1), I^m and I^(m+1), and the
coefficients are those of continuous dual Hahn polynomials.
"""

from sp2branch import EVEN_PARAMS, ODD_PARAMS, casimir_tridiagonal, match_hahn_params, weight_basis

basis = weight_basis(-1, 3)
for m, (w, n) in enumerate(zip(basis.entries, basis.norms)):
    print(f"W_{m} = {w}    ||W_{m}||^2 = {n}")

data = casimir_tridiagonal(-1, 5)
print("\nweight -1: (alpha_m, beta_m, gamma_m)")
for row in data.to_rows():
    print("  ", row)

# parameters (a, b, c, d) = (0, 1/3, 2/3, 1) reproduce every coefficient and norm
print("weight -1 match:", match_hahn_params(casimir_tridiagonal(-1, 40), ODD_PARAMS).passed)
print("weight  0 match:", match_hahn_params(casimir_tridiagonal(0, 40), EVEN_PARAMS).passed)

# the wrong parameter set fails immediately
print("weight -1 vs even parameters:", match_hahn_params(casimir_tridiagonal(-1, 3), EVEN_PARAMS).passed)
