"""
The principal sl(2) inside the oscillator representation
========================================================

Build the principal triple in sp(2), turn it into differential operators
on polynomials in (z1, z2), and check the sl(2) relations exactly.
"""

from sp2branch import casimir_operator, commutator, principal_sl2, sl2_operators
from sp2branch.fock import FockPolynomial, invariant_I
from sp2branch.metaplectic import verify_sl2_matrix
from sp2branch.weyl import apply

# the 4x4 matrices for n = 2; entries are exact square roots
t = principal_sl2(2)
print("H  =", t.H.matrix())
print("E+ =", t.Eplus.matrix())
print(verify_sl2_matrix(t))

# as operators: H = -1 - 3 z1 d1 + z2 d2, E+ = -sqrt3 d1 d2 + z2^2, E- = -d2^2 + sqrt3 z1 z2
LH, LEp, LEm = sl2_operators(2)
print("Lambda(H)  =", LH)
print("Lambda(E+) =", LEp)
print("Lambda(E-) =", LEm)
print("[E+, E-] == H :", commutator(LEp, LEm) == LH)

# the Casimir is central, and I = z1 z2^3 / (3 sqrt 3) has weight zero under H + 1
C = casimir_operator()
print("[C, E+] == 0 :", commutator(C, LEp).is_zero())
print("C 1 =", apply(C, FockPolynomial.constant(2)))
print("E- I =", apply(LEm, invariant_I()))
