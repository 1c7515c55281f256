"""
Highest weight vectors and the discrete part
============================================

Solve E+ f = 0 starting from z1^k.  The coefficients are k!/(l!(k+l)!), the
norm series behaves like sum 1/l^(k+1), so k = 0 diverges and every k >= 1
contributes a highest weight module of weight -(3k+1).
"""

from sp2branch import discrete_components, hwv_norm_partials, no_lws_scan, rep_casimir_eigenvalue, solve_hwv
from sp2branch.branching import hwv_casimir_defect, hwv_norm_closed_form

s = solve_hwv(1, 4)
print("k = 1 coefficients:", [str(a) for a in s.a])
print("E+ residual lives in degree", s.residual.degrees(), "only")
print("Casimir defect below the top band vanishes:", hwv_casimir_defect(s).is_zero())

for k in (0, 1, 2):
    r = hwv_norm_partials(k, 4)
    print(f"\nk = {k}: S_0..S_4 = {[str(x) for x in r.partials]}  -> {r.verdict}")
    if k == 0:
        print("   doubling increments:", {M: round(v, 4) for M, v in r.evidence["doubling_increments"].items()})
    else:
        lo, hi = r.evidence["value_bracket"]
        print(f"   ||f||^2 in [{lo:.13f}, {hi:.13f}], closed form {hwv_norm_closed_form(k):.13f}")

# lowest weight vectors would need a kernel element of d2^2 of weight >= 1
scan = no_lws_scan(8)
print("\nkernel weights up to degree 8:", sorted({el.weight for el in scan.kernel}))

for r in discrete_components("all", 5):
    print(r, "Casimir", rep_casimir_eigenvalue(r))
print("even part:", [str(r) for r in discrete_components("even", 8)])
