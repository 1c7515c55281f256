import json
import math
from fractions import Fraction
from math import factorial

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sp2branch.branching import (
    HwvSeries,
    ReprDescriptor,
    casimir_tridiagonal,
    discrete_components,
    eigen_residual,
    eigenfunction_coefficients,
    eigenfunction_polynomial,
    generalized_eigenfunction,
    hwv_casimir_defect,
    hwv_norm_closed_form,
    hwv_norm_partials,
    hwv_tail_bracket,
    match_hahn_params,
    no_lws_scan,
    rep_casimir_eigenvalue,
    solve_hwv,
    weight_basis,
    weight_decomposition,
)
from sp2branch.fock import FockPolynomial, inner_product, invariant_I, pochhammer
from sp2branch.hahn import EVEN_PARAMS, ODD_PARAMS
from sp2branch.metaplectic import casimir_operator, sl2_operators
from sp2branch.weyl import apply

LH, LEp, LEm = sl2_operators(2)
THIRD = Fraction(1, 3)


def mono(a, c=1):
    return FockPolynomial.monomial(a, c)


# -- weight bases ------------------------------------------------------------------
def test_weight_basis_minus_one():
    b = weight_basis(-1, 2)
    I = invariant_I()
    assert b.entries[0] == FockPolynomial.constant(2)
    assert b.entries[1] == I / (THIRD * 2 * THIRD)
    assert b.entries[2] == (I * I) / (pochhammer(THIRD, 2) * pochhammer(2 * THIRD, 2))
    for m, n in enumerate(b.norms):
        assert n == Fraction(factorial(m) ** 2) / (pochhammer(THIRD, m) * pochhammer(2 * THIRD, m))


def test_weight_basis_other_weights():
    b = weight_basis(-4, 1)
    assert b.entries == [mono((1, 0)), invariant_I() * mono((1, 0))]
    b = weight_basis(2, 1)
    assert b.entries == [mono((0, 3)), invariant_I() * mono((0, 3))]
    with pytest.raises(ValueError):
        weight_basis(0, -1)


@given(st.integers(-40, 40))
def test_weight_decomposition(mu):
    k, r, extra = weight_decomposition(mu)
    assert mu == -3 * k - 1 + r and r in (0, 1, 2)
    assert -1 - 3 * extra[0] + extra[1] == mu


@settings(max_examples=25, deadline=None)
@given(st.integers(-12, 12))
def test_weight_basis_entries_are_eigenvectors_and_orthogonal(mu):
    b = weight_basis(mu, 4)
    for i, v in enumerate(b.entries):
        assert apply(LH, v) == v.scale(mu)
        for w in b.entries[i + 1:]:
            assert inner_product(v, w) == 0


# -- tridiagonalization -------------------------------------------------------------
def test_tridiagonal_examples():
    d = casimir_tridiagonal(-1, 1)
    assert d.triples[1] == (Fraction(20, 9), Fraction(-10, 3), 1)
    assert d.triples[0] == (Fraction(2, 9), Fraction(-1, 3), 0)
    assert casimir_tridiagonal(0, 0).triples[0] == (Fraction(8, 9), Fraction(-2, 3), 0)


def test_tridiagonal_closed_forms():
    for m, (a, b, g) in enumerate(casimir_tridiagonal(-1, 30).triples):
        assert (a, b, g) == ((m + THIRD) * (m + 2 * THIRD), -(2 * m * m + m + THIRD), m * m)
    for m, (a, b, g) in enumerate(casimir_tridiagonal(0, 30).triples):
        assert (a, b, g) == ((m + 2 * THIRD) * (m + 4 * THIRD), -(2 * m * m + 2 * m + 2 * THIRD), m * m)


@pytest.mark.parametrize("mu", [-7, -4, -2, 1, 2, 5])
def test_other_weights_are_tridiagonal_and_self_adjoint(mu):
    d = casimir_tridiagonal(mu, 6)
    N = d.basis.norms
    for m in range(6):
        # <C W_m, W_{m+1}> = <W_m, C W_{m+1}>
        assert d.alpha[m] * N[m + 1] == d.gamma[m + 1] * N[m]


def test_hahn_operator_symmetry():
    d = casimir_tridiagonal(-1, 10)
    N = d.basis.norms
    for m in range(10):
        assert d.alpha[m] * N[m + 1] == d.gamma[m + 1] * N[m]


def test_hahn_match_reports():
    assert match_hahn_params(casimir_tridiagonal(-1, 20), ODD_PARAMS).passed
    assert match_hahn_params(casimir_tridiagonal(0, 20), EVEN_PARAMS).passed
    bad = match_hahn_params(casimir_tridiagonal(-1, 3), EVEN_PARAMS)
    assert not bad.passed
    assert not bad["m0:alpha"].passed


def test_recurrence_rows():
    rows = casimir_tridiagonal(0, 2).to_rows()
    assert rows[0] == {"m": 0, "alpha": "8/9", "beta": "-2/3", "gamma": "0/1"}


# -- highest weight vectors -------------------------------------------------------
def test_hwv_examples():
    assert solve_hwv(1, 2).a == [1, Fraction(1, 2), Fraction(1, 12)]
    assert solve_hwv(0, 2).a == [1, 1, Fraction(1, 4)]


def test_hwv_residual_is_top_term():
    s = solve_hwv(2, 10)
    assert s.residual == mono((0, 2)) * s.f[10]
    assert s.residual.degrees() == [2 + 40 + 2]
    assert len(s.residual) == 1


@pytest.mark.parametrize("k", [0, 1, 3])
def test_hwv_invariants(k):
    s = solve_hwv(k, 8)
    assert s.a[0] == 1
    for l in range(8):
        assert s.a[l + 1] * (l + k + 1) * (l + 1) == s.a[l]
    for f in s.f:
        assert apply(LH, f) == f.scale(-(3 * k + 1))
    assert hwv_casimir_defect(s).is_zero()


def test_hwv_casimir_defect_is_confined_to_top_band():
    s = solve_hwv(1, 4)
    T = s.truncation()
    lam = Fraction(s.nu**2, 2) - s.nu
    full = apply(casimir_operator(), T) - T.scale(lam)
    assert set(full.degrees()) <= {1 + 16, 1 + 20}


def test_hwv_json():
    s = solve_hwv(1, 2)
    assert json.loads(s.to_json()) == {"k": 1, "L": 2, "a": ["1/1", "1/2", "1/12"]}
    assert isinstance(s, HwvSeries) and s.weight == -4


def test_hwv_partials_examples():
    r = hwv_norm_partials(1, 2)
    assert r.partials[-1] == Fraction(280, 243) == 1 + Fraction(1, 9) + Fraction(10, 243)
    assert r.verdict == "convergent"
    r0 = hwv_norm_partials(0, 0)
    assert r0.partials == [1] and r0.verdict == "divergent"
    assert all(v >= 1 / 9 for v in r0.evidence["doubling_increments"].values())


@pytest.mark.parametrize("k", [1, 2, 3])
def test_hwv_norm_against_gauss_sum(k):
    # independent oracle: mpmath 2F1(1/3, 2/3; k+1; 1) * k!
    ref = float(mpmath.factorial(k) * mpmath.hyp2f1(mpmath.mpf(1) / 3, mpmath.mpf(2) / 3, k + 1, 1))
    assert hwv_norm_closed_form(k) == pytest.approx(ref, rel=1e-13)
    lo, hi = hwv_norm_partials(k, 3).evidence["value_bracket"]
    assert lo - 1e-12 <= ref <= hi + 1e-12


def test_hwv_k1_closed_form_value():
    assert hwv_norm_closed_form(1) == pytest.approx(9 * math.sqrt(3) / (4 * math.pi), rel=1e-14)
    assert math.isinf(hwv_norm_closed_form(0))


def test_tail_bracket_orders():
    lo, hi = hwv_tail_bracket(2, 100, 1e-3)
    assert 0 < lo < hi
    with pytest.raises(ValueError):
        hwv_tail_bracket(0, 10, 1.0)


# -- lowest weight scan, catalog ----------------------------------------------------
def test_no_lws_scan_low_degrees():
    scan = no_lws_scan(1, [mono((0, 2)), mono((1, 1))])
    got = {(el.degree, tuple(el.poly.terms), el.weight) for el in scan.kernel}
    assert got == {(0, ((0, 0),), -1), (1, ((1, 0),), -4), (1, ((0, 1),), 0)}
    assert [ok for _, ok, _ in scan.candidates] == [False, True]


def test_no_lws_scan_to_degree_twelve():
    scan = no_lws_scan(12)
    assert scan.report.passed
    assert max(el.weight for el in scan.kernel) <= 0
    assert len(scan.kernel) == 1 + 2 * 12


def test_discrete_catalog():
    assert [r.weight for r in discrete_components("all", 3)] == [-4, -7, -10]
    assert [r.weight for r in discrete_components("even", 4)] == [-7, -13]
    assert [r.weight for r in discrete_components("odd", 4)] == [-4, -10]
    assert all(r.kind == "highest-weight" for r in discrete_components("all", 20))
    with pytest.raises(ValueError):
        discrete_components("all", 0)


def test_casimir_eigenvalues():
    assert rep_casimir_eigenvalue(ReprDescriptor("principal-even", 1)) == Fraction(-3, 2)
    assert rep_casimir_eigenvalue(ReprDescriptor("highest-weight", 4)) == 4
    assert rep_casimir_eigenvalue(ReprDescriptor("highest-weight", 1)) == Fraction(-1, 2)
    assert rep_casimir_eigenvalue(ReprDescriptor("principal-odd", 0.5)) == -0.75
    assert rep_casimir_eigenvalue(ReprDescriptor("complementary", Fraction(1, 4))) == Fraction(-7, 16)


def test_descriptor_ranges():
    for kind, p in (("complementary", Fraction(1, 2)), ("highest-weight", 0), ("lowest-weight", 2.5), ("principal-even", -1)):
        with pytest.raises(ValueError):
            ReprDescriptor(kind, p)
    assert str(ReprDescriptor("highest-weight", 7)) == "sigma_{-7}"


def test_discrete_eigenvalue_matches_casimir_on_hwv():
    for r in discrete_components("all", 3):
        k = (r.parameter - 1) // 3
        f0 = mono((k, 0))
        s = solve_hwv(k, 3)
        lam = rep_casimir_eigenvalue(r)
        assert apply(casimir_operator(), s.truncation()).homogeneous_part(k) == f0.scale(lam)


# -- generalized eigenfunction ------------------------------------------------------
def test_eigenfunction_trivial_values():
    assert generalized_eigenfunction(2.3, (0.4, 1.1), 0) == 1
    assert generalized_eigenfunction(0.0, (0.0, 0.0), 5) == 1


def test_eigen_residual_exact():
    res = eigen_residual(3, 6)
    assert all(c == 0 for c in res[:6])
    assert res[6] != 0
    res = eigen_residual(Fraction(3, 2), 5)
    assert all(c == 0 for c in res[:5])


def test_eigenfunction_numeric_residual():
    # (-C - (2x^2 + 1/2)) Psi^(M) in the W basis, with float coefficients
    x, M = 1.7, 12
    c = eigenfunction_coefficients(x, M)
    d = casimir_tridiagonal(-1, M)
    # -C = -18 (E+E-/9) - 3/2 on weight -1
    for j in range(M):
        coeff = sum(
            c[m] * float(tri)
            for m, tri in ((j - 1, d.alpha[j - 1] if j else 0), (j, d.beta[j]), (j + 1, d.gamma[j + 1]))
            if m >= 0
        )
        minus_c = -18 * coeff - 1.5 * c[j]
        assert minus_c == pytest.approx((2 * x * x + 0.5) * c[j], rel=1e-9, abs=1e-12)


def test_eigenfunction_polynomial_evaluates_like_numeric():
    x = Fraction(3, 2)
    P = eigenfunction_polynomial(x, 6)
    z = (0.3 + 0.2j, 0.9 - 0.1j)
    assert complex(P.evaluate(z)) == pytest.approx(generalized_eigenfunction(1.5, z, 6), rel=1e-12)


def test_eigenfunction_coefficients_exact():
    c = eigenfunction_coefficients(Fraction(3), 2, exact=True)
    # (x/3)^2 = 1, w_1(1) = 1 - 1/(2/9) = -7/2, N_1 = 9/2
    assert c[:2] == [1, Fraction(-7, 9)]
