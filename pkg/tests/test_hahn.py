import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sp2branch.hahn import (
    EVEN_PARAMS,
    ODD_PARAMS,
    HahnParams,
    casimir_map,
    cdh_eval,
    cdh_values,
    cumulative_mass,
    gram_matrix,
    jacobi_matrix,
    kolmogorov_statistic,
    measure_density,
    quadrature_orthogonality,
    spectrum_report,
    tail_cutoff,
    total_mass,
)
from sp2branch.tridiag import eig_tridiag

PARAMS = (ODD_PARAMS, EVEN_PARAMS)


def mp_density(x, p):
    a, b, c = (mpmath.mpf(v.numerator) / v.denominator for v in (p.a, p.b, p.c))
    ix = 1j * mpmath.mpf(x)
    num = mpmath.gamma(a + ix) * mpmath.gamma(b + ix) * mpmath.gamma(c + ix) / mpmath.gamma(2 * ix)
    return abs(num) ** 2 / (2 * mpmath.pi * mpmath.gamma(a + b) * mpmath.gamma(a + c) * mpmath.gamma(b + c))


def mp_cdh(m, y, p):
    a, b, c = (mpmath.mpf(v.numerator) / v.denominator for v in (p.a, p.b, p.c))
    x = mpmath.sqrt(y)
    return mpmath.re(mpmath.hyp3f2(-m, a + 1j * x, a - 1j * x, a + b, a + c, 1))


@pytest.mark.parametrize("p", PARAMS)
@pytest.mark.parametrize("m", [0, 1, 3, 7, 12])
def test_cdh_eval_matches_hypergeometric(p, m):
    for y in (0.0, 0.3, 2.5, 40.0):
        ref = float(mp_cdh(m, y, p))
        assert cdh_eval(m, y, p) == pytest.approx(ref, rel=1e-12, abs=1e-12)


def test_cdh_first_degree_closed_form():
    for p in PARAMS:
        for y in (Fraction(0), Fraction(1, 4), Fraction(7)):
            expected = 1 - (p.a**2 + y) / ((p.a + p.b) * (p.a + p.c))
            assert cdh_eval(1, y, p, exact=True) == expected


def test_cdh_values_matches_scalar_path():
    y = np.array([0.0, 0.7, 3.0])
    V = cdh_values(6, y, ODD_PARAMS)
    for m in range(7):
        for i, yi in enumerate(y):
            assert V[m, i] == pytest.approx(cdh_eval(m, yi, ODD_PARAMS), rel=1e-11, abs=1e-12)


@pytest.mark.parametrize("p", PARAMS)
def test_density_matches_mpmath(p):
    for x in (1e-3, 0.2, 1.0, 4.5, 15.0):
        assert measure_density(x, p) == pytest.approx(float(mp_density(x, p)), rel=1e-11)


def test_density_limit_at_zero():
    assert measure_density(0.0, ODD_PARAMS) == pytest.approx(4 / math.sqrt(3), rel=1e-13)
    assert measure_density(0.0, EVEN_PARAMS) == 0.0
    assert measure_density(1e-9, ODD_PARAMS) == pytest.approx(4 / math.sqrt(3), rel=1e-9)


def test_scaled_density_is_a_pushforward():
    x = np.array([0.3, 1.2, 6.0])
    assert np.allclose(measure_density(x, ODD_PARAMS, scaled=True), measure_density(x / 3, ODD_PARAMS) / 3)


def test_density_rejects_negative():
    with pytest.raises(ValueError):
        measure_density(-1.0, ODD_PARAMS)


@pytest.mark.parametrize("p", PARAMS)
def test_total_mass(p):
    assert abs(total_mass(p) - 1) <= 1e-10


def test_tail_is_negligible_beyond_cutoff():
    X, _ = tail_cutoff(ODD_PARAMS)
    assert measure_density(X, ODD_PARAMS) < 1e-28


def test_orthogonality_examples():
    r = quadrature_orthogonality(1, 1, ODD_PARAMS)
    assert r.expected == Fraction(9, 2) and r.rel_error < 1e-10
    r = quadrature_orthogonality(2, 2, EVEN_PARAMS)
    assert r.expected == Fraction(81, 70) and r.rel_error < 1e-10
    r = quadrature_orthogonality(3, 5, ODD_PARAMS)
    assert r.expected == 0 and r.rel_error < 1e-10


@pytest.mark.parametrize("p", PARAMS)
def test_gram_matrix(p):
    G, _, _, _ = gram_matrix(10, p)
    N = np.array([float(p.norm_sq(m)) for m in range(11)])
    assert np.max(np.abs(G - np.diag(N)) / np.sqrt(np.outer(N, N))) < 1e-8


def test_norms_against_pochhammer_formula():
    assert ODD_PARAMS.norm_sq(1) == Fraction(9, 2)
    assert EVEN_PARAMS.norm_sq(2) == Fraction(81, 70)


def test_cumulative_mass_is_a_cdf():
    x = np.linspace(0, 40, 81)
    F = cumulative_mass(x, ODD_PARAMS)
    assert F[0] == 0.0 and np.all(np.diff(F) >= 0) and abs(F[-1] - 1) < 1e-12
    ref = mpmath.quad(lambda t: mp_density(t, ODD_PARAMS), [0, 0.5, 1.3])
    assert cumulative_mass(1.3, ODD_PARAMS) == pytest.approx(float(ref), rel=1e-12)


def test_jacobi_matrix_small():
    t = jacobi_matrix(ODD_PARAMS, 1)
    assert t.diag.tolist() == pytest.approx([2 / 9])
    t = jacobi_matrix(ODD_PARAMS, 2)
    assert t.offdiag[0] == pytest.approx(math.sqrt(2) / 3)
    d0, d1, e0 = t.diag[0], t.diag[1], t.offdiag[0]
    disc = math.sqrt(((d0 - d1) / 2) ** 2 + e0**2)
    assert np.allclose(eig_tridiag(t), [(d0 + d1) / 2 - disc, (d0 + d1) / 2 + disc], atol=1e-12)


def test_jacobi_matrix_encodes_the_recurrence():
    # x^2 w_m = -(A_m w_{m+1} - (A_m + C_m - a^2) w_m + C_m w_{m-1}) in the monic normalization
    p = EVEN_PARAMS
    y = 1.7
    w = [cdh_eval(m, y, p) for m in range(8)]
    for m in range(1, 7):
        lhs = -y * w[m]
        rhs = float(p.A(m)) * w[m + 1] - float(p.A(m) + p.C(m) - p.a**2) * w[m] + float(p.C(m)) * w[m - 1]
        assert lhs == pytest.approx(rhs, rel=1e-10)


def test_casimir_map():
    assert casimir_map(0.0, ODD_PARAMS) == 0.5
    assert casimir_map(1.0, EVEN_PARAMS) == 18.5


@pytest.mark.parametrize("weight", [-1, 0])
def test_spectrum_lower_bound_and_trend(weight):
    mins = []
    for N in (100, 200, 400, 800):
        r = spectrum_report(weight, N)
        assert r.min >= 0.5 - 1e-6
        mins.append(r.min)
    assert all(b < a for a, b in zip(mins, mins[1:]))
    r = spectrum_report(weight, 500)
    assert r.min >= 0.5 - 1e-6 and r.interlacing
    assert np.allclose(r.lambda_parametrization**2 + 0.5, r.casimir)
    assert np.allclose(2 * r.x_parametrization**2 + 0.5, r.casimir)


def test_spectrum_rejects_other_weights():
    with pytest.raises(ValueError):
        spectrum_report(2, 10)


def test_kolmogorov_conventions():
    pts = np.array([0.0, 1.0])
    w = np.array([0.5, 0.5])
    F = np.array([0.25, 0.75])
    assert kolmogorov_statistic(pts, w, F, convention="mid") == 0.0
    assert kolmogorov_statistic(pts, w, F) == 0.25
    with pytest.raises(ValueError):
        kolmogorov_statistic(pts, w, F, convention="median")


def test_hahn_params_custom():
    p = HahnParams(Fraction(1), Fraction(1), Fraction(1))
    assert p.A(0) == 4 and p.C(0) == 0 and p.C(2) == 2 * 3


@settings(max_examples=30, deadline=None)
@given(st.floats(0.01, 20.0), st.integers(1, 30), st.sampled_from(PARAMS), st.booleans())
def test_recurrence_identity_random(x, m, p, scaled):
    s = float(p.s) if scaled else 1.0
    y = (x / s) ** 2
    w = [cdh_eval(j, y, p) for j in (m - 1, m, m + 1)]
    A, C, a2 = float(p.A(m)), float(p.C(m)), float(p.a**2)
    shift = float(p.d) / s**2 if scaled else 0.0
    lhs = -(x * x / s**2 + shift) * w[1]
    rhs = A * w[2] - (A + C - a2 + shift) * w[1] + C * w[0]
    size = abs(A * w[2]) + abs((A + C - a2 + shift) * w[1]) + abs(C * w[0]) + abs(lhs)
    assert abs(lhs - rhs) <= 1e-10 * size


@pytest.mark.parametrize("p", PARAMS)
def test_truncations_interlace_and_stay_nonnegative(p):
    small = eig_tridiag(jacobi_matrix(p, 10))
    big = eig_tridiag(jacobi_matrix(p, 11))
    assert np.all(big[:-1] <= small + 1e-9) and np.all(small <= big[1:] + 1e-9)
    assert eig_tridiag(jacobi_matrix(p, 300)).min() >= -1e-9


def test_spectrum_histogram_counts_everything():
    r = spectrum_report(-1, 120, bins=10)
    counts, edges = r.histogram
    assert counts.sum() == 120 and len(edges) == 11
