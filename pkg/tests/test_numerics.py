import math

import mpmath
import numpy as np
import pytest
import scipy.special
from scipy.linalg import eigh_tridiagonal

from sp2branch.quadrature import QuadratureError, adaptive_gauss_legendre, gauss_legendre
from sp2branch.special import log_abs_gamma, loggamma
from sp2branch.tridiag import EigenvalueError, TridiagonalOperator, eig_tridiag, sturm_count


# -- log Gamma ---------------------------------------------------------------------
def test_loggamma_against_scipy_on_a_grid():
    re = np.linspace(0.05, 30, 60)
    im = np.linspace(-120, 120, 81)
    z = (re[:, None] + 1j * im[None, :]).ravel()
    mine = log_abs_gamma(z)
    ref = scipy.special.loggamma(z).real
    assert np.max(np.abs(mine - ref)) < 1e-11


def test_loggamma_near_real_axis_is_relatively_accurate():
    x = np.linspace(0.1, 40, 400)
    ref = scipy.special.gammaln(x)
    mine = log_abs_gamma(x)
    assert np.max(np.abs(mine - ref) / np.maximum(1, np.abs(ref))) < 1e-13


def test_loggamma_exp_matches_mpmath():
    for z in (0.5 + 0.5j, 1 / 3 + 2j, 4.25 - 7j):
        assert abs(np.exp(loggamma(z)) - complex(mpmath.gamma(z))) < 1e-12 * abs(complex(mpmath.gamma(z)))


def test_loggamma_shift_and_poles():
    assert abs(log_abs_gamma(-2.5) - math.log(abs(math.gamma(-2.5)))) < 1e-12
    with pytest.raises(ValueError):
        loggamma(-3.0)
    with pytest.raises(ValueError):
        loggamma(0.0)


# -- quadrature --------------------------------------------------------------------
def test_gauss_legendre_is_exact_on_polynomials():
    assert gauss_legendre(lambda x: x**39, 0.0, 1.0, order=20) == pytest.approx(1 / 40, rel=1e-14)


def test_adaptive_on_a_peaked_integrand():
    val, err, panels = adaptive_gauss_legendre(lambda x: 1 / (1e-4 + x * x), -1, 1, rtol=1e-12)
    assert val == pytest.approx(2 / 1e-2 * math.atan(1 / 1e-2), rel=1e-11)
    assert panels > 8


def test_adaptive_vector_valued():
    val, _, _ = adaptive_gauss_legendre(lambda x: np.stack([np.sin(x), np.cos(x)]), 0, math.pi)
    assert np.allclose(val, [2.0, 0.0], atol=1e-13)


def test_adaptive_raises_when_exhausted():
    with pytest.raises(QuadratureError):
        adaptive_gauss_legendre(lambda x: np.sign(x - 1 / 3), 0, 1, rtol=0, atol=1e-300, max_panels=50)


# -- tridiagonal eigenvalues -------------------------------------------------------
def test_sturm_count_small():
    t = TridiagonalOperator([2.0, 2.0], [1.0])
    assert list(sturm_count(t, [0.5, 1.5, 3.5])) == [0, 1, 2]


@pytest.mark.parametrize("seed", range(5))
def test_eig_against_lapack(seed):
    rng = np.random.default_rng(seed)
    n = 80
    d = rng.normal(size=n) * 10
    e = np.abs(rng.normal(size=n - 1)) * 5
    mine = eig_tridiag(TridiagonalOperator(d, e))
    ref = eigh_tridiagonal(d, e, eigvals_only=True)
    assert np.allclose(mine, ref, atol=1e-10)
    assert np.all(np.diff(mine) >= 0)


def test_eig_two_by_two_quadratic_formula():
    d0, d1, e0 = 1.0, 3.5, 0.75
    t = TridiagonalOperator([d0, d1], [e0])
    tr, det = d0 + d1, d0 * d1 - e0**2
    disc = math.sqrt(tr * tr / 4 - det)
    assert np.allclose(eig_tridiag(t), [tr / 2 - disc, tr / 2 + disc], atol=1e-12)


def test_eig_edge_cases():
    assert eig_tridiag(TridiagonalOperator([], [])).size == 0
    assert list(eig_tridiag(TridiagonalOperator([4.0], []))) == [4.0]
    with pytest.raises(ValueError):
        TridiagonalOperator([1.0, 2.0], [-1.0])
    with pytest.raises(EigenvalueError):
        eig_tridiag(TridiagonalOperator([0.0, 1.0, 5.0], [1.0, 1.0]), tol=0.0, max_iter=3)
