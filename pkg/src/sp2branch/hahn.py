"""Continuous dual Hahn polynomials: evaluation, orthogonality measure, Jacobi spectra.

With parameters ``a >= 0``, ``b, c > 0``::

    w_m(x^2) = 3F2(-m, a+ix, a-ix; a+b, a+c; 1)
    dmu(x)   = |G(a+ix) G(b+ix) G(c+ix) / G(2ix)|^2 / (2 pi G(a+b) G(a+c) G(b+c)) dx
    <w_m, w_l> = m! (b+c)_m / ((a+b)_m (a+c)_m) delta_ml
    -x^2 w_m = A_m w_{m+1} - (A_m + C_m - a^2) w_m + C_m w_{m-1}
    A_m = (m+a+b)(m+a+c),  C_m = m (m+b+c-1)

The rescaled family ``w~_m(x^2) = w_m((x/s)^2)`` (``s = 3`` here) carries the
shift ``d`` used to match Casimir recurrences:
``-(x^2 + d)/s^2 w~_m = A_m w~_{m+1} - (A_m + C_m - a^2 + d/s^2) w~_m + C_m w~_{m-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lgamma, log, pi

import mpmath
import numpy as np

from .fock import pochhammer
from .quadrature import QuadratureError, adaptive_gauss_legendre
from .special import log_abs_gamma
from .tridiag import TridiagonalOperator, eig_tridiag

__all__ = [
    "HahnParams",
    "ODD_PARAMS",
    "EVEN_PARAMS",
    "cdh_eval",
    "cdh_values",
    "measure_density",
    "cumulative_mass",
    "total_mass",
    "tail_cutoff",
    "quadrature_orthogonality",
    "gram_matrix",
    "jacobi_matrix",
    "spectrum_report",
    "SpectrumReport",
    "QuadratureError",
]


@dataclass(frozen=True)
class HahnParams:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction = Fraction(0)
    s: Fraction = Fraction(3)

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "s"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a < 0 or self.b <= 0 or self.c <= 0 or self.s <= 0:
            raise ValueError(f"need a >= 0, b > 0, c > 0, s > 0; got {self}")

    def A(self, m: int) -> Fraction:
        return (m + self.a + self.b) * (m + self.a + self.c)

    def C(self, m: int) -> Fraction:
        return m * (m + self.b + self.c - 1)

    def diag(self, m: int) -> Fraction:
        """Middle coefficient of the shifted recurrence, ``-(A_m + C_m - a^2 + d/s^2)``."""
        return -(self.A(m) + self.C(m) - self.a**2 + self.d / self.s**2)

    def norm_sq(self, m: int) -> Fraction:
        return (
            factorial(m)
            * pochhammer(self.b + self.c, m)
            / (pochhammer(self.a + self.b, m) * pochhammer(self.a + self.c, m))
        )

    def floats(self) -> tuple[float, float, float]:
        return float(self.a), float(self.b), float(self.c)


# the two families that diagonalize the Casimir on weights -1 and 0
ODD_PARAMS = HahnParams(Fraction(0), Fraction(1, 3), Fraction(2, 3), Fraction(1))
EVEN_PARAMS = HahnParams(Fraction(1, 2), Fraction(1, 6), Fraction(5, 6), Fraction(1, 4))


# -- polynomial values ---------------------------------------------------------
def cdh_eval(m: int, y, p: HahnParams, *, exact: bool = False, dps: int = 40):
    """``w_m(y)`` with ``y = x^2`` in the unscaled variable.

    The terminating series has real terms because
    ``(a+ix)_j (a-ix)_j = prod_{r<j} ((a+r)^2 + y)``.  With ``exact=True``,
    ``y`` is converted to a Fraction (floats convert exactly) and the result is
    a Fraction; otherwise the sum is formed at ``dps`` decimal digits and a
    float is returned.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if exact:
        y = Fraction(y)
        a, ab, ac = p.a, p.a + p.b, p.a + p.c
        term, total = Fraction(1), Fraction(1)
        for j in range(m):
            term = term * (j - m) * ((a + j) ** 2 + y) / ((ab + j) * (ac + j) * (j + 1))
            total += term
        return total
    with mpmath.workdps(dps):
        y = mpmath.mpf(y) if not isinstance(y, Fraction) else mpmath.mpf(y.numerator) / y.denominator
        a = mpmath.mpf(p.a.numerator) / p.a.denominator
        ab = a + mpmath.mpf(p.b.numerator) / p.b.denominator
        ac = a + mpmath.mpf(p.c.numerator) / p.c.denominator
        term = mpmath.mpf(1)
        total = mpmath.mpf(1)
        for j in range(m):
            term = term * (j - m) * ((a + j) ** 2 + y) / ((ab + j) * (ac + j) * (j + 1))
            total += term
        return float(total)


def cdh_values(m_max: int, y, p: HahnParams) -> np.ndarray:
    """Array ``V[m, i] = w_m(y_i)`` for ``m <= m_max`` in float64.

    Each row is its own terminating series; rows are not linked by the
    recurrence, so the recurrence can be checked against them.
    """
    y = np.asarray(y, dtype=float)
    a, ab, ac = p.floats()[0], float(p.a + p.b), float(p.a + p.c)
    out = np.empty((m_max + 1,) + y.shape)
    for m in range(m_max + 1):
        term = np.ones_like(y)
        total = np.ones_like(y)
        for j in range(m):
            term = term * ((j - m) * ((a + j) ** 2 + y) / ((ab + j) * (ac + j) * (j + 1)))
            total = total + term
        out[m] = total
    return out


# -- orthogonality measure ---------------------------------------------------------
def _log_norm_const(p: HahnParams) -> float:
    a, b, c = p.floats()
    return -log(2 * pi) - lgamma(a + b) - lgamma(a + c) - lgamma(b + c)


def measure_density(x, p: HahnParams, *, scaled: bool = False):
    """Density of the orthogonality measure at ``x >= 0``.

    For ``a = 0`` the factor ``|G(ix)/G(2ix)|^2`` is evaluated as
    ``4 |G(1+ix)/G(1+2ix)|^2``, which is regular at 0 (limit 4).  For ``a > 0``,
    ``1/|G(2ix)|^2 = 4x^2/|G(1+2ix)|^2`` vanishes at 0.

    ``scaled=True`` gives the density of ``mu~(x) = mu(x/s)`` pushed forward,
    i.e. ``rho(x/s)/s``.
    """
    x = np.asarray(x, dtype=float)
    if scaled:
        s = float(p.s)
        return measure_density(x / s, p) / s
    if np.any(x < 0):
        raise ValueError("density is defined on x >= 0")
    a, b, c = p.floats()
    ix = 1j * x
    logd = _log_norm_const(p) + 2 * (log_abs_gamma(b + ix) + log_abs_gamma(c + ix))
    logd = logd - 2 * log_abs_gamma(1 + 2 * ix)
    if a == 0:
        logd = logd + 2 * log_abs_gamma(1 + ix) + 2 * log(2.0)
        return np.exp(logd)
    with np.errstate(divide="ignore"):
        logd = logd + 2 * log_abs_gamma(a + ix) + np.log(4 * x**2)
    return np.exp(logd)


def tail_cutoff(p: HahnParams, degree: int = 0, target: float = 1e-30, start: float = 60.0) -> tuple[float, float]:
    """Cutoff ``X >= start`` with an estimated tail ``int_X^inf x^(2 degree) dmu < target``.

    Uses the asymptotic form ``rho(x) ~ K x^q exp(-pi x)``, ``q = 2(a+b+c) - 2``,
    with ``K`` read off at ``X``, and ``int_X^inf x^r e^{-pi x} <= X^r e^{-pi X} / (pi - r/X)``.
    Returns ``(X, tail_estimate)``.
    """
    a, b, c = p.floats()
    q = 2 * (a + b + c) - 2
    X = start
    while True:
        rho = float(measure_density(X, p))
        r = q + 2 * degree
        if rho > 0 and pi - r / X > 0.5:
            tail = rho * X ** (2 * degree) / (pi - r / X)
            if tail < target:
                return X, tail
        elif rho == 0.0:
            return X, 0.0
        X *= 1.25


def total_mass(p: HahnParams, X: float | None = None, rtol: float = 1e-14) -> float:
    X = tail_cutoff(p)[0] if X is None else X
    val, _, _ = adaptive_gauss_legendre(lambda x: measure_density(x, p), 0.0, X, rtol=rtol)
    return float(val)


def cumulative_mass(x, p: HahnParams, *, panel: float = 0.25, order: int = 30, X: float | None = None) -> np.ndarray:
    """``mu([0, x])`` for an array of ``x`` (unscaled variable).

    Composite Gauss-Legendre on fixed panels of width ``panel`` up to the
    tail cutoff; the partial last panel uses the same rule mapped onto it.
    """
    x = np.asarray(x, dtype=float)
    X = tail_cutoff(p)[0] if X is None else X
    n_pan = int(np.ceil(X / panel))
    edges = np.arange(n_pan + 1) * panel
    t, w = np.polynomial.legendre.leggauss(order)
    nodes = edges[:-1, None] + 0.5 * panel * (t[None, :] + 1)
    pan_int = (measure_density(nodes, p) * (0.5 * panel * w)[None, :]).sum(axis=1)
    cum = np.concatenate([[0.0], np.cumsum(pan_int)])
    xc = np.clip(x, 0.0, edges[-1])
    k = np.minimum((xc // panel).astype(int), n_pan - 1)
    lo = edges[k]
    half = 0.5 * (xc - lo)
    part_nodes = lo[..., None] + half[..., None] * (t + 1)
    part = (measure_density(part_nodes, p) * w).sum(axis=-1) * half
    return cum[k] + part


def gram_matrix(m_max: int, p: HahnParams, *, atol: float = 1e-12, X: float | None = None):
    """Quadrature Gram matrix ``G[m, l] = int w_m w_l dmu`` for ``m, l <= m_max``.

    The integrand is normalized by the closed-form norms so panel acceptance
    works on a matrix close to the identity with an absolute tolerance.
    """
    if X is None:
        X = tail_cutoff(p, degree=2 * m_max)[0]
    norms = np.array([float(p.norm_sq(m)) for m in range(m_max + 1)])
    inv = 1.0 / np.sqrt(norms)

    def integrand(x):
        V = cdh_values(m_max, x * x, p) * inv[:, None]
        rho = measure_density(x, p)
        return (V[:, None, :] * V[None, :, :]) * rho

    Gn, err, panels = adaptive_gauss_legendre(integrand, 0.0, X, rtol=0.0, atol=atol)
    root = np.sqrt(norms)
    return Gn * np.outer(root, root), err, panels, X


@dataclass
class OrthogonalityResult:
    m: int
    l: int
    quadrature: float
    expected: Fraction
    scale: float
    cutoff: float
    panels: int

    @property
    def rel_error(self) -> float:
        """Error relative to ``N_m`` (diagonal) or ``sqrt(N_m N_l)`` (off-diagonal)."""
        return abs(self.quadrature - float(self.expected)) / self.scale


def quadrature_orthogonality(m: int, l: int, p: HahnParams, *, atol: float = 1e-12) -> OrthogonalityResult:
    """Numerical ``<w_m, w_l>`` together with the closed form."""
    G, _, panels, X = gram_matrix(max(m, l), p, atol=atol)
    expected = p.norm_sq(m) if m == l else Fraction(0)
    scale = float(np.sqrt(float(p.norm_sq(m)) * float(p.norm_sq(l))))
    return OrthogonalityResult(m, l, float(G[m, l]), expected, scale, X, panels)


# -- Jacobi operator and spectra ------------------------------------------------------
def jacobi_matrix(p: HahnParams, N: int) -> TridiagonalOperator:
    """Truncated Jacobi matrix of multiplication by x^2 (unscaled) in the orthonormal basis.

    ``diag_m = A_m + C_m - a^2``, ``offdiag_m = sqrt(A_m C_{m+1})``.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    d = np.array([float(p.A(m) + p.C(m) - p.a**2) for m in range(N)])
    e = np.array([np.sqrt(float(p.A(m) * p.C(m + 1))) for m in range(N - 1)])
    return TridiagonalOperator(d, e)


def casimir_map(theta, p: HahnParams):
    """Unscaled x^2 eigenvalue -> eigenvalue of -C, ``2 s^2 theta + 1/2``.

    ``Lambda(E+)Lambda(E-)`` acts as ``-(s^2 theta + d)``; on weight -1,
    ``-C = -2 E+E- - 3/2`` with d = 1, and on weight 0, ``-C = -2 E+E-`` with
    d = 1/4, so both give the same affine map.
    """
    s2 = float(p.s) ** 2
    return 2.0 * s2 * np.asarray(theta) + 0.5


def gauss_weights(t: TridiagonalOperator) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and squared first eigenvector components (LAPACK)."""
    from scipy.linalg import eigh_tridiagonal

    vals, vecs = eigh_tridiagonal(t.diag, t.offdiag)
    return vals, vecs[0, :] ** 2


def kolmogorov_statistic(points, weights, cdf_at_points, *, convention: str = "sup") -> float:
    """Distance between a discrete measure and a continuous CDF at the atoms.

    ``convention="sup"`` is the usual ``sup_t |F_emp(t) - F(t)|`` (both one-sided
    limits at each atom).  ``convention="mid"`` uses the mid-distribution
    ``F_emp(t-) + w(t)/2`` at each atom, which removes the unavoidable
    half-atom floor; for Gauss rules ``F`` lies between the one-sided limits
    at every node, so the mid value is the natural point comparison.
    """
    order = np.argsort(points)
    w = np.asarray(weights, dtype=float)[order]
    w = w / w.sum()
    F = np.asarray(cdf_at_points, dtype=float)[order]
    right = np.cumsum(w)
    left = right - w
    if convention == "mid":
        return float(np.max(np.abs(0.5 * (left + right) - F)))
    if convention != "sup":
        raise ValueError(f"unknown convention {convention!r}")
    return float(max(np.max(np.abs(right - F)), np.max(np.abs(left - F))))


@dataclass
class SpectrumReport:
    weight: int
    N: int
    params: HahnParams
    theta: np.ndarray
    casimir: np.ndarray
    ks_weighted: float
    ks_weighted_sup: float
    ks_counting: float
    interlacing: bool
    histogram: tuple[np.ndarray, np.ndarray]

    @property
    def min(self) -> float:
        return float(self.casimir.min())

    @property
    def max(self) -> float:
        return float(self.casimir.max())

    @property
    def lambda_parametrization(self) -> np.ndarray:
        """Principal-series parameter with -C = 1/2 + lambda^2."""
        return np.sqrt(np.maximum(self.casimir - 0.5, 0.0))

    @property
    def x_parametrization(self) -> np.ndarray:
        """Scaled Hahn variable with -C = 2 x^2 + 1/2."""
        return np.sqrt(np.maximum(self.casimir - 0.5, 0.0) / 2.0)


def spectrum_report(weight: int, N: int, *, tol: float = 1e-12, bins: int = 50) -> SpectrumReport:
    """Truncated spectrum of -C on weight -1 or 0, via the Hahn Jacobi matrix.

    ``ks_weighted`` compares the spectral measure of the truncation (eigenvalues
    weighted by squared first eigenvector components, i.e. the Gauss rule) with
    the orthogonality measure in the mid-distribution convention;
    ``ks_weighted_sup`` is the plain sup statistic, dominated by the heavy
    lowest atom.  ``interlacing`` records that the measure CDF lies between the
    one-sided empirical limits at every node.  ``ks_counting`` uses uniform
    weights and is reported for reference only; the counting measure of an
    unbounded Jacobi matrix does not approach the orthogonality measure.
    """
    if weight == -1:
        p = ODD_PARAMS
    elif weight == 0:
        p = EVEN_PARAMS
    else:
        raise ValueError("spectrum_report supports weights -1 and 0")
    t = jacobi_matrix(p, N)
    theta = eig_tridiag(t, tol=tol)
    vals, wts = gauss_weights(t)
    cdf = cumulative_mass(np.sqrt(np.maximum(vals, 0.0)), p)
    ks_w = kolmogorov_statistic(vals, wts, cdf, convention="mid")
    ks_sup = kolmogorov_statistic(vals, wts, cdf)
    right = np.cumsum(wts / wts.sum())
    slack = 1e-9
    inter = bool(np.all((cdf >= right - wts / wts.sum() - slack) & (cdf <= right + slack)))
    cdf_theta = cumulative_mass(np.sqrt(np.maximum(theta, 0.0)), p)
    ks_c = kolmogorov_statistic(theta, np.ones_like(theta), cdf_theta)
    cas = casimir_map(theta, p)
    hist = np.histogram(cas, bins=bins)
    return SpectrumReport(weight, N, p, theta, cas, ks_w, ks_sup, ks_c, inter, hist)
