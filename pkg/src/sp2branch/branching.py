"""Weight spaces, recurrences and highest weight vectors of the n = 2 Fock space under sl(2).

Weight spaces of Lambda(H) are spanned by ``I^m * extra`` where
``I = z1 z2^3 / (3 sqrt 3)`` and ``extra`` is ``z1^k z2^r`` (``k >= 0``) or
``z2^(r - 3k)`` (``k < 0``), with the weight ``-3k - 1 + r``, ``r in {0, 1, 2}``.
On weights -1 and 0 the operator ``(1/9) Lambda(E+) Lambda(E-)`` is a
three-term recurrence that matches the continuous dual Hahn polynomials;
highest weight vectors exist for weights ``-3k-1`` and are normalizable for
``k >= 1``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Literal, Sequence

import numpy as np

from .fock import (
    INVARIANT_COEFF,
    FockPolynomial,
    NormFormulaInput,
    inner_product,
    monomial_expand_invariant,
    norm_closed_form,
    pochhammer,
)
from .hahn import ODD_PARAMS, HahnParams, cdh_eval
from .metaplectic import casimir_operator, sl2_operators
from .radical import RadicalScalar, sqrt_int
from .report import VerificationReport
from .weyl import WeylOperator, apply, compose

__all__ = [
    "WeightBasis",
    "TridiagonalData",
    "HwvSeries",
    "NormPartials",
    "ReprDescriptor",
    "NonTridiagonalError",
    "weight_decomposition",
    "weight_basis",
    "casimir_tridiagonal",
    "match_hahn_params",
    "solve_hwv",
    "hwv_casimir_defect",
    "hwv_norm_partials",
    "hwv_norm_closed_form",
    "no_lws_scan",
    "discrete_components",
    "rep_casimir_eigenvalue",
    "eigenfunction_coefficients",
    "eigenfunction_polynomial",
    "generalized_eigenfunction",
    "eigen_residual",
]

THIRD = Fraction(1, 3)

# Pochhammer pairs normalizing W_m on the two continuous-spectrum weights
_NORMALIZERS = {-1: (Fraction(1, 3), Fraction(2, 3)), 0: (Fraction(2, 3), Fraction(4, 3))}


class NonTridiagonalError(RuntimeError):
    """The operator image of a basis vector left the span of its neighbours."""


def weight_of(alpha: Sequence[int]) -> int:
    """Lambda(H)-eigenvalue of z1^a1 z2^a2."""
    return -1 - 3 * alpha[0] + alpha[1]


def weight_decomposition(mu: int) -> tuple[int, int, tuple[int, int]]:
    """``(k, r, extra)`` with ``mu = -3k - 1 + r`` and ``extra`` the exponent of the base monomial."""
    r = (mu + 1) % 3
    k = (r - 1 - mu) // 3
    extra = (k, r) if k >= 0 else (0, r - 3 * k)
    return k, r, extra


@dataclass
class WeightBasis:
    weight: int
    k: int
    extra: tuple[int, int]
    entries: list[FockPolynomial]
    norms: list[RadicalScalar]
    normalizer: tuple[Fraction, Fraction] | None = None

    def __len__(self):
        return len(self.entries)


@lru_cache(maxsize=64)
def _weight_basis_cached(mu: int, m_max: int) -> WeightBasis:
    k, _, extra = weight_decomposition(mu)
    norm = _NORMALIZERS.get(mu)
    entries, norms = [], []
    for m in range(m_max + 1):
        v = monomial_expand_invariant(m, extra)
        if norm is not None:
            v = v / (pochhammer(norm[0], m) * pochhammer(norm[1], m))
        entries.append(v)
        norms.append(inner_product(v, v))
    basis = WeightBasis(mu, k, extra, entries, norms, norm)
    LH = sl2_operators(2)[0]
    for m, v in enumerate(entries):
        if apply(LH, v) != v.scale(mu):
            raise AssertionError(f"basis vector {m} is not of weight {mu}")
    # distinct single monomials, so orthogonality reduces to distinct supports
    supports = [next(iter(v.terms)) for v in entries]
    if len(set(supports)) != len(supports):
        raise AssertionError("basis vectors share a monomial")
    return basis


def weight_basis(mu: int, m_max: int) -> WeightBasis:
    """Orthogonal basis ``W_0..W_m_max`` of the weight-``mu`` space.

    For ``mu = -1`` and ``mu = 0`` the vectors carry the normalization
    ``W_m = I^m extra / ((x)_m (y)_m)`` with ``(x, y) = (1/3, 2/3)`` and
    ``(2/3, 4/3)``; other weights use the raw ``I^m extra``.
    """
    if m_max < 0:
        raise ValueError("m_max must be >= 0")
    return _weight_basis_cached(int(mu), int(m_max))


@dataclass
class TridiagonalData:
    """Exact coefficients of ``OP W_m = alpha_m W_{m+1} + beta_m W_m + gamma_m W_{m-1}``."""

    weight: int
    operator: str
    alpha: list[Fraction]
    beta: list[Fraction]
    gamma: list[Fraction]
    basis: WeightBasis

    @property
    def triples(self) -> list[tuple[Fraction, Fraction, Fraction]]:
        return list(zip(self.alpha, self.beta, self.gamma))

    def to_rows(self) -> list[dict]:
        fmt = lambda q: f"{q.numerator}/{q.denominator}"  # noqa: E731
        return [
            {"m": m, "alpha": fmt(a), "beta": fmt(b), "gamma": fmt(g)}
            for m, (a, b, g) in enumerate(self.triples)
        ]


@lru_cache(maxsize=4)
def _hahn_operator() -> WeylOperator:
    _, LEp, LEm = sl2_operators(2)
    return compose(LEp, LEm).scale(Fraction(1, 9))


def casimir_tridiagonal(mu: int, m_max: int) -> TridiagonalData:
    """Tridiagonalize the Casimir action on the weight-``mu`` basis, exactly.

    On ``mu in {-1, 0}`` the reported operator is ``(1/9) Lambda(E+) Lambda(E-)``;
    on other weights it is the full Casimir ``C``.  Each image is expanded by
    exact inner products and the remainder is required to vanish.
    """
    basis = weight_basis(mu, m_max + 1)
    if mu in _NORMALIZERS:
        op, label = _hahn_operator(), "(1/9) E+E-"
    else:
        op, label = casimir_operator(2), "C"
    alpha, beta, gamma = [], [], []
    W, N = basis.entries, basis.norms
    for m in range(m_max + 1):
        img = apply(op, W[m])
        coeffs = {}
        rest = img
        for j in (m - 1, m, m + 1):
            if j < 0:
                coeffs[j] = RadicalScalar()
                continue
            c = inner_product(img, W[j]) / N[j]
            coeffs[j] = c
            rest = rest - W[j].scale(c)
        if not rest.is_zero():
            raise NonTridiagonalError(f"weight {mu}, m={m}: remainder {rest}")
        alpha.append(coeffs[m + 1].as_fraction())
        beta.append(coeffs[m].as_fraction())
        gamma.append(coeffs[m - 1].as_fraction())
    sub = WeightBasis(basis.weight, basis.k, basis.extra, W[: m_max + 1], N[: m_max + 1], basis.normalizer)
    return TridiagonalData(mu, label, alpha, beta, gamma, sub)


def match_hahn_params(data: TridiagonalData, params: HahnParams) -> VerificationReport:
    """Compare tridiagonal data with the shifted Hahn recurrence and norms, exactly.

    ``alpha_m = A_m``, ``gamma_m = C_m``, ``beta_m = -(A_m + C_m - a^2 + d/s^2)``
    and ``||W_m||^2 = m! (b+c)_m / ((a+b)_m (a+c)_m)``.
    """
    p = params
    rep = VerificationReport(
        f"hahn-match weight={data.weight} (a,b,c,d)=({p.a},{p.b},{p.c},{p.d})"
    )
    for m, (al, be, ga) in enumerate(data.triples):
        rep.add(f"m{m}:alpha", f"alpha_{m} = A_{m}", al == p.A(m), p.A(m), al)
        rep.add(f"m{m}:beta", f"beta_{m} = -(A+C-a^2+d/s^2)", be == p.diag(m), p.diag(m), be)
        rep.add(f"m{m}:gamma", f"gamma_{m} = C_{m}", ga == p.C(m), p.C(m), ga)
        nrm = data.basis.norms[m]
        rep.add(f"m{m}:norm", f"||W_{m}||^2 = Hahn norm", nrm == p.norm_sq(m), p.norm_sq(m), nrm)
    return rep


# -- highest weight vectors ---------------------------------------------------------
@dataclass
class HwvSeries:
    """Truncated highest weight vector ``sum_{l<=L} a_l I^l z1^k``."""

    k: int
    L: int
    a: list[Fraction]
    f: list[FockPolynomial]
    residual: FockPolynomial

    @property
    def nu(self) -> int:
        return 3 * self.k + 1

    @property
    def weight(self) -> int:
        return -self.nu

    def truncation(self) -> FockPolynomial:
        out = FockPolynomial.zero(2)
        for fl in self.f:
            out = out + fl
        return out

    def to_json_obj(self) -> dict:
        return {"k": self.k, "L": self.L, "a": [f"{q.numerator}/{q.denominator}" for q in self.a]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def _solve_d1d2(g: FockPolynomial) -> FockPolynomial:
    # particular solution h of sqrt(3) d1 d2 h = g with no (d1 d2)-harmonic part
    s3 = sqrt_int(3)
    terms = {}
    for (p, q), c in g.items():
        terms[(p + 1, q + 1)] = c / (s3 * ((p + 1) * (q + 1)))
    return FockPolynomial(2, terms)


def solve_hwv(k: int, L: int) -> HwvSeries:
    """Solve ``Lambda(E+) f = 0`` from ``f_0 = z1^k`` degree by degree.

    Each step solves ``sqrt(3) d1 d2 f_{l+1} = z2^2 f_l``; the kernel of
    ``d1 d2`` contributes nothing in weight ``-3k-1``.  The solved coefficients
    must equal ``k! / (l! (k+l)!)``; the residual ``Lambda(E+) (f_0 + ... + f_L)``
    is kept exactly and must equal ``z2^2 f_L``.
    """
    if k < 0 or L < 0:
        raise ValueError("k and L must be >= 0")
    z2sq = FockPolynomial.monomial((0, 2))
    f = [FockPolynomial.monomial((k, 0))]
    a = [Fraction(1)]
    for l in range(L):
        nxt = _solve_d1d2(z2sq * f[l])
        mono = (k + l + 1, 3 * (l + 1))
        if set(nxt.terms) != {mono}:
            raise AssertionError(f"step {l + 1} left the weight line: {nxt}")
        coeff = nxt.coeff(mono) / INVARIANT_COEFF ** (l + 1)
        a.append(coeff.as_fraction())
        f.append(nxt)
    for l, al in enumerate(a):
        if al != Fraction(factorial(k), factorial(l) * factorial(k + l)):
            raise AssertionError(f"a_{l} = {al} differs from k!/(l!(k+l)!)")
    _, LEp, _ = sl2_operators(2)
    series = HwvSeries(k, L, a, f, FockPolynomial.zero(2))
    series.residual = apply(LEp, series.truncation())
    if series.residual != z2sq * f[L]:
        raise AssertionError("E+ residual is not the top-band term z2^2 f_L")
    return series


def hwv_casimir_defect(series: HwvSeries) -> FockPolynomial:
    """``(C - (nu^2/2 - nu)) T`` for the truncation T, restricted to interior degrees.

    The truncation error of the series touches only degrees ``k + 4L`` and
    ``k + 4L + 4``; everything below must cancel exactly.
    """
    T = series.truncation()
    lam = Fraction(series.nu**2, 2) - series.nu
    diff = apply(casimir_operator(2), T) - T.scale(lam)
    top = series.k + 4 * series.L
    return diff.restrict(lambda alpha: sum(alpha) < top)


@dataclass
class NormPartials:
    k: int
    L: int
    partials: list[Fraction]
    verdict: Literal["convergent", "divergent"]
    evidence: dict = field(default_factory=dict)

    def rows(self) -> list[dict]:
        return [{"L": i, "S": f"{s.numerator}/{s.denominator}"} for i, s in enumerate(self.partials)]


def _term_ratio(k: int, l: int) -> float:
    # t_{l+1} / t_l for t_l = a_l^2 ||I^l z1^k||^2
    return (l + 2 / 3) * (l + 1 / 3) / ((l + 1) * (l + k + 1))


def _float_partials(k: int, upto: int) -> tuple[list[float], list[float]]:
    t = float(factorial(k))  # t_0 = ||z1^k||^2
    terms = [t]
    for l in range(upto):
        t *= _term_ratio(k, l)
        terms.append(t)
    partial = list(np.cumsum(terms))
    return terms, partial


def hwv_tail_bracket(k: int, L: int, t_next: float) -> tuple[float, float]:
    """Bounds on ``sum_{l > L} t_l`` for ``k >= 1``.

    With ``u_l = t_l (l + beta) / k``, ``u_l - u_{l+1} = t_l * R(l)`` where
    ``R - 1`` is linear in ``l`` with coefficients fixed by ``beta``:
    ``beta >= (k^2+k+2/9)/(k+7/9)`` gives ``R >= 1`` (upper bound) and
    ``beta <= (k^2+k+2/9)/(k+1)`` gives ``R <= 1`` (lower bound).  Since
    ``l t_l -> 0`` for ``k >= 1`` the telescoped sums converge to ``u_{L+1}``.
    """
    if k < 1:
        raise ValueError("tail bracket needs k >= 1")
    num = k * k + k + 2 / 9
    beta_hi = num / (k + 7 / 9)
    beta_lo = num / (k + 1)
    n = L + 1
    return t_next * (n + beta_lo) / k, t_next * (n + beta_hi) / k


def hwv_norm_partials(k: int, L: int, *, tail_L: int = 1 << 15, doublings: int = 9) -> NormPartials:
    """Exact partial sums ``S_0..S_L`` of ``||f||^2`` and a convergence verdict.

    ``S_L = sum_{l<=L} a_l^2 ||I^l z1^k||^2`` with the closed-form norms.

    Verdict for ``k = 0``: ``l t_l`` is nondecreasing, so every doubling
    ``S_{2M} - S_M >= M t_M / 2 >= t_1 / 2 = 1/9``; the increments are computed
    exactly for ``M = 1, 2, 4, ...`` and compared with that floor.
    Verdict for ``k >= 1``: the rigorous tail bracket of :func:`hwv_tail_bracket`
    at ``tail_L`` (floating point) bounds the limit.
    """
    if k < 0 or L < 0:
        raise ValueError("k and L must be >= 0")
    kf = factorial(k)
    terms = []
    for l in range(max(L, 1 << doublings if k == 0 else 0) + 1):
        a_l = Fraction(kf, factorial(l) * factorial(k + l))
        terms.append(a_l * a_l * norm_closed_form(NormFormulaInput(l, k, "z1")).as_fraction())
    partials, s = [], Fraction(0)
    for t in terms:
        s += t
        partials.append(s)
    evidence: dict = {}
    if k == 0:
        floor = Fraction(1, 9)
        incs = {}
        for j in range(doublings):
            M = 1 << j
            incs[M] = partials[2 * M] - partials[M]
        monotone = all((l + 1) * terms[l + 1] >= l * terms[l] for l in range(1, len(terms) - 1))
        evidence = {
            "doubling_increments": {M: float(v) for M, v in incs.items()},
            "floor": float(floor),
            "l_t_l_nondecreasing": monotone,
        }
        ok = monotone and all(v >= floor for v in incs.values())
        verdict = "divergent" if ok else "convergent"
    else:
        ft, fp = _float_partials(k, tail_L)
        lo, hi = hwv_tail_bracket(k, tail_L, ft[-1] * _term_ratio(k, tail_L))
        s_L = math.fsum(ft)
        evidence = {
            "tail_L": tail_L,
            "partial_at_tail_L": s_L,
            "tail_bracket": (lo, hi),
            "value_bracket": (s_L + lo, s_L + hi),
            "value_estimate": s_L + 0.5 * (lo + hi),
        }
        verdict = "convergent"
    return NormPartials(k, L, partials[: L + 1], verdict, evidence)


def hwv_norm_closed_form(k: int) -> float:
    """``||f||^2 = (k!)^2 (k-1)! / (G(k+1/3) G(k+2/3))`` for ``k >= 1`` (Gauss 2F1 at 1)."""
    if k < 1:
        return math.inf
    return math.exp(
        2 * math.lgamma(k + 1) + math.lgamma(k) - math.lgamma(k + 1 / 3) - math.lgamma(k + 2 / 3)
    )


# -- lowest weight scan -------------------------------------------------------------
@dataclass
class KernelElement:
    degree: int
    poly: FockPolynomial
    weight: int


@dataclass
class LwsScan:
    degree_bound: int
    kernel: list[KernelElement]
    candidates: list[tuple[FockPolynomial, bool, str]]
    report: VerificationReport


def _nullspace(matrix: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    # exact reduced row echelon form over Q
    rows = [list(r) for r in matrix]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis


def no_lws_scan(degree_bound: int, candidates: Sequence[FockPolynomial] = ()) -> LwsScan:
    """Kernel of ``d2^2`` on homogeneous polynomials of degree ``<= degree_bound``.

    The lowest-degree part of a solution of ``Lambda(E-) f = 0`` must lie in
    this kernel.  Every kernel element is split into weight vectors and its
    weight recorded; a unitary lowest weight module would need weight ``>= 1``.
    Extra ``candidates`` are tested for membership.
    """
    if degree_bound < 0:
        raise ValueError("degree_bound must be >= 0")
    d22 = WeylOperator.d(2, 1, 2)
    kernel: list[KernelElement] = []
    rep = VerificationReport(f"no-lws degree<={degree_bound}")
    for deg in range(degree_bound + 1):
        monos = [(deg - j, j) for j in range(deg + 1)]
        targets = [(deg - 2 - j, j) for j in range(deg - 1)] if deg >= 2 else []
        tindex = {t: i for i, t in enumerate(targets)}
        mat = [[Fraction(0)] * len(monos) for _ in targets]
        for col, mono in enumerate(monos):
            img = apply(d22, FockPolynomial.monomial(mono))
            for alpha, c in img.items():
                mat[tindex[alpha]][col] = c.as_fraction()
        null = _nullspace(mat, len(monos)) if targets else [
            [Fraction(int(i == j)) for i in range(len(monos))] for j in range(len(monos))
        ]
        for vec in null:
            poly = FockPolynomial(2, {mono: v for mono, v in zip(monos, vec) if v})
            by_weight: dict[int, dict] = {}
            for alpha, c in poly.items():
                by_weight.setdefault(weight_of(alpha), {})[alpha] = c
            for w, terms in sorted(by_weight.items()):
                kernel.append(KernelElement(deg, FockPolynomial(2, terms), w))
    for el in kernel:
        rep.add(
            f"deg{el.degree}:{el.poly!r}",
            "kernel element of d2^2 has weight <= 0",
            el.weight <= 0,
            "<= 0",
            el.weight,
        )
    cand_results = []
    for cnd in candidates:
        low = cnd.homogeneous_part(cnd.degrees()[0]) if not cnd.is_zero() else cnd
        in_kernel = apply(d22, low).is_zero()
        cand_results.append((cnd, in_kernel, "accepted" if in_kernel else "rejected: d2^2 f0 != 0"))
    return LwsScan(degree_bound, kernel, cand_results, rep)


# -- representation catalog ----------------------------------------------------------
Kind = Literal["principal-even", "principal-odd", "complementary", "highest-weight", "lowest-weight"]


@dataclass(frozen=True)
class ReprDescriptor:
    kind: Kind
    parameter: Fraction | float | int

    def __post_init__(self):
        k, p = self.kind, self.parameter
        if k in ("principal-even", "principal-odd"):
            if p < 0:
                raise ValueError("principal series needs lambda >= 0")
        elif k == "complementary":
            if not 0 < p < Fraction(1, 2):
                raise ValueError("complementary series needs lambda in (0, 1/2)")
        elif k in ("highest-weight", "lowest-weight"):
            if p != int(p) or p < 1:
                raise ValueError("discrete series needs an integer nu >= 1")
        else:
            raise ValueError(f"unknown kind {k!r}")

    @property
    def weight(self) -> int | None:
        if self.kind == "highest-weight":
            return -int(self.parameter)
        if self.kind == "lowest-weight":
            return int(self.parameter)
        return None

    def __str__(self):
        if self.kind == "highest-weight":
            return f"sigma_{{{self.weight}}}"
        if self.kind == "lowest-weight":
            return f"sigma_{{+{self.weight}}}"
        sign = {"principal-even": "+", "principal-odd": "-"}.get(self.kind, "c")
        return f"sigma_{{i{self.parameter},{sign}}}"


def discrete_components(parity: Literal["all", "even", "odd"], k_max: int) -> list[ReprDescriptor]:
    """Highest weight components ``sigma_{-(3k+1)}``, ``k = 1..k_max``.

    The highest weight vector ``z1^k sum_l a_l I^l`` has degrees ``k + 4l``,
    so its parity is that of ``k``.  ``k = 0`` never appears: its series has
    infinite norm.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    if parity not in ("all", "even", "odd"):
        raise ValueError(f"unknown parity {parity!r}")
    out = []
    for k in range(1, k_max + 1):
        if parity == "even" and k % 2:
            continue
        if parity == "odd" and not k % 2:
            continue
        out.append(ReprDescriptor("highest-weight", 3 * k + 1))
    return out


def rep_casimir_eigenvalue(r: ReprDescriptor):
    """Eigenvalue of ``C = 2 e+ e- - h + h^2/2``.

    Principal series: ``-1/2 - lambda^2``; complementary series (real
    ``lambda`` in (0, 1/2), i.e. imaginary principal parameter):
    ``-1/2 + lambda^2``; highest/lowest weight ``nu``: ``nu^2/2 - nu``.
    Rational parameters give Fractions.
    """
    p = r.parameter
    if isinstance(p, int):
        p = Fraction(p)
    if r.kind in ("principal-even", "principal-odd"):
        return -Fraction(1, 2) - p * p if isinstance(p, Fraction) else -0.5 - p * p
    if r.kind == "complementary":
        return -Fraction(1, 2) + p * p if isinstance(p, Fraction) else -0.5 + p * p
    return p * p / 2 - p


# -- generalized eigenfunctions on weight -1 ----------------------------------------
def eigenfunction_coefficients(x, M: int, params: HahnParams = ODD_PARAMS, *, exact: bool = False):
    """Coefficients ``c_m = w~_m(x^2) / ||W_m||^2`` of ``W_m`` in ``Psi_x`` up to ``M``.

    ``Psi_x = sum_m e_m(z) e~_m(x^2)`` with ``e_m = W_m/||W_m||`` and
    ``e~_m = w~_m/||w~_m||``; the two norms agree, so the sum is
    ``sum_m W_m w~_m(x^2) / N_m``.  ``x`` is the scaled spectral variable:
    ``-C Psi_x = (2 x^2 + 1/2) Psi_x``.
    """
    if M < 0:
        raise ValueError("M must be >= 0")
    y = (Fraction(x) / params.s) ** 2 if exact else (float(x) / float(params.s)) ** 2
    out = []
    for m in range(M + 1):
        N = params.norm_sq(m)
        w = cdh_eval(m, y, params, exact=exact)
        out.append(w / N if exact else w / float(N))
    return out


def eigenfunction_polynomial(x, M: int) -> FockPolynomial:
    """Exact truncation ``Psi_x^(M)`` for rational ``x`` (weight -1 basis)."""
    coeffs = eigenfunction_coefficients(Fraction(x), M, exact=True)
    W = weight_basis(-1, M).entries
    out = FockPolynomial.zero(2)
    for c, w in zip(coeffs, W):
        out = out + w.scale(c)
    return out


def generalized_eigenfunction(x: float, z: Sequence[complex], M: int) -> complex:
    """Numeric value of the truncated generalized eigenfunction at ``z`` in C^2."""
    coeffs = eigenfunction_coefficients(x, M)
    z1, z2 = complex(z[0]), complex(z[1])
    I = z1 * z2**3 / (3 * math.sqrt(3))
    total = 0j
    Im = 1 + 0j
    for m, c in enumerate(coeffs):
        W = Im / float(pochhammer(THIRD, m) * pochhammer(2 * THIRD, m))
        total += c * W
        Im *= I
    return total


def eigen_residual(x, M: int) -> list[Fraction]:
    """Coefficients of ``(-C - (2x^2 + 1/2)) Psi_x^(M)`` on ``W_0..W_{M+1}``, exact."""
    x = Fraction(x)
    psi = eigenfunction_polynomial(x, M)
    lam = 2 * x * x + Fraction(1, 2)
    res = -apply(casimir_operator(2), psi) - psi.scale(lam)
    basis = weight_basis(-1, M + 1)
    out = []
    for w, n in zip(basis.entries, basis.norms):
        out.append((inner_product(res, w) / n).as_fraction())
    return out
