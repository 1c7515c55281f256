"""Exact and numerical tools for sl(2) acting on the two-variable Fock space."""

from .branching import (
    HwvSeries,
    NormPartials,
    ReprDescriptor,
    TridiagonalData,
    WeightBasis,
    casimir_tridiagonal,
    discrete_components,
    eigen_residual,
    eigenfunction_coefficients,
    generalized_eigenfunction,
    hwv_casimir_defect,
    hwv_norm_partials,
    match_hahn_params,
    no_lws_scan,
    rep_casimir_eigenvalue,
    solve_hwv,
    weight_basis,
)
from .fock import FockPolynomial, inner_product, invariant_I, norm_closed_form, NormFormulaInput
from .hahn import EVEN_PARAMS, ODD_PARAMS, HahnParams, cdh_eval, measure_density, spectrum_report
from .metaplectic import SpElement, casimir_operator, dlambda, principal_sl2, sl2_operators
from .radical import RadicalScalar, sqrt_int
from .weyl import WeylOperator, apply, commutator, compose, formal_adjoint

__version__ = "0.1.0"
