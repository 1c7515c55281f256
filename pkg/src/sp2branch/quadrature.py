"""Adaptive composite Gauss-Legendre quadrature for smooth (vector-valued) integrands."""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss

__all__ = ["QuadratureError", "gauss_legendre", "adaptive_gauss_legendre", "panel_nodes"]


class QuadratureError(RuntimeError):
    """Raised when panel refinement is exhausted before the tolerance is met."""


@lru_cache(maxsize=None)
def _rule(order: int):
    return leggauss(order)


def panel_nodes(a: float, b: float, order: int = 20):
    """Nodes and weights of the ``order``-point rule mapped to [a, b]."""
    t, w = _rule(order)
    half = 0.5 * (b - a)
    return a + half * (t + 1.0), half * w


def gauss_legendre(f, a: float, b: float, order: int = 20):
    x, w = panel_nodes(a, b, order)
    return np.asarray(f(x)) @ w


def adaptive_gauss_legendre(
    f,
    a: float,
    b: float,
    *,
    order: int = 20,
    rtol: float = 1e-13,
    atol: float = 1e-300,
    initial_panels: int = 8,
    max_panels: int = 20000,
):
    """Integrate ``f`` over [a, b].

    ``f`` takes an array of nodes and returns either values of the same shape or
    an array of shape ``(..., len(nodes))``.  A panel is accepted once its
    ``order``-point estimate agrees with the sum over its two halves to
    ``rtol`` relative to the running total (plus ``atol``).

    Returns ``(value, error_estimate, n_panels)``.
    """
    edges = np.linspace(a, b, initial_panels + 1)
    stack = [(edges[i], edges[i + 1]) for i in range(initial_panels)][::-1]

    def est(lo, hi):
        x, w = panel_nodes(lo, hi, order)
        return np.asarray(f(x)) @ w

    cache = {}
    for lo, hi in stack:
        cache[(lo, hi)] = est(lo, hi)
    scale = sum(np.abs(v) for v in cache.values())

    total = 0.0
    err = 0.0
    accepted = 0
    while stack:
        lo, hi = stack.pop()
        whole = cache.pop((lo, hi)) if (lo, hi) in cache else est(lo, hi)
        mid = 0.5 * (lo + hi)
        left, right = est(lo, mid), est(mid, hi)
        gap = np.abs(left + right - whole)
        diff = float(np.max(gap))
        if np.all(gap <= rtol * scale + atol):
            total = total + left + right
            err += diff
            accepted += 1
            continue
        if accepted + len(stack) + 2 > max_panels or hi - lo < 1e-12 * (b - a):
            raise QuadratureError(
                f"adaptive Gauss-Legendre exhausted {max_panels} panels on [{a}, {b}]"
            )
        cache[(mid, hi)] = right
        cache[(lo, mid)] = left
        stack.append((mid, hi))
        stack.append((lo, mid))
    return total, err, accepted
