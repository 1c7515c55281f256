"""Complex log-Gamma by the Lanczos approximation (g = 7, 9 terms)."""

from __future__ import annotations

import numpy as np

__all__ = ["loggamma", "log_abs_gamma"]

_G = 7.0
# partial-fraction coefficients; interpolate Gamma exactly at z = 1..9
_P = np.array([
    0.99999999999980993228,
    676.52036812188509857,
    -1259.1392167224028705,
    771.32342877765307885,
    -176.61502916214059907,
    12.507343278686904814,
    -0.1385710952657201169,
    9.9843695780195708596e-6,
    1.5056327351493115583e-7,
])
_HALF_LOG_2PI = 0.5 * np.log(2.0 * np.pi)


def _lanczos(z):
    # valid for Re z >= 1/2
    z = z - 1.0
    x = np.full_like(z, _P[0])
    for i in range(1, len(_P)):
        x = x + _P[i] / (z + i)
    t = z + _G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * np.log(t) - t + np.log(x)


def loggamma(z):
    """log Gamma(z) for complex ``z`` with ``Re z > 0`` (or any non-pole by shifting).

    Points with ``Re z < 1/2`` are shifted up with ``log G(z) = log G(z+1) - log z``.
    The imaginary part is a branch of arg Gamma, not necessarily the principal one.
    """
    z = np.asarray(z, dtype=complex)
    scalar = z.ndim == 0
    z = np.atleast_1d(z).copy()
    corr = np.zeros_like(z)
    low = z.real < 0.5
    while np.any(low):
        if np.any((z.imag == 0) & (z.real <= 0) & (z.real == np.round(z.real)) & low):
            raise ValueError("loggamma pole at a nonpositive integer")
        corr[low] -= np.log(z[low])
        z[low] += 1.0
        low = z.real < 0.5
    out = _lanczos(z) + corr
    return out[0] if scalar else out


def log_abs_gamma(z):
    """log |Gamma(z)|."""
    return np.real(loggamma(z))
