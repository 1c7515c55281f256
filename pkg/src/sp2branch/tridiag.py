"""Symmetric tridiagonal operators and their spectra by Sturm-sequence bisection."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["TridiagonalOperator", "EigenvalueError", "sturm_count", "eig_tridiag"]


class EigenvalueError(RuntimeError):
    pass


@dataclass(frozen=True)
class TridiagonalOperator:
    """Symmetric tridiagonal matrix: ``diag`` of length N, ``offdiag`` of length N-1."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.diag, dtype=float)
        e = np.asarray(self.offdiag, dtype=float)
        if d.ndim != 1 or e.ndim != 1 or len(e) != max(len(d) - 1, 0):
            raise ValueError("offdiag must have length len(diag) - 1")
        if np.any(e < 0):
            raise ValueError("offdiag entries must be nonnegative")
        object.__setattr__(self, "diag", d)
        object.__setattr__(self, "offdiag", e)

    @property
    def size(self) -> int:
        return len(self.diag)

    def truncate(self, n: int) -> TridiagonalOperator:
        return TridiagonalOperator(self.diag[:n], self.offdiag[: max(n - 1, 0)])

    def dense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)

    def gershgorin(self) -> tuple[float, float]:
        r = np.zeros_like(self.diag)
        r[:-1] += self.offdiag
        r[1:] += self.offdiag
        return float(np.min(self.diag - r)), float(np.max(self.diag + r))


def sturm_count(t: TridiagonalOperator, shifts) -> np.ndarray:
    """Number of eigenvalues strictly below each shift (vectorized over shifts)."""
    shifts = np.atleast_1d(np.asarray(shifts, dtype=float))
    d, e2 = t.diag, t.offdiag**2
    tiny = np.finfo(float).tiny ** 0.5
    q = d[0] - shifts
    count = (q < 0).astype(np.int64)
    for i in range(1, len(d)):
        q = np.where(q == 0.0, -tiny, q)
        q = d[i] - shifts - e2[i - 1] / q
        count += q < 0
    return count


def eig_tridiag(t: TridiagonalOperator, tol: float = 1e-12, max_iter: int = 200) -> np.ndarray:
    """All eigenvalues, ascending, by simultaneous bisection on Sturm counts.

    An interval is converged when its width is at most ``tol`` or four units
    in the last place of its endpoints, whichever is larger; below that the
    floating-point Sturm count cannot discriminate further.
    """
    n = t.size
    if n == 0:
        return np.empty(0)
    if n == 1:
        return t.diag.copy()
    lo_b, hi_b = t.gershgorin()
    pad = 2 * np.finfo(float).eps * max(abs(lo_b), abs(hi_b), 1.0)
    lo = np.full(n, lo_b - pad)
    hi = np.full(n, hi_b + pad)
    idx = np.arange(n)
    for _ in range(max_iter):
        width = hi - lo
        floor = 4 * np.spacing(np.maximum(np.abs(lo), np.abs(hi)))
        active = width > np.maximum(tol, floor)
        if not np.any(active):
            return 0.5 * (lo + hi)
        mid = 0.5 * (lo[active] + hi[active])
        below = sturm_count(t, mid)
        # the k-th eigenvalue (0-based) lies below mid iff more than k eigenvalues do
        left = below > idx[active]
        a_idx = np.flatnonzero(active)
        hi[a_idx[left]] = mid[left]
        lo[a_idx[~left]] = mid[~left]
    raise EigenvalueError(f"bisection did not reach tol={tol} within {max_iter} iterations")
