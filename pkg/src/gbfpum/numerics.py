"""Dense symmetric linear algebra: eigendecomposition and SPD solves.

Thin contract layer over LAPACK (via scipy); callers rely on the error
types and tolerances here, not on the backend.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh
from scipy.linalg.lapack import dpotrf, dpotrs

from .errors import NotPositiveDefiniteError, NotSymmetricError

SYM_TOL = 1e-12


@dataclass(frozen=True)
class EigenDecomposition:
    """Full spectrum of a symmetric matrix, eigenvalues ascending."""

    values: np.ndarray
    vectors: np.ndarray  # orthonormal columns, same order as values


def check_symmetric(M: np.ndarray, tol: float = SYM_TOL) -> None:
    M = np.asarray(M, dtype=np.float64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise NotSymmetricError(float("inf"))
    scale = max(1.0, float(np.abs(M).max())) if M.size else 1.0
    asym = float(np.abs(M - M.T).max()) if M.size else 0.0
    if asym > tol * scale:
        raise NotSymmetricError(asym)


def sym_eigen(M: np.ndarray) -> EigenDecomposition:
    """Eigendecomposition of a symmetric matrix, eigenvalues ascending."""
    M = np.asarray(M, dtype=np.float64)
    check_symmetric(M)
    values, vectors = eigh(M)
    return EigenDecomposition(values=values, vectors=vectors)


def spd_solve(M: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve M x = b for symmetric positive definite M via Cholesky."""
    M = np.asarray(M, dtype=np.float64)
    check_symmetric(M)
    b = np.asarray(b, dtype=np.float64)
    c, info = dpotrf(M, lower=1)
    if info != 0:
        raise NotPositiveDefiniteError(pivot=int(info) - 1)
    b2 = b if b.ndim == 2 else b[:, None]
    x, info = dpotrs(c, b2, lower=1)
    if info != 0:
        raise NotPositiveDefiniteError(pivot=int(info) - 1)
    return x if b.ndim == 2 else x[:, 0]
