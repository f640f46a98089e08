"""Polyharmonic-spline kernel matrices on graph Laplacians.

K = (eps I + L)^(-s), computed from the spectral expansion
sum_k (eps + lambda_k)^(-s) u_k u_k^T.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonPositiveShiftError
from .numerics import check_symmetric, sym_eigen

SHIFT_TOL = 1e-12


@dataclass(frozen=True)
class KernelParams:
    epsilon: float = 0.01
    s: float = 2.0

    def __post_init__(self):
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if self.s <= 0:
            raise ValueError("s must be positive")


def gbf_kernel(L: np.ndarray, p: KernelParams) -> np.ndarray:
    """Positive definite kernel matrix (eps I + L)^(-s) from the spectrum of L."""
    L = np.asarray(L, dtype=np.float64)
    check_symmetric(L)
    eig = sym_eigen(L)
    shift = p.epsilon + eig.values[0]
    if shift <= SHIFT_TOL:
        raise NonPositiveShiftError(float(shift))
    w = (p.epsilon + eig.values) ** (-p.s)
    K = (eig.vectors * w) @ eig.vectors.T
    return (K + K.T) / 2.0
