"""Dense complex Hermitian linear algebra kernel.

Everything downstream reduces to factoring a Hermitian positive definite
matrix once and applying its inverse to vectors. LAPACK (via scipy) does
the heavy lifting; this module adds the validation and error reporting
the rest of the package relies on.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import cho_solve
from scipy.linalg.lapack import zpotrf

__all__ = [
    "HermitianFactor",
    "NotSquareError",
    "NotHermitianError",
    "NotPositiveDefiniteError",
    "DimensionMismatchError",
    "hermitian_factor",
    "solve",
    "inner",
    "add_scaled_identity",
]

HERMITIAN_TOL = 1e-10


class NotSquareError(ValueError):
    """Matrix operation requiring a square input got a rectangular one."""


class NotHermitianError(ValueError):
    """Input matrix deviates from its conjugate transpose beyond tolerance."""


class NotPositiveDefiniteError(ValueError):
    """Cholesky factorization hit a non-positive pivot.

    Attributes
    ----------
    pivot : int
        Zero-based index of the failing pivot.
    """

    def __init__(self, pivot: int):
        self.pivot = pivot
        super().__init__(f"matrix is not positive definite (pivot {pivot})")


class DimensionMismatchError(ValueError):
    """Operand dimensions do not agree."""


@dataclass(frozen=True)
class HermitianFactor:
    """Lower-triangular factor L with A = L @ L^H and real positive diagonal."""

    dim: int
    lower: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return self.lower @ self.lower.conj().T


def _as_complex_matrix(a) -> np.ndarray:
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2:
        raise NotSquareError(f"expected a matrix, got ndim={a.ndim}")
    return a


def hermitian_factor(a, tol: float = HERMITIAN_TOL) -> HermitianFactor:
    """Cholesky-factor a Hermitian positive definite matrix.

    The input is checked for Hermitian symmetry (max entrywise asymmetry
    relative to the matrix scale), symmetrized as (A + A^H)/2 to absorb
    rounding noise, and factored as L L^H.

    Raises
    ------
    NotHermitianError
        If the asymmetry exceeds `tol` relative to the largest entry.
    NotPositiveDefiniteError
        If a pivot is not strictly positive; carries the pivot index.
    """
    a = _as_complex_matrix(a)
    n, m = a.shape
    if n != m:
        raise NotSquareError(f"matrix is {n}x{m}")
    scale = max(1.0, float(np.abs(a).max())) if a.size else 1.0
    asym = float(np.abs(a - a.conj().T).max()) if a.size else 0.0
    if asym > tol * scale:
        raise NotHermitianError(
            f"max asymmetry {asym:.3e} exceeds {tol:.1e} * scale {scale:.3e}"
        )
    sym = 0.5 * (a + a.conj().T)
    lower, info = zpotrf(sym, lower=1, clean=1, overwrite_a=0)
    if info > 0:
        raise NotPositiveDefiniteError(pivot=info - 1)
    if info < 0:
        raise ValueError(f"illegal argument {-info} to zpotrf")
    return HermitianFactor(dim=n, lower=lower)


def solve(factor: HermitianFactor, b) -> np.ndarray:
    """Solve A x = b given the factor of A. Returns a new array."""
    b = np.asarray(b, dtype=np.complex128)
    if b.shape[0] != factor.dim:
        raise DimensionMismatchError(
            f"factor dim {factor.dim} vs rhs length {b.shape[0]}"
        )
    x = cho_solve((factor.lower, True), b, check_finite=False)
    if not np.all(np.isfinite(x.view(np.float64))):
        raise ValueError("solve produced non-finite values")
    return x


def inner(a, b) -> complex:
    """Conjugate inner product a^H b (conjugation on the first argument)."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shapes {a.shape} vs {b.shape}")
    return complex(np.vdot(a, b))


def add_scaled_identity(a, alpha: float) -> np.ndarray:
    """Return A + alpha * I without modifying A."""
    a = _as_complex_matrix(a)
    n, m = a.shape
    if n != m:
        raise NotSquareError(f"matrix is {n}x{m}")
    out = a.copy()
    out[np.diag_indices(n)] += alpha
    return out
