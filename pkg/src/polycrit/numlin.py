"""Dense complex linear algebra kernel.

Matrices are dense square complex128 ndarrays treated as immutable.
Eigen-decompositions are delegated to LAPACK through numpy, which meets
the residual contracts stated here; everything downstream relies on the
contracts, not on the solver internals.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import poly
from .config import TOL
from .errors import NumericalError


def as_matrix(a) -> np.ndarray:
    """Validate and convert to a dense complex matrix."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError("expected a 2-d matrix with positive dimensions")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def as_square(a) -> np.ndarray:
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def frobenius(a) -> float:
    return float(np.linalg.norm(np.asarray(a), "fro"))


def mat_mul(a, b) -> np.ndarray:
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} x {b.shape}")
    return a @ b


def adjoint(a) -> np.ndarray:
    """Conjugate transpose. Involutive exactly: adjoint(adjoint(a)) == a."""
    return as_matrix(a).conj().T


@dataclass(frozen=True)
class EigenResult:
    """Eigenvalues (and optionally unit-norm eigenvector columns)."""

    values: np.ndarray
    vectors: np.ndarray | None = None


def hermitian_eig(a) -> EigenResult:
    """Eigendecomposition of a Hermitian matrix.

    Values are real (stored as complex with zero imaginary part) and
    ascending; eigenvector columns are orthonormal. Rejects inputs whose
    anti-Hermitian part exceeds ``TOL.hermitian_input`` relative to the
    Frobenius norm.
    """
    m = as_square(a)
    dev = frobenius(m - adjoint(m))
    if dev > TOL.hermitian_input * frobenius(m):
        raise ValueError("matrix is not Hermitian within tolerance")
    h = (m + adjoint(m)) / 2.0
    try:
        w, v = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"hermitian eigensolver failed: {exc}") from exc
    return EigenResult(values=w.astype(complex), vectors=v)


def general_eigvals(a) -> np.ndarray:
    """Eigenvalues with multiplicity of a general square matrix.

    Each returned value leaves ``a - lam*I`` with smallest singular value
    at most ``TOL.eigval_residual * ||a||_F``.
    """
    m = as_square(a)
    try:
        return np.linalg.eigvals(m)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigenvalue iteration failed: {exc}") from exc


def char_poly(a) -> poly.Polynomial:
    """Monic characteristic polynomial, reconstructed from the computed
    eigenvalues by root expansion (better conditioned at this scale than
    determinant recursions, which are kept as a test oracle only)."""
    return poly.from_roots(general_eigvals(a))


def principal_submatrix(a, i: int) -> np.ndarray:
    """Delete row and column ``i`` (1-based) from a square matrix of
    order at least 2. Entries are copied exactly."""
    m = as_square(a)
    n = m.shape[0]
    if n < 2:
        raise ValueError("order-1 matrix has no principal submatrix")
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    return np.delete(np.delete(m, i - 1, axis=0), i - 1, axis=1)
