"""Dense complex linear algebra for bipartite open-system simulations.

Convention used throughout: factor 0 is the principal system, factor 1 is
the environment, and the tensor index layout is big-endian (the leftmost
factor varies slowest), i.e. ``tensor(A, B) = A kron B``.
"""

from __future__ import annotations

import numpy as np

HERMITICITY_TOL = 1e-10


class DimensionMismatchError(ValueError):
    """Operands have incompatible dimensions."""


class NonHermitianError(ValueError):
    """A matrix required to be Hermitian is not, within tolerance."""


def _as_square(A: np.ndarray) -> np.ndarray:
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {A.shape}")
    return A


def require_hermitian(A: np.ndarray, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Validate Hermiticity (max absolute entry deviation <= tol)."""
    A = _as_square(A)
    dev = np.max(np.abs(A - A.conj().T))
    if dev > tol:
        raise NonHermitianError(f"max |A - A^dag| = {dev:.3e} exceeds {tol:.1e}")
    return A


def matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    A = _as_square(A)
    B = _as_square(B)
    if A.shape != B.shape:
        raise DimensionMismatchError(f"cannot multiply {A.shape} by {B.shape}")
    return A @ B


def adjoint(A: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return _as_square(A).conj().T


def tensor(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Kronecker product, principal factor on the left."""
    return np.kron(_as_square(A), _as_square(B))


def hermitian_eigen(A: np.ndarray, tol: float = HERMITICITY_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns (eigenvalues ascending, unitary matrix of column eigenvectors).
    """
    A = require_hermitian(A, tol)
    w, V = np.linalg.eigh(A)
    return w, V


def unitary_exp(H: np.ndarray, t: float, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Propagator exp(-i H t) for Hermitian H (H in rad/s, t in s)."""
    w, V = hermitian_eigen(H, tol)
    phases = np.exp(-1j * w * t)
    return (V * phases) @ V.conj().T


def _check_bipartite(A: np.ndarray, dims: tuple[int, int]) -> np.ndarray:
    A = _as_square(A)
    d0, d1 = dims
    if d0 < 1 or d1 < 1 or d0 * d1 != A.shape[0]:
        raise DimensionMismatchError(f"dims {dims} inconsistent with matrix of dim {A.shape[0]}")
    return A.reshape(d0, d1, d0, d1)


def partial_trace(A: np.ndarray, dims: tuple[int, int], keep: int) -> np.ndarray:
    """Trace out one factor of a bipartite matrix; ``keep`` names the survivor."""
    T = _check_bipartite(A, dims)
    if keep == 0:
        return np.einsum("ijkj->ik", T)
    if keep == 1:
        return np.einsum("ijil->jl", T)
    raise DimensionMismatchError(f"keep must be 0 or 1, got {keep}")


def partial_transpose(A: np.ndarray, dims: tuple[int, int], which: int) -> np.ndarray:
    """Transpose the indices of one tensor factor only."""
    T = _check_bipartite(A, dims)
    if which == 0:
        out = T.transpose(2, 1, 0, 3)
    elif which == 1:
        out = T.transpose(0, 3, 2, 1)
    else:
        raise DimensionMismatchError(f"which must be 0 or 1, got {which}")
    d = dims[0] * dims[1]
    return out.reshape(d, d)


def trace_norm(A: np.ndarray, tol: float = HERMITICITY_TOL) -> float:
    """Trace norm of a Hermitian matrix: sum of |eigenvalues|."""
    A = require_hermitian(A, tol)
    return float(np.sum(np.abs(np.linalg.eigvalsh(A))))
