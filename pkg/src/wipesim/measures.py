"""Observables recorded along trajectories: coherence and negativity."""

from __future__ import annotations

import numpy as np

from .linalg import DimensionMismatchError, partial_trace, partial_transpose, trace_norm

NEGATIVITY_CLAMP = -1e-10


def coherence(rho1: np.ndarray) -> float:
    """|<0|rho|1>| of a 2x2 density matrix."""
    rho1 = np.asarray(rho1)
    if rho1.shape != (2, 2):
        raise DimensionMismatchError(f"expected a 2x2 matrix, got {rho1.shape}")
    return float(abs(rho1[0, 1]))


def negativity(rho: np.ndarray, dims: tuple[int, int], transpose_side: int = 1) -> float:
    """(||rho^(T_b)||_1 - 1) / 2 across the given bipartition.

    Tiny negative raw values (eigenvalue noise, down to -1e-10) are clamped
    to zero; anything more negative is a genuine error and raises.
    """
    raw = (trace_norm(partial_transpose(rho, dims, transpose_side)) - 1.0) / 2.0
    if raw < NEGATIVITY_CLAMP:
        raise ValueError(f"negativity {raw:.3e} below the numerical-noise floor")
    return max(raw, 0.0)


def principal_coherence(dims: tuple[int, int]):
    """Observable: |<0|Tr_env rho|1>| of the reduced principal qubit."""

    def ob(rho: np.ndarray) -> float:
        return coherence(partial_trace(rho, dims, keep=0))

    return ob


def matrix_element(i: int, j: int):
    """Observable: raw joint-matrix entry (i, j)."""

    def ob(rho: np.ndarray) -> complex:
        return complex(rho[i, j])

    return ob


def negativity_spin_pair(rho_joint: np.ndarray, joint_dims: tuple[int, int]) -> float:
    """Negativity across the spin0|spin1 cut of the reduced two-spin state.

    ``joint_dims`` = (4, env_dim) with the principal factor a pair of qubits.
    """
    if joint_dims[0] != 4:
        raise DimensionMismatchError("principal factor must be a two-qubit system (dim 4)")
    reduced = partial_trace(rho_joint, joint_dims, keep=0)
    return negativity(reduced, (2, 2))


def spin_pair_negativity_observable(joint_dims: tuple[int, int]):
    def ob(rho: np.ndarray) -> float:
        return negativity_spin_pair(rho, joint_dims)

    return ob
