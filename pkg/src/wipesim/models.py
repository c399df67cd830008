"""Initial states, thermal states, and Hamiltonians for the three studied systems.

All frequencies are angular frequencies in rad/s and enter exp(-i H t)
unscaled. Thermal states use the exponent -hbar H / (k_B T) so that a
frequency-valued Hamiltonian yields a dimensionless Boltzmann exponent.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import require_hermitian, tensor

K_B = 1.380649e-23  # J/K
HBAR = 1.054571817e-34  # J*s

THERMAL_TAIL_TOL = 1e-12


def iz() -> np.ndarray:
    """Spin-1/2 z operator diag(1/2, -1/2)."""
    return np.diag([0.5, -0.5]).astype(complex)


def annihilation(n: int) -> np.ndarray:
    """Bosonic annihilation operator on the lowest n Fock levels."""
    if n < 2:
        raise ValueError(f"Fock truncation must be >= 2, got {n}")
    a = np.zeros((n, n), dtype=complex)
    for k in range(n - 1):
        a[k, k + 1] = np.sqrt(k + 1.0)
    return a


def number_operator(n: int) -> np.ndarray:
    return np.diag(np.arange(n, dtype=float)).astype(complex)


def _thermal_tail(nu: float, temperature: float, truncation: int) -> float:
    # occupancy mass of the untruncated geometric distribution at levels >= truncation
    theta = HBAR * nu / (K_B * temperature)
    return float(np.exp(-truncation * theta))


@dataclass(frozen=True)
class QubitQubitModel:
    """Single qubit coupled to a single environmental qubit via c Iz x Iz."""

    a: float
    b: complex
    c: float

    def __post_init__(self):
        if not 0.0 <= self.a <= 1.0:
            raise ValueError(f"population a must lie in [0, 1], got {self.a}")
        bound = np.sqrt(self.a * (1.0 - self.a))
        if abs(self.b) > bound + 1e-12:
            raise ValueError(f"|b| = {abs(self.b)} exceeds sqrt(a(1-a)) = {bound}")


@dataclass(frozen=True)
class SpinBosonModel:
    """Single spin-1/2 linearly coupled to one resonant bosonic mode."""

    nu: float  # rad/s
    temperature: float  # K
    coupling: float  # rad/s
    truncation: int = 8

    def __post_init__(self):
        if self.nu <= 0 or self.temperature <= 0:
            raise ValueError("nu and temperature must be positive")
        if self.truncation < 2:
            raise ValueError("truncation must be >= 2")
        tail = _thermal_tail(self.nu, self.temperature, self.truncation)
        if tail >= THERMAL_TAIL_TOL:
            raise ValueError(
                f"thermal occupancy beyond truncation is {tail:.3e}; "
                f"increase truncation above {self.truncation}"
            )


@dataclass(frozen=True)
class TwoSpinTwoModeModel:
    """Electron-nucleus spin pair, each coupled to its own resonant mode."""

    nu0: float
    nu1: float
    a01: float
    temperature: float
    c0: float
    c1: float
    truncation0: int = 4
    truncation1: int = 4

    def __post_init__(self):
        if min(self.nu0, self.nu1) <= 0 or self.temperature <= 0:
            raise ValueError("frequencies and temperature must be positive")
        for nu, trunc in ((self.nu0, self.truncation0), (self.nu1, self.truncation1)):
            if trunc < 2:
                raise ValueError("truncations must be >= 2")
            tail = _thermal_tail(nu, self.temperature, trunc)
            if tail >= THERMAL_TAIL_TOL:
                raise ValueError(f"thermal occupancy beyond truncation is {tail:.3e}")


def qubit_qubit_hamiltonian(m: QubitQubitModel) -> np.ndarray:
    """H = c Iz x Iz = diag(c/4, -c/4, -c/4, c/4)."""
    return m.c * tensor(iz(), iz())


def qubit_initial_state(m: QubitQubitModel) -> np.ndarray:
    """rho(0) = [[a, b], [b*, 1-a]] tensored with the maximally mixed qubit."""
    rho1 = np.array([[m.a, m.b], [np.conj(m.b), 1.0 - m.a]], dtype=complex)
    return tensor(rho1, np.eye(2, dtype=complex) / 2.0)


def thermal_state(h_env: np.ndarray, temperature: float) -> np.ndarray:
    """Gibbs state exp(-hbar H / (k_B T)) / Z for a frequency-valued H.

    The spectrum is shifted by its minimum before exponentiation; the shift
    cancels in the normalization and prevents overflow.
    """
    if temperature <= 0:
        raise ValueError("temperature must be positive")
    h_env = require_hermitian(h_env)
    w, V = np.linalg.eigh(h_env)
    beta = HBAR / (K_B * temperature)
    weights = np.exp(-beta * (w - w.min()))
    rho = (V * weights) @ V.conj().T / weights.sum()
    return (rho + rho.conj().T) / 2.0


def spin_boson_hamiltonian(m: SpinBosonModel) -> np.ndarray:
    """H = nu Iz x I + I x nu a'a + c Iz x (a' + a)."""
    n = m.truncation
    a = annihilation(n)
    h_spin = m.nu * iz()
    h_env = m.nu * number_operator(n)
    h_c = m.coupling * tensor(iz(), a + a.conj().T)
    return tensor(h_spin, np.eye(n, dtype=complex)) + tensor(np.eye(2, dtype=complex), h_env) + h_c


def spin_boson_env_hamiltonian(m: SpinBosonModel) -> np.ndarray:
    return m.nu * number_operator(m.truncation)


def spin_boson_initial_state(m: SpinBosonModel) -> np.ndarray:
    """Equal-superposition spin state tensored with the thermal mode."""
    plus = np.full((2, 2), 0.5, dtype=complex)
    return tensor(plus, thermal_state(spin_boson_env_hamiltonian(m), m.temperature))


def two_spin_principal_hamiltonian(m: TwoSpinTwoModeModel) -> np.ndarray:
    i2 = np.eye(2, dtype=complex)
    return (
        m.nu0 * tensor(iz(), i2)
        + m.nu1 * tensor(i2, iz())
        + m.a01 * tensor(iz(), iz())
    )


def two_spin_env_hamiltonian(m: TwoSpinTwoModeModel) -> np.ndarray:
    n0, n1 = m.truncation0, m.truncation1
    return m.nu0 * tensor(number_operator(n0), np.eye(n1, dtype=complex)) + m.nu1 * tensor(
        np.eye(n0, dtype=complex), number_operator(n1)
    )


def two_spin_hamiltonian(m: TwoSpinTwoModeModel) -> np.ndarray:
    """Full Hamiltonian on (spin0 x spin1) x (mode0 x mode1)."""
    n0, n1 = m.truncation0, m.truncation1
    i2 = np.eye(2, dtype=complex)
    i_env = np.eye(n0 * n1, dtype=complex)
    a0 = annihilation(n0)
    a1 = annihilation(n1)
    x0 = tensor(a0 + a0.conj().T, np.eye(n1, dtype=complex))
    x1 = tensor(np.eye(n0, dtype=complex), a1 + a1.conj().T)
    h = tensor(two_spin_principal_hamiltonian(m), i_env)
    h += tensor(np.eye(4, dtype=complex), two_spin_env_hamiltonian(m))
    h += m.c0 * tensor(tensor(iz(), i2), x0)
    h += m.c1 * tensor(tensor(i2, iz()), x1)
    return h


def bell_density() -> np.ndarray:
    """(|00> + |11>)(<00| + <11|) / 2."""
    v = np.zeros(4, dtype=complex)
    v[0] = v[3] = 1.0 / np.sqrt(2.0)
    return np.outer(v, v.conj())


def two_spin_initial_state(m: TwoSpinTwoModeModel) -> np.ndarray:
    """Bell pair on the spins tensored with the two-mode thermal state."""
    return tensor(bell_density(), thermal_state(two_spin_env_hamiltonian(m), m.temperature))
