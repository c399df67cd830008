"""wipesim: coherence conservation under rapid environmental dissipation.

A dense-matrix simulator for a principal system whose directly coupled
environmental system is probabilistically replaced by a thermal state,
together with the closed-form qubit-qubit solution and entanglement
observables.
"""

from .analytic import (
    DecoherenceFactors,
    coefficients,
    decoherence_factors,
    eta,
    eta_for,
    f_g_closed,
    log_rate,
    recurrence_oracle,
    threshold,
)
from .config import ScenarioConfig, load_config
from .linalg import (
    adjoint,
    hermitian_eigen,
    matmul,
    partial_trace,
    partial_transpose,
    tensor,
    trace_norm,
    unitary_exp,
)
from .measures import coherence, negativity, negativity_spin_pair
from .models import (
    QubitQubitModel,
    SpinBosonModel,
    TwoSpinTwoModeModel,
    annihilation,
    iz,
    qubit_initial_state,
    qubit_qubit_hamiltonian,
    spin_boson_hamiltonian,
    thermal_state,
    two_spin_hamiltonian,
    two_spin_initial_state,
)
from .scenarios import ResultTable, read_csv, run_scenario, write_csv
from .stepper import SimulationParams, TimeSeries, replacement_weight, run, step

__version__ = "0.1.0"
