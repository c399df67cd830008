"""Discrete-time evolution: unitary conjugation plus probabilistic
replacement of the environmental factor by a fixed thermal state.

Each step maps

    rho -> U [ w rho + (1 - w) Tr_env(rho) (x) sigma ] U^dag

with w = (1-p)^(dt/tau). The map is CPTP; the trace is asserted, never
renormalized, and a drift beyond 1e-9 aborts the run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from .linalg import (
    DimensionMismatchError,
    partial_trace,
    require_hermitian,
    tensor,
    unitary_exp,
)

TRACE_DRIFT_ABORT = 1e-9
MAX_SAMPLES = 4001

Observable = Callable[[np.ndarray], complex]


class TraceDriftError(RuntimeError):
    """The simulated trace drifted beyond the integrity bound."""


@dataclass(frozen=True)
class SimulationParams:
    p: float
    tau: float
    dt: float
    steps: int
    record_every: int | None = None

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        if self.tau <= 0 or not 0.0 < self.dt <= self.tau:
            raise ValueError("require tau > 0 and 0 < dt <= tau")
        if self.steps < 0:
            raise ValueError("steps must be nonnegative")
        if self.record_every is not None and self.record_every < 1:
            raise ValueError("record_every must be >= 1")

    @property
    def effective_record_every(self) -> int:
        if self.record_every is not None:
            return self.record_every
        return max(1, math.ceil((self.steps + 1) / MAX_SAMPLES))


@dataclass
class TimeSeries:
    times: np.ndarray
    values: dict[str, np.ndarray] = field(default_factory=dict)


def replacement_weight(p: float, tau: float, dt: float) -> float:
    """Per-step environment survival weight (1-p)^(dt/tau); exactly 0 at p=1."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if tau <= 0 or dt <= 0:
        raise ValueError("tau and dt must be positive")
    if p == 1.0:
        return 0.0
    return (1.0 - p) ** (dt / tau)


def step(
    rho: np.ndarray,
    propagator: np.ndarray,
    sigma: np.ndarray,
    weight: float,
    dims: tuple[int, int],
) -> np.ndarray:
    """One replacement-then-conjugation step of the evolution map."""
    if weight < 1.0:
        reduced = partial_trace(rho, dims, keep=0)
        mixed = weight * rho + (1.0 - weight) * tensor(reduced, sigma)
    else:
        mixed = rho
    return propagator @ mixed @ propagator.conj().T


def run(
    hamiltonian: np.ndarray,
    rho0: np.ndarray,
    sigma: np.ndarray,
    params: SimulationParams,
    observables: Mapping[str, Observable],
    dims: tuple[int, int],
) -> TimeSeries:
    """Deterministic trajectory of the replacement channel.

    Records every observable each ``record_every`` steps, including t=0.
    The propagator exp(-i H dt) is computed once (H is time-independent).
    """
    rho0 = np.asarray(rho0, dtype=complex)
    d0, d1 = dims
    if d0 * d1 != rho0.shape[0]:
        raise DimensionMismatchError(f"dims {dims} inconsistent with state dim {rho0.shape[0]}")
    if sigma.shape != (d1, d1):
        raise DimensionMismatchError(f"sigma must be {d1}x{d1}, got {sigma.shape}")
    require_hermitian(hamiltonian)

    propagator = unitary_exp(hamiltonian, params.dt)
    weight = replacement_weight(params.p, params.tau, params.dt)
    every = params.effective_record_every

    trace0 = float(np.trace(rho0).real)
    times: list[float] = []
    records: dict[str, list[complex]] = {name: [] for name in observables}

    def record(m: int, rho: np.ndarray) -> None:
        times.append(m * params.dt)
        for name, ob in observables.items():
            records[name].append(ob(rho))

    # inlined step(): same arithmetic, without per-call validation overhead
    u = propagator
    ud = propagator.conj().T
    sigma_bc = sigma[np.newaxis, :, np.newaxis, :]
    replace_env = weight < 1.0

    rho = rho0
    record(0, rho)
    for m in range(1, params.steps + 1):
        if replace_env:
            reduced = rho.reshape(d0, d1, d0, d1).trace(axis1=1, axis2=3)
            mixed = weight * rho + (1.0 - weight) * (
                reduced[:, np.newaxis, :, np.newaxis] * sigma_bc
            ).reshape(rho.shape)
        else:
            mixed = rho
        rho = u @ mixed @ ud
        drift = abs(float(np.trace(rho).real) - trace0)
        if drift > TRACE_DRIFT_ABORT:
            raise TraceDriftError(f"trace drifted by {drift:.3e} at step {m}")
        if m % every == 0:
            record(m, rho)

    return TimeSeries(
        times=np.asarray(times),
        values={name: np.asarray(vals) for name, vals in records.items()},
    )
