"""Named scenarios reproducing the studied figures, plus CSV tables.

Each scenario returns a ResultTable; trajectories for distinct p values
are independent and may run on a small thread pool (``WIPE_SIM_THREADS``),
with columns always merged in p_list order.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from . import analytic, measures, models, stepper
from .config import ConfigError, ScenarioConfig

CSV_FORMAT = "{:.11e}"


@dataclass(frozen=True)
class ResultTable:
    columns: tuple[str, ...]
    data: np.ndarray  # shape (rows, len(columns))

    def __post_init__(self):
        if self.data.ndim != 2 or self.data.shape[1] != len(self.columns):
            raise ValueError("data shape inconsistent with column headers")

    def column(self, name: str) -> np.ndarray:
        return self.data[:, self.columns.index(name)]


def write_csv(table: ResultTable, path: str | Path) -> None:
    """12-significant-digit scientific notation, LF line endings."""
    lines = [",".join(table.columns)]
    for row in table.data:
        lines.append(",".join(CSV_FORMAT.format(v) for v in row))
    Path(path).write_text("\n".join(lines) + "\n", newline="\n")


def read_csv(path: str | Path) -> ResultTable:
    lines = Path(path).read_text().splitlines()
    columns = tuple(lines[0].split(","))
    data = np.array([[float(tok) for tok in line.split(",")] for line in lines[1:]])
    return ResultTable(columns=columns, data=data)


def _p_label(p: float) -> str:
    return f"p={p:g}"


def _thread_count() -> int:
    raw = os.environ.get("WIPE_SIM_THREADS", "")
    try:
        return max(1, int(raw)) if raw else 1
    except ValueError:
        return 1


def sweep(p_list: Sequence[float], trajectory: Callable[[float], np.ndarray]) -> list[np.ndarray]:
    """Run one trajectory per p, merged in p_list order."""
    if not p_list:
        raise ConfigError("p_list must not be empty")

    def call(p: float):
        try:
            return trajectory(p)
        except Exception as exc:
            # identify the failing trajectory without changing the error type
            exc.args = (f"trajectory p={p:g}: {exc}",)
            raise

    n = _thread_count()
    if n == 1:
        return [call(p) for p in p_list]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(call, p_list))


def _grid_steps(cfg: ScenarioConfig) -> stepper.SimulationParams:
    steps = int(round(cfg.t_max / cfg.dt))
    return stepper.SimulationParams(
        p=0.0, tau=cfg.tau, dt=cfg.dt, steps=steps, record_every=cfg.record_every
    )


def run_factors_curve(cfg: ScenarioConfig) -> ResultTable:
    """Decoherence factors r+/- against -ln(x)/c on a uniform grid."""
    ys = np.linspace(cfg.grid_min, cfg.grid_max, cfg.grid_points)
    c = cfg.c
    rows = np.empty((len(ys), 5))
    for i, y in enumerate(ys):
        r = analytic.decoherence_factors(-y * c, c)
        rows[i] = (y, r.r_plus.real / c, r.r_minus.real / c, r.r_plus.imag / c, r.r_minus.imag / c)
    return ResultTable(
        columns=("neg_ln_x_over_c", "re_r_plus_over_c", "re_r_minus_over_c",
                 "im_r_plus_over_c", "im_r_minus_over_c"),
        data=rows,
    )


def _qubit_times(cfg: ScenarioConfig) -> np.ndarray:
    params = _grid_steps(cfg)
    every = params.effective_record_every
    ms = np.arange(0, params.steps + 1, every)
    return ms * cfg.dt


def qubit_qubit_numeric(cfg: ScenarioConfig, p: float) -> np.ndarray:
    """|coherence| trajectory of the qubit-qubit model from the matrix stepper."""
    c = cfg.c * cfg.angular_factor
    model = models.QubitQubitModel(a=cfg.a, b=cfg.b, c=c)
    h = models.qubit_qubit_hamiltonian(model)
    rho0 = models.qubit_initial_state(model)
    sigma = np.eye(2, dtype=complex) / 2.0
    params = stepper.SimulationParams(
        p=p, tau=cfg.tau, dt=cfg.dt,
        steps=int(round(cfg.t_max / cfg.dt)), record_every=cfg.record_every,
    )
    series = stepper.run(
        h, rho0, sigma, params,
        {"coherence": measures.principal_coherence((2, 2))}, dims=(2, 2),
    )
    return np.abs(series.values["coherence"].real)


def qubit_qubit_analytic(cfg: ScenarioConfig, p: float, times: np.ndarray) -> np.ndarray:
    c = cfg.c * cfg.angular_factor
    return np.array([abs(analytic.eta_for(t, cfg.b, p, cfg.tau, c)) for t in times])


def run_qubit_qubit(cfg: ScenarioConfig) -> ResultTable:
    """|eta(t)| per p from the closed form and/or the matrix stepper."""
    times = _qubit_times(cfg)
    columns: list[str] = ["t"]
    data: list[np.ndarray] = [times]
    if cfg.mode in ("analytic", "both"):
        for p, col in zip(
            cfg.p_list, sweep(cfg.p_list, lambda p: qubit_qubit_analytic(cfg, p, times))
        ):
            columns.append(_p_label(p) if cfg.mode == "analytic" else f"analytic:{_p_label(p)}")
            data.append(col)
    if cfg.mode in ("numeric", "both"):
        for p, col in zip(cfg.p_list, sweep(cfg.p_list, lambda p: qubit_qubit_numeric(cfg, p))):
            columns.append(_p_label(p) if cfg.mode == "numeric" else f"numeric:{_p_label(p)}")
            data.append(col)
    return ResultTable(columns=tuple(columns), data=np.column_stack(data))


def spin_boson_trajectory(cfg: ScenarioConfig, p: float) -> stepper.TimeSeries:
    f = cfg.angular_factor
    model = models.SpinBosonModel(
        nu=cfg.nu * f, temperature=cfg.temperature,
        coupling=cfg.coupling * f, truncation=cfg.truncation,
    )
    h = models.spin_boson_hamiltonian(model)
    rho0 = models.spin_boson_initial_state(model)
    sigma = models.thermal_state(models.spin_boson_env_hamiltonian(model), model.temperature)
    dims = (2, model.truncation)
    params = stepper.SimulationParams(
        p=p, tau=cfg.tau, dt=cfg.dt,
        steps=int(round(cfg.t_max / cfg.dt)), record_every=cfg.record_every,
    )
    return stepper.run(
        h, rho0, sigma, params, {"coherence": measures.principal_coherence(dims)}, dims=dims
    )


def run_spin_boson(cfg: ScenarioConfig) -> ResultTable:
    """Reduced-spin coherence per p for the spin-boson model."""
    series = sweep(cfg.p_list, lambda p: spin_boson_trajectory(cfg, p))
    columns = ("t",) + tuple(_p_label(p) for p in cfg.p_list)
    data = np.column_stack([series[0].times] + [s.values["coherence"].real for s in series])
    return ResultTable(columns=columns, data=data)


def two_spin_trajectory(cfg: ScenarioConfig, p: float) -> stepper.TimeSeries:
    f = cfg.angular_factor
    model = models.TwoSpinTwoModeModel(
        nu0=cfg.nu0 * f, nu1=cfg.nu1 * f, a01=cfg.a01 * f,
        temperature=cfg.temperature, c0=cfg.c0 * f, c1=cfg.c1 * f,
        truncation0=cfg.truncation0, truncation1=cfg.truncation1,
    )
    h = models.two_spin_hamiltonian(model)
    rho0 = models.two_spin_initial_state(model)
    sigma = models.thermal_state(models.two_spin_env_hamiltonian(model), model.temperature)
    dims = (4, model.truncation0 * model.truncation1)
    params = stepper.SimulationParams(
        p=p, tau=cfg.tau, dt=cfg.dt,
        steps=int(round(cfg.t_max / cfg.dt)), record_every=cfg.record_every,
    )
    return stepper.run(
        h, rho0, sigma, params,
        {"negativity": measures.spin_pair_negativity_observable(dims)}, dims=dims,
    )


def run_two_spin_negativity(cfg: ScenarioConfig) -> ResultTable:
    """Spin-pair negativity per p for the two-spin/two-mode model."""
    series = sweep(cfg.p_list, lambda p: two_spin_trajectory(cfg, p))
    columns = ("t",) + tuple(_p_label(p) for p in cfg.p_list)
    data = np.column_stack([series[0].times] + [s.values["negativity"].real for s in series])
    return ResultTable(columns=columns, data=data)


RUNNERS: dict[str, Callable[[ScenarioConfig], ResultTable]] = {
    "factors_curve": run_factors_curve,
    "qubit_qubit": run_qubit_qubit,
    "spin_boson": run_spin_boson,
    "two_spin_negativity": run_two_spin_negativity,
}


def run_scenario(cfg: ScenarioConfig) -> ResultTable:
    return RUNNERS[cfg.scenario](cfg)
