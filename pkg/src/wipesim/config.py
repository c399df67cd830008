"""Scenario configuration: defaults, flat key=value config files, overrides."""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path

SCENARIOS = ("factors_curve", "qubit_qubit", "spin_boson", "two_spin_negativity")
MODES = ("analytic", "numeric", "both")


class ConfigError(ValueError):
    """Invalid scenario configuration."""


@dataclass(frozen=True)
class ScenarioConfig:
    scenario: str
    p_list: tuple[float, ...] = ()
    tau: float = 0.0
    dt: float = 0.0
    t_max: float = 0.0
    angular_factor: float = 1.0
    record_every: int | None = None
    mode: str = "analytic"
    output_path: str | None = None
    # qubit-qubit
    a: float = 0.5
    b: complex = 0.5 + 0j
    c: float = 1.0e3
    # factors curve
    grid_min: float = 0.0
    grid_max: float = 3.0
    grid_points: int = 601
    # spin-boson
    nu: float = 3.4e10
    temperature: float = 1.0e-3
    coupling: float = 1.0e7
    truncation: int = 8
    # two-spin / two-mode
    nu0: float = 3.4e10
    nu1: float = 4.87e7
    a01: float = 1.0e7
    c0: float = 1.0e7
    c1: float = 1.0e7
    truncation0: int = 4
    truncation1: int = 4

    def validate(self) -> "ScenarioConfig":
        if self.scenario not in SCENARIOS:
            raise ConfigError(f"unknown scenario {self.scenario!r}")
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, got {self.mode!r}")
        for p in self.p_list:
            if not 0.0 <= p <= 1.0:
                raise ConfigError(f"p values must lie in [0, 1], got {p}")
        if self.scenario == "factors_curve":
            if self.grid_points < 2 or self.grid_max <= self.grid_min or self.grid_min < 0:
                raise ConfigError("require grid_min >= 0 < grid_max and grid_points >= 2")
            return self
        if not self.p_list:
            raise ConfigError("p_list must not be empty")
        if self.tau <= 0 or not 0.0 < self.dt <= self.tau:
            raise ConfigError("require tau > 0 and 0 < dt <= tau")
        if self.t_max < self.dt:
            raise ConfigError("require t_max >= dt")
        if self.angular_factor <= 0:
            raise ConfigError("angular_factor must be positive")
        return self


_DEFAULT_P = (0.0, 0.25, 0.5, 0.75, 0.95, 1.0)

DEFAULTS: dict[str, ScenarioConfig] = {
    "factors_curve": ScenarioConfig(scenario="factors_curve", c=1.0),
    "qubit_qubit": ScenarioConfig(
        scenario="qubit_qubit",
        p_list=_DEFAULT_P,
        tau=1.0e-3,
        dt=1.0e-6,
        t_max=1.0e-2,
        c=1.0e3,
        a=0.5,
        b=0.5 + 0j,
        mode="analytic",
    ),
    "spin_boson": ScenarioConfig(
        scenario="spin_boson",
        p_list=(0.0, 0.25, 0.5, 0.75, 0.95, 0.99),
        tau=1.0e-8,
        dt=5.0e-10,
        t_max=4.0e-7,
        nu=3.4e10,
        temperature=1.0e-3,
        coupling=1.0e7,
        truncation=8,
    ),
    "two_spin_negativity": ScenarioConfig(
        scenario="two_spin_negativity",
        p_list=(0.0, 0.25, 0.5, 0.75, 0.95),
        tau=1.0e-8,
        dt=5.0e-10,
        t_max=2.0e-7,
        nu0=3.4e10,
        nu1=4.87e7,
        a01=1.0e7,
        temperature=1.0e-6,
        c0=1.0e7,
        c1=1.0e7,
        truncation0=4,
        truncation1=4,
    ),
}


def _parse_p_list(raw: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in raw.split(",") if tok.strip())
    except ValueError as exc:
        raise ConfigError(f"bad p_list {raw!r}: {exc}") from None


_PARSERS = {
    "p_list": _parse_p_list,
    "tau": float,
    "dt": float,
    "t_max": float,
    "angular_factor": float,
    "record_every": int,
    "mode": str,
    "output_path": str,
    "a": float,
    "b": complex,
    "c": float,
    "grid_min": float,
    "grid_max": float,
    "grid_points": int,
    "nu": float,
    "temperature": float,
    "coupling": float,
    "truncation": int,
    "nu0": float,
    "nu1": float,
    "a01": float,
    "c0": float,
    "c1": float,
    "truncation0": int,
    "truncation1": int,
}


def _apply(cfg: ScenarioConfig, key: str, raw: str, where: str) -> ScenarioConfig:
    parser = _PARSERS.get(key)
    if parser is None:
        raise ConfigError(f"unknown key {key!r} in {where}")
    try:
        value = parser(raw)
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"bad value for {key!r} in {where}: {exc}") from None
    return replace(cfg, **{key: value})


def load_config(
    scenario: str,
    config_path: str | Path | None = None,
    overrides: list[str] | None = None,
) -> ScenarioConfig:
    """Build a validated config: defaults, then config file, then --set overrides."""
    if scenario not in DEFAULTS:
        raise ConfigError(f"unknown scenario {scenario!r}; choose from {SCENARIOS}")
    cfg = DEFAULTS[scenario]
    if config_path is not None:
        path = Path(config_path)
        if not path.is_file():
            raise ConfigError(f"config file not found: {path}")
        for lineno, line in enumerate(path.read_text().splitlines(), start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
            key, raw = (part.strip() for part in line.split("=", 1))
            cfg = _apply(cfg, key, raw, f"{path}:{lineno}")
    for item in overrides or []:
        if "=" not in item:
            raise ConfigError(f"--set expects key=value, got {item!r}")
        key, raw = (part.strip() for part in item.split("=", 1))
        cfg = _apply(cfg, key, raw, "--set")
    return cfg.validate()
