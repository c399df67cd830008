"""Render result tables to figure files next to the CSV output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .scenarios import ResultTable

_YLABELS = {
    "factors_curve": r"$r_\pm / c$",
    "qubit_qubit": r"$|\eta(t)|$",
    "spin_boson": r"$|\langle 0|\rho^{[1]}(t)|1\rangle|$",
    "two_spin_negativity": "negativity",
}


def render_table(table: ResultTable, path: str | Path, scenario: str | None = None) -> None:
    """One line per value column against the first (axis) column."""
    x = table.data[:, 0]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for j, name in enumerate(table.columns[1:], start=1):
        ax.plot(x, table.data[:, j], label=name, linewidth=1.2)
    ax.set_xlabel(table.columns[0] if scenario == "factors_curve" else "t [s]")
    ax.set_ylabel(_YLABELS.get(scenario or "", "value"))
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
