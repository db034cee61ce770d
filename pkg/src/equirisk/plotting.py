"""Figures written next to the tabular reports.

Figures are built on :class:`matplotlib.figure.Figure` directly so nothing
touches pyplot's global state or needs a display.
"""

from __future__ import annotations

import os
from collections.abc import Sequence

import matplotlib
import numpy as np
from matplotlib.figure import Figure

from equirisk.analysis import Sensitivities, SweepRow
from equirisk.domain import ProblemInstance, Solution

# drop timestamps and version strings so reruns write identical files
_METADATA = {
    ".png": {"Software": None},
    ".svg": {"Date": None, "Creator": None},
    ".pdf": {"CreationDate": None, "Creator": None, "Producer": None},
}


def _save(fig: Figure, path: str | os.PathLike) -> None:
    fig.tight_layout()
    metadata = _METADATA.get(os.path.splitext(os.fspath(path))[1].lower())
    with matplotlib.rc_context({"svg.hashsalt": "equirisk"}):
        fig.savefig(path, dpi=120, metadata=metadata)


def plot_solution(instance: ProblemInstance, solution: Solution, path: str | os.PathLike) -> None:
    """Funded volume against required volume, per project."""
    ids = instance.ids
    x = np.arange(len(ids))
    fig = Figure(figsize=(6, 3.5))
    ax = fig.add_subplot()
    ax.bar(x, [p.volume for p in instance.projects], 0.6, color="0.85", label="required volume")
    ax.bar(x, solution.allocation.units, 0.6, color="tab:blue", label="funded now")
    ax.set_xticks(x, ids)
    ax.set_xlabel("project")
    ax.set_ylabel("volume")
    ax.set_title(f"{solution.feasibility.value}, common risk {solution.risk_level:.4g}")
    ax.legend(frameon=False)
    _save(fig, path)


def plot_sweep(instance: ProblemInstance, rows: Sequence[SweepRow], path: str | os.PathLike) -> None:
    """Common risk and allocations as the shared delay grows."""
    t = [row.t for row in rows]
    fig = Figure(figsize=(6, 6))
    ax_r, ax_u = fig.subplots(2, 1, sharex=True)
    ax_r.plot(t, [row.risk_level for row in rows], marker="o")
    ax_r.set_ylabel("common risk r*")
    for i, pid in enumerate(instance.ids):
        ax_u.plot(t, [row.allocation[i] for row in rows], marker=".", label=pid)
    ax_u.set_xlabel("delay t")
    ax_u.set_ylabel("funded volume")
    ax_u.legend(title="project", frameon=False)
    _save(fig, path)


def plot_sensitivities(
    instance: ProblemInstance, sens: Sensitivities, path: str | os.PathLike
) -> None:
    ids = instance.ids
    x = np.arange(len(ids))
    fig = Figure(figsize=(6, 5))
    ax_u, ax_t = fig.subplots(2, 1, sharex=True)
    ax_u.bar(x, sens.du_dB, color="tab:green")
    ax_u.set_ylabel("du/dB")
    ax_u.set_title(f"dr*/dB = {sens.dr_dB:.4g}")
    ax_t.bar(x, sens.dr_dT, color="tab:red")
    ax_t.set_ylabel("dr*/dT")
    ax_t.set_xticks(x, ids)
    ax_t.set_xlabel("project")
    _save(fig, path)
