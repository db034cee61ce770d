"""Diagnostics around an equal-risk solution.

Sensitivities come from differentiating the budget equation f(r; B, T) = B
implicitly at the solved r*, so no extra solves are needed.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from equirisk.domain import (
    Allocation,
    EffectiveCostVector,
    ProblemInstance,
    RiskProfile,
    Solution,
)
from equirisk.errors import FullyFundedNoSensitivity, NegativeTime, ZeroAllocation
from equirisk.pricing import effective_costs
from equirisk.solver import SolverConfig, budget_spend_derivative, solve_equal_risk


@dataclass(frozen=True)
class Sensitivities:
    """First-order response of an underfunded solution.

    Attributes:
        dr_dB: Change of the common risk per unit of budget (negative).
        du_dB: Change of each allocation per unit of budget (positive).
        dr_dT: Change of the common risk per unit of each project's own
            delay, other delays held fixed. Their sum is the response to a
            uniform delay shift.
    """

    dr_dB: float
    du_dB: tuple[float, ...]
    dr_dT: tuple[float, ...]


@dataclass(frozen=True)
class SweepRow:
    t: float
    solution: Solution

    @property
    def risk_level(self) -> float:
        return self.solution.risk_level

    @property
    def allocation(self) -> Allocation:
        return self.solution.allocation

    @property
    def spend(self) -> float:
        return self.solution.spend

    @property
    def residual(self) -> float:
        return self.solution.residual


def risk_profile(
    instance: ProblemInstance, costs: EffectiveCostVector, allocation: Allocation
) -> RiskProfile:
    """Spend now, spend later and their ratio for every project."""
    if len(allocation) != instance.n or len(costs) != instance.n:
        raise ValueError("allocation and costs must have one entry per project")
    initial, completion, risks = [], [], []
    for p, cp, u in zip(instance.projects, costs, allocation):
        if u == 0:
            raise ZeroAllocation(f"project {p.id!r} has zero allocation; its risk is undefined")
        if not (0 < u <= p.volume):
            raise ValueError(f"project {p.id!r}: allocation {u!r} outside (0, {p.volume!r}]")
        s_now = p.base_cost * u
        s_later = cp * (p.volume - u)
        initial.append(s_now)
        completion.append(s_later)
        risks.append(s_later / s_now)
    return RiskProfile(tuple(initial), tuple(completion), tuple(risks))


def max_risk(
    instance: ProblemInstance, costs: EffectiveCostVector, allocation: Allocation
) -> float:
    return risk_profile(instance, costs, allocation).max_risk


def sensitivities(instance: ProblemInstance, solution: Solution) -> Sensitivities:
    """Analytic derivatives of r* and u with respect to budget and delays.

    Raises:
        FullyFundedNoSensitivity: if ``solution`` has zero risk.
    """
    r = solution.risk_level
    if not solution.underfunded or r <= 0:
        raise FullyFundedNoSensitivity(
            "sensitivities are undefined for a fully funded solution (r* = 0)"
        )
    costs = effective_costs(instance)
    fprime = budget_spend_derivative(instance, costs, r)
    dr_dB = 1.0 / fprime

    du_dB, dr_dT = [], []
    for p, cp in zip(instance.projects, costs):
        c, v = p.base_cost, p.volume
        d2 = (cp + c * r) ** 2
        du_dr = -c * cp * v / d2
        du_dB.append(du_dr * dr_dB)
        df_dT = p.inflation_rate * c * v * c * r / d2
        dr_dT.append(-df_dT / fprime)
    return Sensitivities(dr_dB, tuple(du_dB), tuple(dr_dT))


def sweep_delay(
    instance: ProblemInstance,
    t_values: Sequence[float],
    config: SolverConfig | None = None,
) -> list[SweepRow]:
    """Solve once per delay value, with that delay applied to every project."""
    t_values = list(t_values)
    if not t_values:
        raise ValueError("t_values must be nonempty")
    for t in t_values:
        if not (t >= 0):
            raise NegativeTime(f"delay values must be >= 0, got {t!r}")
    config = config or SolverConfig()
    return [SweepRow(float(t), solve_equal_risk(instance.with_delays(t), config)) for t in t_values]


def minimax_grid_search(
    instance: ProblemInstance,
    costs: EffectiveCostVector,
    points: int = 200,
) -> tuple[Allocation, float] | None:
    """Brute-force the budget-exhausting allocation with the smallest max risk.

    The first n-1 allocations range over a uniform grid on (0, V_i]; the last
    one is whatever spends the remaining budget exactly, and grid points
    where it falls outside (0, V_n] are dropped. Every candidate is therefore
    exactly feasible, so the result can only overestimate the true minimax
    risk. Cost grows as ``points ** (n - 1)``; meant for n <= 3.

    Returns ``None`` when no grid point is feasible.
    """
    projects = instance.projects
    c = np.array([p.base_cost for p in projects])
    v = np.array([p.volume for p in projects])
    cp = np.array(costs.costs)
    axes = [np.linspace(vi / points, vi, points) for vi in v[:-1]]
    if axes:
        grid = np.stack([g.ravel() for g in np.meshgrid(*axes, indexing="ij")], axis=1)
    else:
        grid = np.empty((1, 0))
    last = (instance.budget - grid @ c[:-1]) / c[-1]
    keep = (last > 0) & (last <= v[-1])
    if not keep.any():
        return None
    u = np.column_stack([grid[keep], last[keep]])
    risks = cp * (v - u) / (c * u)
    worst = risks.max(axis=1)
    best = int(np.argmin(worst))
    return Allocation(tuple(u[best])), float(worst[best])
