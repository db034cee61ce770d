"""Equal-risk allocation of an insufficient budget.

For a common risk level r, each project receives

    u_i(r) = c'_i V_i / (c'_i + c_i r),

which makes c'_i (V_i - u_i) / (c_i u_i) equal to r for every project. The
spend f(r) = sum_i c_i u_i(r) falls strictly from the full planned cost at
r = 0 towards zero, so the budget equation f(r) = B has exactly one root when
the budget is short. It is bracketed by doubling, narrowed by bisection and
finished with a few Newton steps that must stay inside the bracket.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from equirisk.domain import (
    Allocation,
    EffectiveCostVector,
    Feasibility,
    ProblemInstance,
    Solution,
)
from equirisk.errors import MaxIterationsExceeded, NegativeRisk
from equirisk.pricing import effective_costs, total_planned_cost

_NEWTON_STEPS = 8


@dataclass(frozen=True)
class SolverConfig:
    """Termination controls for :func:`solve_equal_risk`.

    Attributes:
        risk_tolerance: Target width of the bisection bracket in r.
        budget_tolerance: Largest accepted |spend - B|. ``None`` means
            ``1e-9 * B`` for whichever instance is solved.
        max_iterations: Cap on bracket-growth plus bisection steps.
    """

    risk_tolerance: float = 1e-12
    budget_tolerance: float | None = None
    max_iterations: int = 200

    def __post_init__(self) -> None:
        if not (self.risk_tolerance > 0):
            raise ValueError(f"risk_tolerance must be > 0, got {self.risk_tolerance!r}")
        if self.budget_tolerance is not None and not (self.budget_tolerance > 0):
            raise ValueError(f"budget_tolerance must be > 0, got {self.budget_tolerance!r}")
        if isinstance(self.max_iterations, bool) or not isinstance(self.max_iterations, int) \
                or self.max_iterations <= 0:
            raise ValueError(f"max_iterations must be a positive integer, got {self.max_iterations!r}")

    def budget_tol(self, budget: float) -> float:
        if self.budget_tolerance is None:
            return 1e-9 * budget
        return self.budget_tolerance


def _check(instance: ProblemInstance, costs: EffectiveCostVector, r: float) -> None:
    if len(costs) != instance.n:
        raise ValueError(f"got {len(costs)} effective costs for {instance.n} projects")
    if not (r >= 0):
        raise NegativeRisk(f"risk level must be >= 0, got {r!r}")


def allocation_from_risk(
    instance: ProblemInstance, costs: EffectiveCostVector, r: float
) -> Allocation:
    """Allocation giving every project risk ``r``."""
    _check(instance, costs, r)
    return Allocation(tuple(
        cp * p.volume / (cp + p.base_cost * r) for p, cp in zip(instance.projects, costs)
    ))


def budget_spend(instance: ProblemInstance, costs: EffectiveCostVector, r: float) -> float:
    """Money spent now by the allocation at common risk ``r``."""
    _check(instance, costs, r)
    return sum(
        p.base_cost * cp * p.volume / (cp + p.base_cost * r)
        for p, cp in zip(instance.projects, costs)
    )


def budget_spend_derivative(
    instance: ProblemInstance, costs: EffectiveCostVector, r: float
) -> float:
    """d(spend)/dr; always negative."""
    _check(instance, costs, r)
    total = 0.0
    for p, cp in zip(instance.projects, costs):
        c = p.base_cost
        d = cp + c * r
        total -= c * c * cp * p.volume / (d * d)
    return total


def solve_equal_risk(
    instance: ProblemInstance, config: SolverConfig | None = None
) -> Solution:
    """Find the common risk level that exactly spends the budget.

    A budget covering every project in full gives a ``FullyFunded`` solution
    with zero risk and the surplus as residual; no root search is done.

    Raises:
        MaxIterationsExceeded: the iteration cap was hit before the bracket
            shrank to ``risk_tolerance``, or the final spend misses the budget
            by more than the budget tolerance.
    """
    config = config or SolverConfig()
    costs = effective_costs(instance)
    budget = instance.budget
    planned = total_planned_cost(instance)

    if budget >= planned:
        units = Allocation(tuple(p.volume for p in instance.projects))
        return Solution(0.0, units, planned, budget - planned, Feasibility.FULLY_FUNDED, 0)

    def f(r: float) -> float:
        return budget_spend(instance, costs, r)

    iterations = 0
    lo, hi = 0.0, 1.0
    while f(hi) >= budget:
        iterations += 1
        if iterations > config.max_iterations:
            raise MaxIterationsExceeded(
                f"no upper bracket for r within {config.max_iterations} iterations"
            )
        lo, hi = hi, 2.0 * hi

    while hi - lo > config.risk_tolerance:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # bracket is down to adjacent doubles
        iterations += 1
        if iterations > config.max_iterations:
            raise MaxIterationsExceeded(
                f"bracket [{lo!r}, {hi!r}] wider than {config.risk_tolerance!r} "
                f"after {config.max_iterations} iterations"
            )
        fm = f(mid)
        if fm > budget:
            lo = mid
        elif fm < budget:
            hi = mid
        else:
            lo = hi = mid

    r = 0.5 * (lo + hi)
    for _ in range(_NEWTON_STEPS):
        gap = f(r) - budget
        if gap == 0.0:
            break
        step = gap / budget_spend_derivative(instance, costs, r)
        candidate = r - step
        if not (lo <= candidate <= hi) or candidate == r:
            break
        r = candidate
        iterations += 1
        if abs(step) <= 1e-3 * config.risk_tolerance:
            break

    allocation = allocation_from_risk(instance, costs, r)
    spend = sum(p.base_cost * u for p, u in zip(instance.projects, allocation))
    residual = budget - spend
    tol = config.budget_tol(budget)
    if not math.isfinite(spend) or abs(residual) > tol:
        raise MaxIterationsExceeded(
            f"spend {spend!r} misses budget {budget!r} by more than {tol!r}"
        )
    return Solution(r, allocation, spend, residual, Feasibility.UNDERFUNDED, iterations)
