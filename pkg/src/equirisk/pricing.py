"""Unit-cost inflation under delay."""

from __future__ import annotations

import math

from equirisk.domain import EffectiveCostVector, ProblemInstance, Project
from equirisk.errors import NegativeTime


def effective_cost(project: Project, t: float) -> float:
    """Unit cost of ``project`` after time ``t`` under linear inflation, c + k*t."""
    if t < 0:
        raise NegativeTime(f"time must be >= 0, got {t!r}")
    return project.base_cost + project.inflation_rate * t


def effective_costs(instance: ProblemInstance) -> EffectiveCostVector:
    """Unit costs of every project at the end of its own delay."""
    return EffectiveCostVector(tuple(effective_cost(p, p.delay) for p in instance.projects))


def total_planned_cost(instance: ProblemInstance) -> float:
    """Money needed to fund every project in full at today's prices."""
    # fsum keeps the total independent of project order
    return math.fsum(p.base_cost * p.volume for p in instance.projects)
