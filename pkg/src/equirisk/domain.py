"""Core value types: projects, instances, allocations and solutions.

All types are frozen dataclasses holding tuples, so they can be shared
between threads without copying.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import Any

from equirisk.errors import (
    DuplicateId,
    EmptyProjectList,
    NegativeDelay,
    NegativeRate,
    NonPositiveBudget,
    NonPositiveCost,
    NonPositiveVolume,
    SchemaError,
)

PROJECT_FIELDS = ("id", "volume", "base_cost", "inflation_rate", "delay")


def _positive(x: float) -> bool:
    return math.isfinite(x) and x > 0


def _nonnegative(x: float) -> bool:
    return math.isfinite(x) and x >= 0


@dataclass(frozen=True)
class Project:
    """One delayed investment project.

    Attributes:
        id: Label, unique within an instance.
        volume: Labour-force volume needed to finish the project.
        base_cost: Cost per unit of volume at time zero.
        inflation_rate: Linear growth of the unit cost per unit time.
        delay: Time until the unfunded remainder is paid for.
    """

    id: str
    volume: float
    base_cost: float
    inflation_rate: float = 0.0
    delay: float = 0.0

    def __post_init__(self) -> None:
        if not isinstance(self.id, str) or not self.id:
            raise SchemaError("project id must be a nonempty string", field="id")
        label = f"project {self.id!r}"
        if not _positive(self.volume):
            raise NonPositiveVolume(
                f"{label}: volume must be finite and > 0, got {self.volume!r}",
                project_id=self.id,
                field="volume",
            )
        if not _positive(self.base_cost):
            raise NonPositiveCost(
                f"{label}: base_cost must be finite and > 0, got {self.base_cost!r}",
                project_id=self.id,
                field="base_cost",
            )
        if not _nonnegative(self.inflation_rate):
            raise NegativeRate(
                f"{label}: inflation_rate must be finite and >= 0, got {self.inflation_rate!r}",
                project_id=self.id,
                field="inflation_rate",
            )
        if not _nonnegative(self.delay):
            raise NegativeDelay(
                f"{label}: delay must be finite and >= 0, got {self.delay!r}",
                project_id=self.id,
                field="delay",
            )


@dataclass(frozen=True)
class ProblemInstance:
    """A list of projects competing for a single budget available now."""

    projects: tuple[Project, ...]
    budget: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "projects", tuple(self.projects))
        if not self.projects:
            raise EmptyProjectList("instance must contain at least one project", field="projects")
        seen: set[str] = set()
        for p in self.projects:
            if p.id in seen:
                raise DuplicateId(f"duplicate project id {p.id!r}", project_id=p.id, field="id")
            seen.add(p.id)
        if not _positive(self.budget):
            raise NonPositiveBudget(
                f"budget must be finite and > 0, got {self.budget!r}", field="budget"
            )

    @property
    def n(self) -> int:
        return len(self.projects)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(p.id for p in self.projects)

    def with_budget(self, budget: float) -> ProblemInstance:
        return ProblemInstance(self.projects, budget)

    def with_delays(self, delays: float | Iterable[float]) -> ProblemInstance:
        """Copy of the instance with new delays (one value for all, or one per project)."""
        if isinstance(delays, (int, float)):
            delays = [float(delays)] * self.n
        delays = list(delays)
        if len(delays) != self.n:
            raise ValueError(f"expected {self.n} delays, got {len(delays)}")
        projects = tuple(
            Project(p.id, p.volume, p.base_cost, p.inflation_rate, t)
            for p, t in zip(self.projects, delays)
        )
        return ProblemInstance(projects, self.budget)


@dataclass(frozen=True)
class EffectiveCostVector:
    """Delay-inflated unit costs c'_i, one per project."""

    costs: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "costs", tuple(float(c) for c in self.costs))

    def __len__(self) -> int:
        return len(self.costs)

    def __iter__(self):
        return iter(self.costs)

    def __getitem__(self, i: int) -> float:
        return self.costs[i]


@dataclass(frozen=True)
class Allocation:
    """Volume funded now for each project."""

    units: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "units", tuple(float(u) for u in self.units))

    def __len__(self) -> int:
        return len(self.units)

    def __iter__(self):
        return iter(self.units)

    def __getitem__(self, i: int) -> float:
        return self.units[i]


@dataclass(frozen=True)
class RiskProfile:
    initial_costs: tuple[float, ...]
    completion_costs: tuple[float, ...]
    risks: tuple[float, ...]

    @property
    def max_risk(self) -> float:
        return max(self.risks)


class Feasibility(str, enum.Enum):
    UNDERFUNDED = "Underfunded"
    FULLY_FUNDED = "FullyFunded"


@dataclass(frozen=True)
class Solution:
    """Result of an equal-risk solve.

    ``residual`` is ``budget - spend``: close to zero when underfunded, the
    unspent surplus when the budget covers every project.
    """

    risk_level: float
    allocation: Allocation
    spend: float
    residual: float
    feasibility: Feasibility
    iterations: int

    @property
    def underfunded(self) -> bool:
        return self.feasibility is Feasibility.UNDERFUNDED


def _number(value: Any, where: str, field: str) -> float:
    # bool is an int subclass; reject it explicitly
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(
            f"{where}: field {field!r} must be a number, got {type(value).__name__}",
            field=field,
        )
    try:
        return float(value)
    except OverflowError:
        raise SchemaError(f"{where}: field {field!r} is out of range", field=field) from None


def _project_from_mapping(raw: Any, index: int) -> Project:
    where = f"projects[{index}]"
    if isinstance(raw, Project):
        return raw
    if not isinstance(raw, Mapping):
        raise SchemaError(f"{where}: expected an object, got {type(raw).__name__}", field="projects")
    extra = sorted(set(raw) - set(PROJECT_FIELDS), key=str)
    if extra:
        raise SchemaError(f"{where}: unknown field {extra[0]!r}", field=str(extra[0]))
    for name in PROJECT_FIELDS:
        if name not in raw:
            raise SchemaError(f"{where}: missing field {name!r}", field=name)
    pid = raw["id"]
    if not isinstance(pid, str):
        raise SchemaError(f"{where}: field 'id' must be a string", field="id")
    if not pid:
        raise SchemaError(f"{where}: field 'id' must be nonempty", field="id")
    return Project(
        id=pid,
        volume=_number(raw["volume"], where, "volume"),
        base_cost=_number(raw["base_cost"], where, "base_cost"),
        inflation_rate=_number(raw["inflation_rate"], where, "inflation_rate"),
        delay=_number(raw["delay"], where, "delay"),
    )


def validate_instance(raw: Mapping[str, Any] | ProblemInstance) -> ProblemInstance:
    """Build a :class:`ProblemInstance` from loosely typed data.

    ``raw`` needs a ``budget`` number and a ``projects`` list whose items are
    either :class:`Project` objects or mappings with the five project fields.
    Other top-level keys are ignored here; the file parser is stricter.

    Raises:
        SchemaError: missing or mistyped fields.
        ValidationError: a subclass naming the violated invariant.
    """
    if isinstance(raw, ProblemInstance):
        return raw
    if not isinstance(raw, Mapping):
        raise SchemaError(f"instance must be an object, got {type(raw).__name__}")
    for name in ("budget", "projects"):
        if name not in raw:
            raise SchemaError(f"missing field {name!r}", field=name)
    projects = raw["projects"]
    if not isinstance(projects, (list, tuple)):
        raise SchemaError("field 'projects' must be a list", field="projects")
    budget = _number(raw["budget"], "instance", "budget")
    parsed = [_project_from_mapping(p, i) for i, p in enumerate(projects)]
    return ProblemInstance(tuple(parsed), budget)
