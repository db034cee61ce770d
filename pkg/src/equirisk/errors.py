"""Exception hierarchy for equirisk.

Everything raised on purpose by the library derives from :class:`EquiriskError`,
so callers (and the CLI) can separate domain failures from programming errors.
"""

from __future__ import annotations


class EquiriskError(Exception):
    """Base class for all library errors."""


class InstanceError(EquiriskError):
    """A problem instance could not be read or is not well formed."""


class InstanceSyntaxError(InstanceError):
    """The instance document is not valid JSON (or not valid UTF-8)."""


class SchemaError(InstanceError):
    """The document parses but has missing, unknown or mistyped fields."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class ValidationError(InstanceError, ValueError):
    """A domain invariant of the instance is violated.

    ``project_id`` is ``None`` for instance-level violations (empty project
    list, budget).
    """

    def __init__(self, message: str, project_id: str | None = None, field: str | None = None):
        super().__init__(message)
        self.project_id = project_id
        self.field = field


class NonPositiveVolume(ValidationError):
    pass


class NonPositiveCost(ValidationError):
    pass


class NegativeRate(ValidationError):
    pass


class NegativeDelay(ValidationError):
    pass


class DuplicateId(ValidationError):
    pass


class EmptyProjectList(ValidationError):
    pass


class NonPositiveBudget(ValidationError):
    pass


class NegativeTime(EquiriskError, ValueError):
    pass


class NegativeRisk(EquiriskError, ValueError):
    pass


class ZeroAllocation(EquiriskError, ValueError):
    """Risk is undefined for a project that receives no funding now."""


class FullyFundedNoSensitivity(EquiriskError, ValueError):
    """Sensitivities were requested at r* = 0, where the solution has a kink."""


class MaxIterationsExceeded(EquiriskError, ArithmeticError):
    pass
