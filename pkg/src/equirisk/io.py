"""Instance documents and report rendering.

Instance files are JSON objects::

    {"schema_version": "1", "budget": 295,
     "projects": [{"id": "1", "volume": 100, "base_cost": 2,
                   "inflation_rate": 0.1, "delay": 10}, ...]}

Unknown keys are rejected at both levels.
"""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from equirisk.analysis import Sensitivities, SweepRow
from equirisk.domain import (
    PROJECT_FIELDS,
    ProblemInstance,
    RiskProfile,
    Solution,
    validate_instance,
)
from equirisk.errors import InstanceSyntaxError, SchemaError
from equirisk.pricing import effective_costs

SCHEMA_VERSION = "1"
DOCUMENT_FIELDS = ("schema_version", "budget", "projects")
CSV_HEADER = ("id", "volume", "base_cost", "effective_cost", "allocation", "spend", "risk")
FORMATS = ("text", "csv")


@dataclass(frozen=True)
class InstanceDocument:
    schema_version: str
    budget: float
    projects: tuple[dict[str, Any], ...]

    @classmethod
    def from_instance(cls, instance: ProblemInstance) -> InstanceDocument:
        return cls(
            SCHEMA_VERSION,
            instance.budget,
            tuple({name: getattr(p, name) for name in PROJECT_FIELDS} for p in instance.projects),
        )

    def to_instance(self) -> ProblemInstance:
        return validate_instance({"budget": self.budget, "projects": list(self.projects)})

    def to_json(self) -> str:
        payload = {
            "schema_version": self.schema_version,
            "budget": self.budget,
            "projects": list(self.projects),
        }
        return json.dumps(payload, indent=2) + "\n"


@dataclass(frozen=True)
class ReportOptions:
    format: str = "text"
    precision: int = 6

    def __post_init__(self) -> None:
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}; expected one of {FORMATS}")
        if isinstance(self.precision, bool) or not isinstance(self.precision, int) \
                or not 1 <= self.precision <= 15:
            raise ValueError(f"precision must be an integer in [1, 15], got {self.precision!r}")


def _reject_constant(name: str) -> float:
    raise InstanceSyntaxError(f"non-finite number {name} is not allowed")


def parse_instance(source: str | bytes) -> ProblemInstance:
    """Parse and validate an instance document.

    Raises:
        InstanceSyntaxError: not UTF-8 or not JSON.
        SchemaError: wrong shape, unknown/missing keys, wrong types.
        ValidationError: well-formed but violates a domain invariant.
    """
    if isinstance(source, (bytes, bytearray)):
        try:
            source = bytes(source).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InstanceSyntaxError(f"document is not valid UTF-8: {exc}") from None
    try:
        data = json.loads(source, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise InstanceSyntaxError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    except (ValueError, RecursionError) as exc:
        raise InstanceSyntaxError(f"invalid JSON: {exc}") from None

    if not isinstance(data, dict):
        raise SchemaError(f"top level must be an object, got {type(data).__name__}")
    unknown = sorted(set(data) - set(DOCUMENT_FIELDS))
    if unknown:
        raise SchemaError(f"unknown field {unknown[0]!r}", field=unknown[0])
    for name in DOCUMENT_FIELDS:
        if name not in data:
            raise SchemaError(f"missing field {name!r}", field=name)
    version = data["schema_version"]
    if not isinstance(version, str):
        raise SchemaError("field 'schema_version' must be a string", field="schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaError(
            f"unsupported schema_version {version!r} (expected {SCHEMA_VERSION!r})",
            field="schema_version",
        )
    return validate_instance(data)


def dump_instance(instance: ProblemInstance) -> str:
    return InstanceDocument.from_instance(instance).to_json()


def fmt(x: float, precision: int) -> str:
    s = f"{x:.{precision}f}"
    # keep "-0.000" out of reports
    if s.startswith("-") and float(s) == 0:
        s = s[1:]
    return s


def _table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> list[str]:
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) if i == 0 else h.rjust(w)
                       for i, (h, w) in enumerate(zip(header, widths)))]
    for row in rows:
        lines.append("  ".join(c.ljust(w) if i == 0 else c.rjust(w)
                               for i, (c, w) in enumerate(zip(row, widths))))
    return lines


def _csv(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def render_solution(
    instance: ProblemInstance,
    solution: Solution,
    profile: RiskProfile,
    options: ReportOptions | None = None,
) -> str:
    """Render a solved instance as an aligned text report or CSV."""
    options = options or ReportOptions()
    p = options.precision
    costs = effective_costs(instance)
    rows = [
        [
            proj.id,
            fmt(proj.volume, p),
            fmt(proj.base_cost, p),
            fmt(cp, p),
            fmt(u, p),
            fmt(s, p),
            fmt(r, p),
        ]
        for proj, cp, u, s, r in zip(
            instance.projects, costs, solution.allocation, profile.initial_costs, profile.risks
        )
    ]
    total = [
        "TOTAL",
        fmt(sum(proj.volume for proj in instance.projects), p),
        "",
        "",
        fmt(sum(solution.allocation), p),
        fmt(solution.spend, p),
        fmt(solution.risk_level, p),
    ]
    if options.format == "csv":
        return _csv(CSV_HEADER, rows + [total])

    lines = [
        f"feasibility: {solution.feasibility.value}",
        f"risk level:  {fmt(solution.risk_level, p)}",
        f"iterations:  {solution.iterations}",
        "",
        *_table(CSV_HEADER, rows + [total]),
        "",
        f"budget:      {fmt(instance.budget, p)}",
        f"spend:       {fmt(solution.spend, p)}",
        f"residual:    {fmt(solution.residual, p)}",
    ]
    return "\n".join(lines) + "\n"


def render_sweep(
    instance: ProblemInstance, rows: Sequence[SweepRow], options: ReportOptions | None = None
) -> str:
    options = options or ReportOptions()
    p = options.precision
    header = ["t", "risk_level", "spend", "residual", "feasibility"]
    header += [f"u_{pid}" for pid in instance.ids]
    body = [
        [
            fmt(row.t, p),
            fmt(row.risk_level, p),
            fmt(row.spend, p),
            fmt(row.residual, p),
            row.solution.feasibility.value,
            *(fmt(u, p) for u in row.allocation),
        ]
        for row in rows
    ]
    if options.format == "csv":
        return _csv(header, body)
    return "\n".join(_table(header, body)) + "\n"


def render_sensitivities(
    instance: ProblemInstance,
    solution: Solution,
    sens: Sensitivities,
    options: ReportOptions | None = None,
) -> str:
    """Per-project du/dB and dr/dT; the TOTAL row carries dr/dB and the uniform-delay dr/dT."""
    options = options or ReportOptions()
    p = options.precision
    header = ["id", "allocation", "du_dB", "dr_dT", "dr_dB"]
    body = [
        [pid, fmt(u, p), fmt(du, p), fmt(dt, p), ""]
        for pid, u, du, dt in zip(instance.ids, solution.allocation, sens.du_dB, sens.dr_dT)
    ]
    body.append([
        "TOTAL",
        fmt(sum(solution.allocation), p),
        fmt(sum(sens.du_dB), p),
        fmt(sum(sens.dr_dT), p),
        fmt(sens.dr_dB, p),
    ])
    if options.format == "csv":
        return _csv(header, body)
    lines = [
        f"risk level:  {fmt(solution.risk_level, p)}",
        f"dr*/dB:      {fmt(sens.dr_dB, p)}",
        "",
        *_table(header[:4], [row[:4] for row in body]),
    ]
    return "\n".join(lines) + "\n"
