"""Command-line interface.

    equirisk solve INSTANCE [--format text|csv] [--precision N] [--plot FILE]
    equirisk sweep INSTANCE --t 0,5,10 [...]
    equirisk sensitivity INSTANCE [...]

Exit status is 0 on success, 1 for domain or input errors and 2 for usage
errors. Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import TextIO

from equirisk.analysis import risk_profile, sensitivities, sweep_delay
from equirisk.errors import EquiriskError
from equirisk.io import (
    FORMATS,
    ReportOptions,
    parse_instance,
    render_sensitivities,
    render_solution,
    render_sweep,
)
from equirisk.pricing import effective_costs
from equirisk.solver import SolverConfig, solve_equal_risk

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0 or value == float("inf"):
        raise argparse.ArgumentTypeError(f"must be a finite number > 0, got {text!r}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text!r}")
    return value


def _precision(text: str) -> int:
    value = _positive_int(text)
    if value > 15:
        raise argparse.ArgumentTypeError(f"must be in [1, 15], got {text!r}")
    return value


def _float_list(text: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None
    return values


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose help and usage messages go to injectable streams."""

    out: TextIO | None = None
    err: TextIO | None = None

    def _print_message(self, message: str, file=None) -> None:
        if not message:
            return
        if file is sys.stdout:
            (self.out or sys.stdout).write(message)
        else:
            (self.err or sys.stderr).write(message)


def build_parser(stdout: TextIO | None = None, stderr: TextIO | None = None) -> argparse.ArgumentParser:
    parser_class = type("Parser", (_Parser,), {"out": stdout, "err": stderr})

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("instance", type=Path, help="instance file (JSON)")
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--precision", type=_precision, default=6,
                        help="decimal places in the report (1-15, default 6)")
    common.add_argument("--risk-tol", type=_positive_float, default=1e-12,
                        help="bisection bracket width in r")
    common.add_argument("--budget-tol", type=_positive_float, default=None,
                        help="accepted |spend - budget| (default 1e-9 * budget)")
    common.add_argument("--max-iter", type=_positive_int, default=200)
    common.add_argument("--plot", type=Path, default=None, metavar="FILE",
                        help="also write a figure to FILE (format from the extension)")

    parser = parser_class(prog="equirisk",
                          description="Equal-risk budget allocation across delayed projects.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=parser_class)
    sub.add_parser("solve", parents=[common], help="solve the equal-risk allocation")
    sweep = sub.add_parser("sweep", parents=[common], help="re-solve for several uniform delays")
    sweep.add_argument("--t", dest="t_values", type=_float_list, required=True,
                       help="comma-separated delays applied to every project")
    sub.add_parser("sensitivity", parents=[common], help="derivatives of r* and u")
    return parser


def _plot(fn, *args) -> None:
    try:
        fn(*args)
    except (ValueError, OSError) as exc:
        raise EquiriskError(f"cannot write figure {str(args[-1])!r}: {exc}") from None


def _run(args: argparse.Namespace, out: TextIO) -> None:
    path: Path = args.instance
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise EquiriskError(f"cannot read instance file {str(path)!r}: {exc.strerror or exc}") from None
    try:
        instance = parse_instance(data)
    except EquiriskError as exc:
        raise EquiriskError(f"{path}: {exc}") from exc

    config = SolverConfig(args.risk_tol, args.budget_tol, args.max_iter)
    options = ReportOptions(args.format, args.precision)

    if args.command == "solve":
        solution = solve_equal_risk(instance, config)
        profile = risk_profile(instance, effective_costs(instance), solution.allocation)
        out.write(render_solution(instance, solution, profile, options))
        if args.plot is not None:
            from equirisk.plotting import plot_solution
            _plot(plot_solution, instance, solution, args.plot)
    elif args.command == "sweep":
        rows = sweep_delay(instance, args.t_values, config)
        out.write(render_sweep(instance, rows, options))
        if args.plot is not None:
            from equirisk.plotting import plot_sweep
            _plot(plot_sweep, instance, rows, args.plot)
    else:
        solution = solve_equal_risk(instance, config)
        sens = sensitivities(instance, solution)
        out.write(render_sensitivities(instance, solution, sens, options))
        if args.plot is not None:
            from equirisk.plotting import plot_sensitivities
            _plot(plot_sensitivities, instance, sens, args.plot)


def run_cli(argv: Sequence[str] | None = None, stdout: TextIO | None = None,
            stderr: TextIO | None = None) -> int:
    """Run one command and return its exit status; never raises for bad input."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser(out, err)
    try:
        args = parser.parse_args(None if argv is None else list(argv))
    except SystemExit as exc:
        code = exc.code
        return EXIT_OK if code in (0, None) else EXIT_USAGE
    try:
        _run(args, out)
    except EquiriskError as exc:
        err.write(f"equirisk: error: {exc}\n")
        return EXIT_DOMAIN
    return EXIT_OK


def main() -> None:
    sys.exit(run_cli())
