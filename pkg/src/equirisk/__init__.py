"""Equal-risk allocation of a short budget across delayed investment projects."""

from equirisk.analysis import (
    Sensitivities,
    SweepRow,
    max_risk,
    minimax_grid_search,
    risk_profile,
    sensitivities,
    sweep_delay,
)
from equirisk.domain import (
    Allocation,
    EffectiveCostVector,
    Feasibility,
    ProblemInstance,
    Project,
    RiskProfile,
    Solution,
    validate_instance,
)
from equirisk.errors import *  # noqa: F401,F403
from equirisk.io import (
    InstanceDocument,
    ReportOptions,
    dump_instance,
    parse_instance,
    render_sensitivities,
    render_solution,
    render_sweep,
)
from equirisk.pricing import effective_cost, effective_costs, total_planned_cost
from equirisk.solver import (
    SolverConfig,
    allocation_from_risk,
    budget_spend,
    budget_spend_derivative,
    solve_equal_risk,
)

__version__ = "0.1.0"
