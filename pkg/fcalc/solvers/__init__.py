from .constants import estimate_embedding_constant, estimate_lp_constant
from .fixed_point import localized_parameters, radial_constants, solve_contraction, solve_localized, solve_radial
from .history import HISTORY_COLUMNS, format_history_csv, write_history_csv
from .linear import linear_problem, residual, solve_linear
from .models import (
    DEFAULT_SETTINGS,
    GrowthWitness,
    HistoryRow,
    Nonlinearity,
    Problem,
    SolveResult,
    SolveSettings,
)

__all__ = [
    "DEFAULT_SETTINGS",
    "GrowthWitness",
    "HISTORY_COLUMNS",
    "HistoryRow",
    "Nonlinearity",
    "Problem",
    "SolveResult",
    "SolveSettings",
    "estimate_embedding_constant",
    "estimate_lp_constant",
    "format_history_csv",
    "linear_problem",
    "localized_parameters",
    "radial_constants",
    "residual",
    "solve_contraction",
    "solve_linear",
    "solve_localized",
    "solve_radial",
    "write_history_csv",
]
