from __future__ import annotations

import math

from ..calculus.norms import h_norm
from ..calculus.operators import Calculus, apply_A, apply_Ts
from ..grid.models import Field, require_same_grid
from ..grid.norms import Exponent, lp_norm, parse_exponent
from .models import HistoryRow, Nonlinearity, Problem, SolveResult

LINEAR_TOLERANCE = 1e-11

ZERO_NONLINEARITY = Nonlinearity(label="zero", value=lambda x, y: 0.0 * y, dy=lambda x, y: 0.0 * y)


def residual(prob: Problem, u: Field) -> float:
    """||A u - delta * phi * (V(., u) + forcing)||_p."""
    require_same_grid(prob.grid, u.grid)
    return lp_norm(apply_A(prob.calc, u) - prob.rhs(u), prob.p)


def linear_problem(calc: Calculus, g: Field, p: Exponent) -> Problem:
    """A u = g as a Problem whose right side ignores u."""
    return Problem(calc=calc, p=p, V=ZERO_NONLINEARITY, forcing=g, delta=1.0, label="linear")


def solve_linear(calc: Calculus, g: Field, p: Exponent) -> SolveResult:
    """u = T_s g, the unique solution of A u = g; ||u||_H = ||g||_p on the grid."""
    require_same_grid(calc.grid, g.grid)
    p = parse_exponent(p)
    u = apply_Ts(calc, g)
    g_norm = lp_norm(g, p)
    res = lp_norm(apply_A(calc, u) - g, p)
    u_norm = h_norm(calc, u, p)
    result = SolveResult(u=u, method="linear")
    result.record(HistoryRow(iter=1, residual=res, h_norm=u_norm, lp_alpha_norm=math.nan, damping=1.0, projection_flag=False))
    result.converged = res <= LINEAR_TOLERANCE * g_norm
    result.constants.update({"g_lp_norm": g_norm, "u_h_norm": u_norm, "p": p, "s": calc.s})
    return result
