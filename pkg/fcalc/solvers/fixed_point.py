"""
Fixed-point solvers for [1 + a(-Delta)]^{s/2} u = delta * phi * V(., u).

contraction  plain Picard on u -> T_s(delta V(., u)) below the Lipschitz threshold
localized    damped Picard with a cutoff, kept inside the unit ball of H^{r_alpha + m, p}
radial       damped Picard through the radial projection, kept inside {||u||_{alpha p} <= eps}
"""

from __future__ import annotations

import logging
import math
from typing import Callable, Dict, Optional, Tuple, Union

import numpy as np

from ..calculus.norms import h_norm, sobolev_norm
from ..calculus.operators import apply_Ts
from ..errors import CertificationError, DivergenceError, NonConvergenceError, ParameterError
from ..grid.models import Field, zero_field
from ..grid.norms import lp_norm
from ..grid.radial import radial_defect, radial_project
from .constants import estimate_embedding_constant, estimate_lp_constant
from .linear import residual
from .models import DEFAULT_SETTINGS, HistoryRow, Problem, SolveResult, SolveSettings

logger = logging.getLogger(__name__)

CONTRACTION_MAX_ITER = 500
DAMPED_MAX_ITER = 1000
ROUNDOFF_STEP = 1e-12
RATE_SLACK = 1e-6
RADIAL_DEFECT_TOL = 1e-10
BALL_SLACK = 1e-12
EDGE_TOLERANCE = 1e-14


def _lp_alpha(prob: Problem, u: Field) -> float:
    if prob.alpha is None:
        return math.nan
    return lp_norm(u, prob.alpha * prob.p)


def _row(prob: Problem, u: Field, k: int, res: float, theta: float, projected: bool) -> HistoryRow:
    return HistoryRow(
        iter=k,
        residual=res,
        h_norm=h_norm(prob.calc, u, prob.p),
        lp_alpha_norm=_lp_alpha(prob, u),
        damping=theta,
        projection_flag=projected,
    )


def _ball_project(u: Field, norm: Callable[[Field], float], radius: float) -> Tuple[Field, bool]:
    size = norm(u)
    if size > radius:
        return u * (radius / size), True
    return u, False


def _zero_solution(prob: Problem, result: SolveResult) -> SolveResult:
    u = zero_field(prob.grid)
    result.u = u
    result.record(_row(prob, u, 1, residual(prob, u), 1.0, False))
    result.converged = True
    return result


def _start(prob: Problem, radial: bool = False) -> Field:
    if prob.initial is None:
        return zero_field(prob.grid)
    return radial_project(prob.initial) if radial else prob.initial


def solve_contraction(
    prob: Problem,
    settings: SolveSettings = DEFAULT_SETTINGS,
    lp_constant: Optional[float] = None,
) -> SolveResult:
    """Picard iteration u_{k+1} = T_s(delta V(., u_k)) with the step measured in H^{s,p}(a)."""
    if prob.lipschitz is None:
        raise ParameterError("contraction solve needs a Lipschitz witness h with |V(x,y1)-V(x,y2)| <= h(x)|y1-y2|")
    calc, p = prob.calc, prob.p
    C = estimate_lp_constant(calc, p, settings.lp_trials, settings.seed) if lp_constant is None else float(lp_constant)
    h_sup = prob.lipschitz.max_abs()
    if prob.cutoff is not None:
        h_sup *= prob.cutoff.max_abs()
    threshold = math.inf if h_sup == 0 else 1.0 / (2.0 * C * h_sup)
    bound = prob.delta * C * h_sup

    result = SolveResult(u=_start(prob), method="contraction")
    result.constants.update(
        {
            "lp_constant": C,
            "lipschitz_sup": h_sup,
            "delta": prob.delta,
            "delta_threshold": threshold,
            "rate_bound": bound,
        }
    )
    if not prob.delta < threshold:
        result.certified = False
        note = f"delta = {prob.delta:g} is not below the contraction threshold {threshold:.6g}; run is best effort"
        result.notes.append(note)
        logger.warning(note)
    if prob.delta == 0:
        result.constants["contraction_rate"] = 0.0
        return _zero_solution(prob, result)

    u = result.u
    cap = settings.iteration_cap(CONTRACTION_MAX_ITER)
    prev_step: Optional[float] = None
    prev_res = math.inf
    rate = 0.0
    growth = 0
    step = res = math.inf
    for k in range(1, cap + 1):
        new = apply_Ts(calc, prob.rhs(u))
        step = h_norm(calc, new - u, p)
        res = residual(prob, new)
        result.record(_row(prob, new, k, res, 1.0, False))
        floor = ROUNDOFF_STEP * max(result.history[-1].h_norm, 1.0)
        if prev_step is not None and prev_step > floor and step > floor:
            rate = max(rate, step / prev_step)
        prev_step = step
        growth = growth + 1 if res > prev_res else 0
        prev_res = res
        u = new
        if growth >= settings.divergence_window:
            result.u = u
            raise DivergenceError(f"residual grew over {growth} consecutive steps", result)
        if step <= settings.step_tol:
            break

    result.u = u
    result.constants["contraction_rate"] = rate
    result.constants["rate_within_bound"] = rate <= bound + RATE_SLACK
    result.converged = step <= settings.step_tol and res <= settings.residual_tol
    if not result.converged:
        raise NonConvergenceError(f"contraction stopped after {result.iterations} iterations (residual {res:.3e})", result)
    return result


def localized_parameters(prob: Problem, m_reg: Optional[float] = None) -> Dict[str, float]:
    """r_alpha, the admissible window for m and the regularity slack s/2 - 2(r_alpha + m)/beta."""
    if prob.growth is None:
        raise ParameterError("localized solve needs a growth witness (alpha, C, h)")
    n = prob.grid.n
    p, alpha = prob.p, prob.growth.alpha
    beta, s = prob.calc.sym.beta, prob.calc.s
    r_alpha = 0.0 if math.isinf(p) else n * (alpha - 1.0) / (p * alpha)
    low = 0.0 if math.isinf(p) else n / (alpha * p)
    high = s * beta / (4.0 * alpha)
    if not high > low:
        raise ParameterError(f"no admissible m: need n/(alpha p) = {low:.6g} < m < s beta/(4 alpha) = {high:.6g}")
    m = 0.5 * (low + high) if m_reg is None else float(m_reg)
    if not low < m < high:
        raise ParameterError(f"m_reg = {m:g} outside ({low:.6g}, {high:.6g})")
    slack = s / 2.0 - 2.0 * (r_alpha + m) / beta
    if not slack > 0:
        raise ParameterError(f"regularity slack s/2 - 2(r_alpha + m)/beta = {slack:.6g} must be positive")
    return {"r_alpha": r_alpha, "m_low": low, "m_high": high, "m_reg": m, "reg_slack": slack}


def _require_compact_cutoff(prob: Problem) -> Field:
    if prob.cutoff is None:
        raise ParameterError("localized solve needs a cutoff phi with compact support")
    values = prob.cutoff.values
    scale = max(float(np.max(np.abs(values))), 1.0)
    for axis in range(prob.grid.n):
        edge = np.take(values, 0, axis=axis)
        if float(np.max(np.abs(edge))) > EDGE_TOLERANCE * scale:
            raise ParameterError("cutoff does not vanish on the box boundary; support must lie inside the box")
    return prob.cutoff


def _damped_loop(
    prob: Problem,
    result: SolveResult,
    u: Field,
    step_map: Callable[[Field], Field],
    ball: Callable[[Field], Tuple[Field, bool]],
    settings: SolveSettings,
    accept: Callable[[Field, float], bool],
) -> SolveResult:
    """Damped Picard u <- ball(u + theta (step_map(u) - u)); theta halves on residual growth down to the floor."""
    theta = settings.damping
    prev_res = residual(prob, u)
    stalled = 0
    cap = settings.iteration_cap(DAMPED_MAX_ITER)
    for k in range(1, cap + 1):
        target = step_map(u)
        candidate, projected = ball(u + theta * (target - u))
        res = residual(prob, candidate)
        if projected:
            result.projection_events += 1
        result.record(_row(prob, candidate, k, res, theta, projected))
        u = candidate
        if accept(u, res):
            result.u = u
            result.converged = True
            return result
        if res > prev_res:
            if theta <= settings.damping_floor:
                stalled += 1
            else:
                theta = max(theta / 2.0, settings.damping_floor)
        else:
            stalled = 0
        prev_res = res
        if stalled >= settings.divergence_window:
            result.u = u
            note = "damping floor reached with growing residual; existence is not in question, Picard does not converge here"
            result.notes.append(note)
            logger.warning(note)
            raise NonConvergenceError(note, result)
    result.u = u
    raise NonConvergenceError(f"{result.method} stopped after {cap} iterations (residual {result.final_residual:.3e})", result)


def solve_localized(
    prob: Problem,
    m_reg: Optional[float] = None,
    settings: SolveSettings = DEFAULT_SETTINGS,
) -> SolveResult:
    """Damped Picard on u -> T_s(delta phi V(., u)) inside ||u||_{H^{r_alpha + m, p}} <= 1."""
    cutoff = _require_compact_cutoff(prob)
    params = localized_parameters(prob, m_reg)
    order = params["r_alpha"] + params["m_reg"]
    result = SolveResult(u=_start(prob), method="localized")
    result.constants.update(params)
    result.constants["ball_order"] = order
    result.constants["cutoff_sup"] = cutoff.max_abs()
    if prob.delta == 0:
        return _zero_solution(prob, result)

    grid, p = prob.grid, prob.p

    def ball(u: Field) -> Tuple[Field, bool]:
        return _ball_project(u, lambda f: sobolev_norm(grid, f, order, p), 1.0)

    start, projected = ball(result.u)
    if projected:
        result.projection_events += 1
    return _damped_loop(
        prob,
        result,
        start,
        lambda u: apply_Ts(prob.calc, prob.rhs(u)),
        ball,
        settings,
        lambda u, res: res <= settings.residual_tol,
    )


def radial_constants(p: float, C: float, n_emb: float, alpha: float, epsilon: Union[str, float] = "auto") -> Dict[str, float]:
    """K = 2^p C^p N, the threshold K^{1/(1-alpha)} and rho_eps = eps/K - eps^alpha."""
    if math.isinf(p):
        raise ParameterError("radial solve needs a finite exponent p")
    if not (n_emb > 0 and C > 0 and alpha > 1):
        raise ParameterError("radial constants need N > 0, C > 0 and alpha > 1")
    K = 2.0 ** p * C ** p * n_emb
    threshold = K ** (1.0 / (1.0 - alpha))
    if isinstance(epsilon, str):
        if epsilon.strip().lower() != "auto":
            raise ParameterError(f"epsilon must be a positive number or 'auto', got {epsilon!r}")
        eps = (1.0 / (alpha * K)) ** (1.0 / (alpha - 1.0))
    else:
        eps = float(epsilon)
        if not (eps > 0 and math.isfinite(eps)):
            raise ParameterError(f"epsilon must be positive, got {epsilon}")
    rho = eps / K - eps ** alpha
    return {"K": K, "eps_threshold": threshold, "eps": eps, "rho_eps": rho}


def solve_radial(
    prob: Problem,
    epsilon: Union[str, float] = "auto",
    n_emb: Optional[float] = None,
    strict: bool = False,
    settings: SolveSettings = DEFAULT_SETTINGS,
) -> SolveResult:
    """Damped Picard on u -> radial_project(T_s V(., u)) inside {||u||_{alpha p} <= eps}.

    The run is certified when rho_eps > 0 and ||h||_p < rho_eps; rho_eps > 0
    holds exactly for eps below K^{1/(1-alpha)}.
    """
    if not prob.radial:
        raise ParameterError("radial solve needs a problem flagged radial")
    growth = prob.growth
    if growth is None or growth.g is None:
        raise ParameterError("radial solve needs growth witnesses h and g")
    p, alpha = prob.p, growth.alpha
    if n_emb is None:
        n_emb = estimate_embedding_constant(prob.calc, p, alpha, settings.embedding_trials, settings.seed)
    consts = radial_constants(p, growth.C, float(n_emb), alpha, epsilon)
    eps, rho = consts["eps"], consts["rho_eps"]
    h_norm_p = lp_norm(growth.h, p)
    n = prob.grid.n
    result = SolveResult(u=_start(prob, radial=True), method="radial")
    result.constants.update(
        {
            "N_emb": float(n_emb),
            "C": growth.C,
            "alpha": alpha,
            "p": p,
            **consts,
            "h_lp_norm": h_norm_p,
            "eps_above_threshold": eps > consts["eps_threshold"],
            "r_alpha": n * (alpha - 1.0) / (p * alpha),
        }
    )
    result.notes.append(
        "feasible radii satisfy eps < (2^p C^p N)^{1/(1-alpha)}; the reverse inequality gives rho_eps <= 0"
    )
    if not (rho > 0 and h_norm_p < rho):
        reason = f"rho_eps = {rho:.6g} with ||h||_p = {h_norm_p:.6g}: need 0 < ||h||_p < rho_eps"
        if strict:
            raise CertificationError(reason)
        result.certified = False
        result.notes.append("uncertified: " + reason)
        logger.warning("radial solve runs uncertified: %s", reason)

    target_norm = alpha * p

    def ball(u: Field) -> Tuple[Field, bool]:
        return _ball_project(u, lambda f: lp_norm(f, target_norm), eps)

    def accept(u: Field, res: float) -> bool:
        return (
            res <= settings.residual_tol
            and radial_defect(u) <= RADIAL_DEFECT_TOL
            and lp_norm(u, target_norm) <= eps * (1.0 + BALL_SLACK)
        )

    start, projected = ball(result.u)
    if projected:
        result.projection_events += 1
    return _damped_loop(
        prob,
        result,
        start,
        lambda u: radial_project(apply_Ts(prob.calc, prob.rhs(u))),
        ball,
        settings,
        accept,
    )
