from __future__ import annotations

import logging
import math
from typing import Optional, Sequence, Tuple

import numpy as np

from ..errors import ClassPreconditionError, ParameterError, SymbolCapabilityError
from .ladder import DEFAULT_LADDER, SampleLadder
from .models import ClassReport, ConstantFit, Symbol

logger = logging.getLogger(__name__)

STABLE_LOW = 0.5
STABLE_HIGH = 2.0


def g3_exponent(k: int, beta: float, s: float, n: int) -> float:
    """k(beta s / 4n - 1) + beta/2."""
    return k * (beta * s / (4.0 * n) - 1.0) + beta / 2.0


def _log_ratio(coarse: float, fine: float) -> float:
    if coarse == fine:
        return 0.0
    return coarse - fine


def _ratio_from_logs(coarse: float, fine: float) -> float:
    if math.isnan(coarse) or math.isnan(fine):
        return float("nan")
    with np.errstate(over="ignore"):
        return float(np.exp(_log_ratio(coarse, fine)))


def _stable(ratio: float) -> bool:
    return STABLE_LOW <= ratio <= STABLE_HIGH


def _fit(
    name: str,
    per_rung_logs: Sequence[np.ndarray],
    *,
    use_sup: bool,
    threshold: float,
    exponent: float,
) -> ConstantFit:
    reduce = np.max if use_sup else np.min
    rung_logs = np.array([reduce(v) if v.size else (-np.inf if use_sup else np.inf) for v in per_rung_logs])
    if np.any(np.isnan(rung_logs)):
        cumulative = np.full_like(rung_logs, np.nan)
    else:
        cumulative = (np.maximum if use_sup else np.minimum).accumulate(rung_logs)
    final = float(cumulative[-1])
    ratio = _ratio_from_logs(float(cumulative[-2]), final)
    stable_from = len(cumulative) - 1
    for r in range(len(cumulative)):
        if _stable(_ratio_from_logs(float(cumulative[r]), final)):
            stable_from = r
            break
    with np.errstate(over="ignore"):
        values = [float(np.exp(v)) for v in cumulative]
    value = values[-1]
    passed = math.isfinite(value) and _stable(ratio)
    if not use_sup:
        passed = passed and value > 0.0
    return ConstantFit(
        name=name,
        value=value,
        threshold=threshold,
        ratio=ratio,
        passed=bool(passed),
        stable_from=stable_from,
        exponent=exponent,
        rung_values=values,
    )


def _check_g1(sym: Symbol, ladder: SampleLadder) -> bool:
    radii = ladder.all_radii(sym.singular_at_zero)
    values = sym.eval(radii ** 2)
    return bool(np.all(values >= 0.0))


def _check_g2(sym: Symbol, ladder: SampleLadder) -> ConstantFit:
    logs = []
    for radii in ladder.rungs():
        t = radii ** 2
        logs.append(sym.log_eval(t) - (sym.beta / 2.0) * np.log1p(t))
    return _fit("g2", logs, use_sup=False, threshold=ladder.threshold, exponent=sym.beta / 2.0)


def _check_g3(sym: Symbol, k: int, s: float, n: int, ladder: SampleLadder) -> ConstantFit:
    exponent = g3_exponent(k, sym.beta, s, n)
    logs = []
    for radii in ladder.rungs():
        t = radii ** 2
        logs.append(sym.log_abs_deriv(k, t) - exponent * np.log1p(t))
    return _fit(f"g3.k{k}", logs, use_sup=True, threshold=ladder.threshold, exponent=exponent)


def check_class(sym: Symbol, s: float, n: int, ladder: Optional[SampleLadder] = None) -> ClassReport:
    """Numerically certify G1-G3 for derivative orders 1..n."""
    ladder = ladder or DEFAULT_LADDER
    if sym.beta * s < 4 * n * (1.0 - 1e-12):
        raise ClassPreconditionError(sym.beta, s, n)
    if sym.max_order < n:
        raise SymbolCapabilityError(sym.label, n, sym.max_order)

    g1 = _check_g1(sym, ladder)
    g2 = _check_g2(sym, ladder)
    g3 = [_check_g3(sym, k, s, n, ladder) for k in range(1, n + 1)]
    report = ClassReport(
        symbol=sym.label,
        g1_pass=g1,
        g2=g2,
        g3=g3,
        s_used=float(s),
        n_used=int(n),
        beta_used=float(sym.beta),
        sample_spec=ladder.describe(),
        class_claimed=sym.class_claimed,
    )
    logger.debug("class check %s s=%g n=%d -> %s", sym.label, s, n, "pass" if report.verdict else "fail")
    return report


def check_ellipticity(sym: Symbol, n: int, ladder: Optional[SampleLadder] = None) -> ClassReport:
    """G1 and G2 only, for symbols handled by the L2 theory."""
    ladder = ladder or DEFAULT_LADDER
    return ClassReport(
        symbol=sym.label,
        g1_pass=_check_g1(sym, ladder),
        g2=_check_g2(sym, ladder),
        g3=[],
        s_used=float("nan"),
        n_used=int(n),
        beta_used=float(sym.beta),
        sample_spec=ladder.describe(),
        class_claimed=sym.class_claimed,
        ellipticity_only=True,
    )


def class_nesting_check(
    sym: Symbol, s1: float, s2: float, n: int, ladder: Optional[SampleLadder] = None
) -> bool:
    """True iff passing at s1 implies passing at s2 on the same ladder."""
    reports = class_nesting_reports(sym, s1, s2, n, ladder)
    return (not reports[0].verdict) or reports[1].verdict


def class_nesting_reports(
    sym: Symbol, s1: float, s2: float, n: int, ladder: Optional[SampleLadder] = None
) -> Tuple[ClassReport, ClassReport]:
    if s1 < 0:
        raise ParameterError(f"s1 must be nonnegative, got {s1}")
    if not s1 < s2:
        raise ParameterError(f"nesting requires s1 < s2, got s1={s1}, s2={s2}")
    return check_class(sym, s1, n, ladder), check_class(sym, s2, n, ladder)


def finite_difference_check(sym: Symbol, k: int, t: np.ndarray, rel_step: float = 1e-4) -> np.ndarray:
    """Relative gap between deriv(k) and a central difference of deriv(k-1)."""
    if k < 1:
        raise ParameterError("finite-difference check needs k >= 1")
    t = np.asarray(t, dtype=float)
    step = rel_step * np.maximum(np.abs(t), 1e-3)
    approx = (sym.deriv(k - 1, t + step) - sym.deriv(k - 1, t - step)) / (2.0 * step)
    exact = sym.deriv(k, t)
    scale = np.maximum(np.abs(exact), np.finfo(float).tiny)
    return np.abs(approx - exact) / scale

