"""
Empirical audit of the embeddings of H^{s,p}(a).

Rows, each a ratio target norm / source norm:
  lp      ||u||_p                 / ||u||_{H^{s,p}(a)}
  sobolev ||u||_{H^{r,p}}         / ||u||_{H^{s+2r/beta,p}(a)}
  linf    ||u||_inf               / ||u||_{H^{s+2r'/beta,p}(a)},  r' = max(r, n/p + 1/2)
  nested  ||u||_{H^{s,p}(a)}      / ||u||_{H^{2s+delta,p}(a)}
  lambda  ||Lambda u||_p          / ||u||_p
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..errors import ParameterError
from ..grid.models import Field, Grid, require_same_grid
from ..grid.norms import Exponent, lp_norm, parse_exponent
from ..grid.radial import radial_project
from ..textblock import render_block
from .norms import h_norm, sobolev_norm
from .operators import Calculus, apply_varphi_operator

logger = logging.getLogger(__name__)

AUDIT_ROWS = ("lp", "sobolev", "linf", "nested", "lambda")
DRIFT_LIMIT = 0.1


def random_band_limited_field(
    grid: Grid,
    rng: np.random.Generator,
    modes: int = 4,
    radial: bool = False,
    amplitude: float = 1.0,
) -> Field:
    """Real field with Gaussian coefficients on |k_i| <= modes, scaled to max |u| = amplitude."""
    modes = int(modes)
    if modes < 1:
        raise ParameterError(f"modes must be >= 1, got {modes}")
    modes = min(modes, grid.N // 2 - 1)
    coeffs = rng.standard_normal(grid.shape) + 1j * rng.standard_normal(grid.shape)
    mask = np.ones(grid.shape, dtype=bool)
    for axis in range(grid.n):
        shape = [1] * grid.n
        shape[axis] = grid.N
        mask &= (np.abs(grid.axis_modes) <= modes).reshape(shape)
    values = np.fft.ifftn(np.where(mask, coeffs, 0.0)).real
    f = Field(grid, values)
    if radial:
        f = radial_project(f)
    peak = f.max_abs()
    if peak == 0.0:
        return f
    return f * (float(amplitude) / peak)


def linf_order(r: float, n: int, p: float) -> float:
    return max(r, (0.0 if math.isinf(p) else n / p) + 0.5)


def embedding_ratios(calc: Calculus, u: Field, p: Exponent, r: float, delta: float = 0.0) -> Optional[Dict[str, float]]:
    """The five audit ratios for one field; None for the zero field."""
    require_same_grid(calc.grid, u.grid)
    p = parse_exponent(p)
    if not r > 0:
        raise ParameterError(f"audit Sobolev order r must be positive, got {r}")
    if delta < 0:
        raise ParameterError(f"nested-order slack delta must be >= 0, got {delta}")
    if u.max_abs() == 0.0:
        return None
    beta = calc.sym.beta
    source = h_norm(calc, u, p)
    r_inf = linf_order(r, calc.grid.n, p)
    lp = lp_norm(u, p)
    return {
        "lp": lp / source,
        "sobolev": sobolev_norm(calc.grid, u, r, p) / h_norm(calc.with_order(calc.s + 2.0 * r / beta), u, p),
        "linf": u.max_abs() / h_norm(calc.with_order(calc.s + 2.0 * r_inf / beta), u, p),
        "nested": source / h_norm(calc.with_order(2.0 * calc.s + delta), u, p),
        "lambda": lp_norm(apply_varphi_operator(calc, r, u), p) / lp,
    }


@dataclass
class AuditRow:
    name: str
    max_ratio: float
    half_max: float

    @property
    def drift(self) -> float:
        if self.half_max == 0.0 or not math.isfinite(self.max_ratio):
            return math.inf
        return (self.max_ratio - self.half_max) / self.half_max

    @property
    def stable(self) -> bool:
        return math.isfinite(self.max_ratio) and self.drift < DRIFT_LIMIT


@dataclass
class EmbeddingAudit:
    calc_label: str
    s: float
    p: float
    r: float
    delta: float
    trials: int
    seed: int
    rows: List[AuditRow] = field(default_factory=list)

    @property
    def stable(self) -> bool:
        return all(row.stable for row in self.rows)

    def row(self, name: str) -> AuditRow:
        for row in self.rows:
            if row.name == name:
                return row
        raise KeyError(name)

    def pairs(self) -> List[Tuple[str, Any]]:
        out: List[Tuple[str, Any]] = [
            ("audit.symbol", self.calc_label),
            ("audit.s", self.s),
            ("audit.p", self.p),
            ("audit.r", self.r),
            ("audit.delta", self.delta),
            ("audit.trials", self.trials),
            ("audit.seed", self.seed),
        ]
        for row in self.rows:
            out.append((f"audit.{row.name}.max_ratio", row.max_ratio))
            out.append((f"audit.{row.name}.drift", row.drift))
            out.append((f"audit.{row.name}.stable", row.stable))
        out.append(("audit.stable", self.stable))
        return out

    def to_text(self) -> str:
        return render_block(self.pairs())


def embedding_audit(
    calc: Calculus,
    p: Exponent,
    r: float,
    trials: int,
    delta: float = 0.0,
    seed: int = 0,
    modes: int = 4,
) -> EmbeddingAudit:
    """Max ratios over `trials` random fields, and the drift when the sample is doubled."""
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}")
    p = parse_exponent(p)
    rng = np.random.default_rng(seed)
    first = {name: 0.0 for name in AUDIT_ROWS}
    best = dict(first)
    for index in range(2 * trials):
        ratios = embedding_ratios(calc, random_band_limited_field(calc.grid, rng, modes), p, r, delta)
        if ratios is None:
            continue
        for name, value in ratios.items():
            best[name] = max(best[name], value)
        if index == trials - 1:
            first = dict(best)
    rows = [AuditRow(name=name, max_ratio=best[name], half_max=first[name]) for name in AUDIT_ROWS]
    audit = EmbeddingAudit(
        calc_label=calc.sym.label,
        s=calc.s,
        p=p,
        r=float(r),
        delta=float(delta),
        trials=int(trials),
        seed=int(seed),
        rows=rows,
    )
    for row in rows:
        if not row.stable:
            logger.warning("embedding row %s drifts by %.3g when trials double", row.name, row.drift)
    return audit
