from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..errors import ParameterError, ResolutionError
from ..grid.models import Field, Grid, require_same_grid
from ..grid.transform import apply_multiplier, half_spectrum, real_forward, real_inverse
from ..multipliers.evaluate import varphi_at_t
from ..symbols.models import Symbol

logger = logging.getLogger(__name__)

# Relative size below which an FFT coefficient is indistinguishable from roundoff.
ROUNDOFF_FLOOR = 256 * np.finfo(float).eps


@dataclass(frozen=True, eq=False)
class Calculus:
    """Symbol, order s and grid, with the spectral weight (1 + a(|xi|^2))^{s/2} cached."""

    sym: Symbol
    s: float
    grid: Grid

    def __post_init__(self) -> None:
        if not (self.s > 0 and math.isfinite(self.s)):
            raise ParameterError(f"calculus order s must be positive, got {self.s}")
        values = self.sym.eval(self.grid.freq_sq)
        if np.any(np.isnan(values)) or np.any(values < 0):
            raise ParameterError(f"symbol {self.sym.label!r} is negative or undefined on the frequency lattice")

    @cached_property
    def log_weight(self) -> np.ndarray:
        out = 0.5 * self.s * self.sym.log1p_eval(self.grid.freq_sq)
        out.setflags(write=False)
        return out

    @cached_property
    def weight(self) -> np.ndarray:
        """w(xi) >= 1; may be inf for fast-growing symbols on fine lattices."""
        with np.errstate(over="ignore"):
            out = np.exp(self.log_weight)
        out.setflags(write=False)
        return out

    @cached_property
    def inverse_weight(self) -> np.ndarray:
        out = np.exp(-self.log_weight)
        out.setflags(write=False)
        return out

    def with_order(self, s: float) -> "Calculus":
        return Calculus(self.sym, s, self.grid)

    @property
    def beta_s(self) -> float:
        return self.sym.beta * self.s


def make_calculus(sym: Symbol, s: float, grid: Grid) -> Calculus:
    return Calculus(sym=sym, s=float(s), grid=grid)


def apply_Ts(calc: Calculus, g: Field) -> Field:
    """T_s g = F^{-1}((1 + a(|xi|^2))^{-s/2} F g)."""
    require_same_grid(calc.grid, g.grid)
    return apply_multiplier(g, calc.inverse_weight)


def _overflow_margin(grid: Grid) -> float:
    return math.log(np.finfo(float).max) - math.log(grid.size) - 1.0


def apply_A(calc: Calculus, u: Field) -> Field:
    """A u = F^{-1}((1 + a(|xi|^2))^{s/2} F u); inverse of apply_Ts.

    Coefficients at the FFT roundoff floor are dropped before the weight is applied.
    """
    require_same_grid(calc.grid, u.grid)
    grid = calc.grid
    raw = real_forward(u.values)
    mags = np.abs(raw)
    peak_mag = float(np.max(mags))
    live = mags > ROUNDOFF_FLOOR * peak_mag
    if not np.any(live):
        return Field(grid, np.zeros(grid.shape))
    log_weight = half_spectrum(grid, calc.log_weight)
    peak = float(np.max(log_weight[live] + np.log(mags[live])))
    if peak > _overflow_margin(grid):
        raise ResolutionError(
            f"spectral weight overflows (log|w u_hat| = {peak:.1f}); field is under-resolved for s={calc.s:g}"
        )
    dropped = int(np.count_nonzero(mags[~live]))
    if dropped:
        logger.debug("apply_A: %d coefficients below the roundoff floor dropped", dropped)
    product = np.zeros_like(raw)
    product[live] = np.exp(log_weight[live]) * raw[live]
    values = real_inverse(product, grid)
    if not np.all(np.isfinite(values)):
        raise ResolutionError("apply_A produced non-finite values")
    return Field(grid, values)


def apply_varphi_operator(calc: Calculus, r: float, u: Field) -> Field:
    """Lambda u = F^{-1}(phi F u), phi = (1+|xi|^2)^{r/2} (1 + a)^{-(s + 2r/beta)/2}."""
    require_same_grid(calc.grid, u.grid)
    if not r > 0:
        raise ParameterError(f"r must be positive, got {r}")
    return apply_multiplier(u, varphi_at_t(calc.sym, r, calc.s, calc.grid.freq_sq))
