from __future__ import annotations

import math

import numpy as np

from ..errors import ParameterError
from ..grid.models import Field, Grid, require_same_grid
from ..grid.norms import Exponent, lp_norm
from ..grid.transform import apply_multiplier
from .operators import Calculus, apply_A


def h_norm(calc: Calculus, u: Field, p: Exponent) -> float:
    """||u||_{H^{s,p}(a)} = ||A u||_{L^p}."""
    return lp_norm(apply_A(calc, u), p)


def bessel_weight(grid: Grid, r: float) -> np.ndarray:
    return (1.0 + grid.freq_sq) ** (0.5 * r)


def sobolev_norm(grid: Grid, u: Field, r: float, p: Exponent) -> float:
    """Bessel-potential norm ||F^{-1}((1+|xi|^2)^{r/2} F u)||_{L^p}."""
    require_same_grid(grid, u.grid)
    if not (r >= 0 and math.isfinite(r)):
        raise ParameterError(f"Sobolev order must be >= 0, got {r}")
    if r == 0:
        return lp_norm(u, p)
    return lp_norm(apply_multiplier(u, bessel_weight(grid, r)), p)
