"""
Kernel K = F^{-1}((1 + a(|xi|^2))^{-s/2}).

On the nodes x_j every frequency xi + p*(2 pi / h), p in Z^n, takes the same
value e^{i xi x_j}, so the continuum kernel sampled at the nodes equals the
discrete inverse transform of the alias-folded multiplier
sum_p M(xi + p 2pi/h). Folding is truncated to |p_i| <= P. The unfolded
kernel is the exact convolution kernel of the discrete T_s.
"""

from __future__ import annotations

import logging
import math
from typing import Optional

import numpy as np

from ..errors import KernelHypothesisError
from ..grid.models import Field, refine, require_same_grid
from ..grid.norms import lp_norm
from ..grid.transform import real_values
from ..multipliers.evaluate import m_mu_at_t
from .operators import Calculus

logger = logging.getLogger(__name__)

# Upper bound on multiplier evaluations spent on alias folding.
FOLD_BUDGET = 4.0e7
CHUNK_ELEMENTS = 2_000_000
FOLD_TAIL_TOLERANCE = 1e-18


def require_kernel_hypothesis(calc: Calculus, strict: bool = True) -> None:
    """strict: the certified range beta*s > 4n; otherwise only square integrability, beta*s > n."""
    n = calc.grid.n
    bound, label = (4 * n, "4n") if strict else (n, "n")
    if not calc.beta_s > bound * (1.0 + 1e-12):
        raise KernelHypothesisError(f"kernel requires beta*s > {label}; got beta*s = {calc.beta_s:g}, {label} = {bound}")


def default_alias_terms(calc: Calculus) -> int:
    grid = calc.grid
    side = FOLD_BUDGET ** (1.0 / grid.n) / grid.N
    return max(int((side - 1.0) / 2.0), 0)


def _alias_offsets(P: int, n: int) -> np.ndarray:
    """Nonzero integer vectors with |p_i| <= P, ordered by max |p_i|; shape (n, count)."""
    axis = np.arange(-P, P + 1)
    mesh = np.stack(np.meshgrid(*([axis] * n), indexing="ij")).reshape(n, -1)
    shells = np.max(np.abs(mesh), axis=0)
    keep = shells > 0
    mesh, shells = mesh[:, keep], shells[keep]
    return mesh[:, np.argsort(shells, kind="stable")]


def folded_multiplier(calc: Calculus, alias_terms: Optional[int] = None) -> np.ndarray:
    grid = calc.grid
    total = np.exp(-calc.log_weight).copy()
    P = default_alias_terms(calc) if alias_terms is None else int(alias_terms)
    if P <= 0:
        return total
    offsets = _alias_offsets(P, grid.n)
    logger.debug("folding %d alias vectors (P=%d) for %s", offsets.shape[1], P, calc.sym.label)
    base = grid.freq_points.reshape(grid.n, -1)
    period = 2.0 * math.pi / grid.spacing
    flat = total.reshape(-1)
    reference = float(np.max(flat))
    chunk = max(CHUNK_ELEMENTS // base.shape[1], 1)
    for start in range(0, offsets.shape[1], chunk):
        block = offsets[:, start : start + chunk]
        xi = base[:, :, None] + period * block[:, None, :]
        t = np.sum(xi * xi, axis=0)
        contribution = np.sum(m_mu_at_t(calc.sym, calc.s, t), axis=1)
        flat += contribution
        if float(np.max(contribution)) < FOLD_TAIL_TOLERANCE * reference:
            break
    return flat.reshape(grid.shape)


def _kernel_from_multiplier(calc: Calculus, multiplier: np.ndarray) -> Field:
    grid = calc.grid
    values = np.fft.ifftn(grid.phase_sign * multiplier) / grid.cell_volume
    return Field(grid, real_values(values))


def kernel_K(
    calc: Calculus,
    *,
    fold_aliases: bool = True,
    alias_terms: Optional[int] = None,
    strict: bool = True,
) -> Field:
    """K at the grid nodes, with the (2 pi)^{-n} normalization of the inverse transform."""
    require_kernel_hypothesis(calc, strict)
    if fold_aliases:
        multiplier = folded_multiplier(calc, alias_terms)
    else:
        multiplier = np.asarray(calc.inverse_weight)
    return _kernel_from_multiplier(calc, multiplier)


def kernel_refinement_ratio(calc: Calculus, *, fold_aliases: bool = True, strict: bool = True) -> float:
    """||K||_2 on (N, L) divided by ||K||_2 on (2N, 2L)."""
    coarse = lp_norm(kernel_K(calc, fold_aliases=fold_aliases, strict=strict), 2)
    fine_calc = Calculus(calc.sym, calc.s, refine(calc.grid))
    fine = lp_norm(kernel_K(fine_calc, fold_aliases=fold_aliases, strict=strict), 2)
    return coarse / fine


def convolve_with_kernel(calc: Calculus, g: Field) -> Field:
    """Periodic quadrature convolution sum_i K(x_j - x_i) g(x_i) h^n with the discrete kernel."""
    require_same_grid(calc.grid, g.grid)
    grid = calc.grid
    kernel = _kernel_from_multiplier(calc, np.asarray(calc.inverse_weight))
    # index 0 of the shifted kernel sits at x = 0
    centered = np.fft.ifftshift(kernel.values)
    product = np.fft.fftn(centered) * np.fft.fftn(g.values)
    return Field(grid, real_values(np.fft.ifftn(product)) * grid.cell_volume)
