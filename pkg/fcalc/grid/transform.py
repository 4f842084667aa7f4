from __future__ import annotations

import logging

import numpy as np

from ..errors import GridError, GridMismatchError
from .models import Field, Grid, SpectralField

logger = logging.getLogger(__name__)

# Relative imaginary residue tolerated when returning to real space.
IMAG_TOLERANCE = 1e-9


def forward_transform(f: Field) -> SpectralField:
    """F(xi_k) = sum_j f(x_j) e^{-i xi_k . x_j} h^n."""
    grid = f.grid
    coeffs = grid.cell_volume * grid.phase_sign * np.fft.fftn(f.values)
    return SpectralField(grid, coeffs)


def inverse_transform(F: SpectralField) -> Field:
    """f(x_j) = (2 pi)^{-n} sum_k F(xi_k) e^{i xi_k . x_j} (pi/L)^n."""
    grid = F.grid
    if F.coeffs.shape != grid.shape:
        raise GridMismatchError(f"coefficients {F.coeffs.shape} do not fit grid {grid.describe()}")
    values = np.fft.ifftn(grid.phase_sign * F.coeffs) / grid.cell_volume
    return Field(grid, real_values(values))


def real_values(values: np.ndarray) -> np.ndarray:
    scale = max(float(np.max(np.abs(values.real))), 1.0)
    residue = float(np.max(np.abs(values.imag)))
    if residue > IMAG_TOLERANCE * scale:
        raise GridError(f"inverse transform is not real (imaginary residue {residue:.3e}); coefficients lack Hermitian symmetry")
    return values.real


def half_spectrum(grid: Grid, weight: np.ndarray) -> np.ndarray:
    """The rfftn half of a weight that is even in every frequency (FFT order).

    Index N/2 of the last axis holds the -N/2 mode, which an even weight shares
    with +N/2, so the first N/2 + 1 entries are exactly the rfft bins.
    """
    if weight.shape != grid.shape:
        raise GridMismatchError(f"weight {weight.shape} does not fit grid {grid.describe()}")
    return weight[..., : grid.N // 2 + 1]


def real_forward(values: np.ndarray) -> np.ndarray:
    return np.fft.rfftn(values, axes=tuple(range(values.ndim)))


def real_inverse(coeffs: np.ndarray, grid: Grid) -> np.ndarray:
    return np.fft.irfftn(coeffs, s=grid.shape, axes=tuple(range(grid.n)))


def apply_multiplier(f: Field, weight: np.ndarray) -> Field:
    """F^{-1}(weight * F(f)) for a real, even weight on the frequency lattice.

    The quadrature factor and phase sign cancel between the two transforms,
    so the product is formed directly on the raw half-spectrum coefficients;
    the output is real by construction.
    """
    grid = f.grid
    half = half_spectrum(grid, weight)
    return Field(grid, real_inverse(half * real_forward(f.values), grid))


def spectral_l2_norm(F: SpectralField) -> float:
    """Discrete Parseval side: ((2 pi)^{-n} sum |F|^2 (pi/L)^n)^{1/2}."""
    grid: Grid = F.grid
    factor = (grid.freq_spacing / (2.0 * np.pi)) ** grid.n
    return float(np.sqrt(factor * np.sum(np.abs(F.coeffs) ** 2)))
