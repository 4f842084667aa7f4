"""Empirical constants for the solvers' thresholds, inflated by a safety factor."""

from __future__ import annotations

import logging
from typing import Callable, Tuple

import numpy as np

from ..calculus.embeddings import random_band_limited_field
from ..calculus.norms import h_norm
from ..calculus.operators import Calculus
from ..errors import ParameterError
from ..grid.models import Field, constant_field
from ..grid.norms import Exponent, lp_norm, parse_exponent

logger = logging.getLogger(__name__)

SAFETY_FACTOR = 2.0
MIN_EMBEDDING_TRIALS = 100


def _sampled_max(
    calc: Calculus,
    ratio: Callable[[Field], float],
    trials: int,
    seed: int,
    radial: bool,
    modes: int,
) -> Tuple[float, float]:
    """Max ratio over the constant field plus `trials` random fields, and the max over the first half."""
    rng = np.random.default_rng(seed)
    best = ratio(constant_field(calc.grid, 1.0))
    half = best
    for index in range(trials):
        u = random_band_limited_field(calc.grid, rng, modes, radial=radial)
        if u.max_abs() > 0:
            best = max(best, ratio(u))
        if index == trials // 2 - 1:
            half = best
    return best, half


def estimate_lp_constant(calc: Calculus, p: Exponent, trials: int = 100, seed: int = 0, modes: int = 4) -> float:
    """2 x max ||u||_p / ||u||_{H^{s,p}(a)}: the L^p embedding constant used by the contraction threshold."""
    p = parse_exponent(p)
    best, _ = _sampled_max(calc, lambda u: lp_norm(u, p) / h_norm(calc, u, p), trials, seed, False, modes)
    return SAFETY_FACTOR * best


def estimate_embedding_constant(
    calc: Calculus,
    p: Exponent,
    alpha: float,
    trials: int = 200,
    seed: int = 0,
    modes: int = 4,
) -> float:
    """N_emb = 2 x max ||u||_{alpha p} / ||u||_{H^{s,p}(a)} over random radial fields."""
    if trials < MIN_EMBEDDING_TRIALS:
        raise ParameterError(f"embedding constant needs at least {MIN_EMBEDDING_TRIALS} trials, got {trials}")
    if not alpha > 1:
        raise ParameterError(f"alpha must exceed 1, got {alpha}")
    p = parse_exponent(p)
    target = alpha * p
    best, half = _sampled_max(calc, lambda u: lp_norm(u, target) / h_norm(calc, u, p), trials, seed, True, modes)
    if half > 0:
        logger.debug("N_emb sample drift %.3g over %d trials", (best - half) / half, trials)
    return SAFETY_FACTOR * best
