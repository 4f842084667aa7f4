from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, List, Tuple

import numpy as np

from ..errors import ParameterError
from ..solvers.models import Problem

GROWTH_SAMPLES = 10_000
Y_RANGE = 5.0


@dataclass(frozen=True)
class GrowthFit:
    """Smallest C consistent with the sampled growth inequalities."""

    C: float
    value_ratio: float
    derivative_ratio: float
    samples: int
    seed: int

    def pairs(self) -> List[Tuple[str, Any]]:
        return [
            ("growth.C_fit", self.C),
            ("growth.value_ratio", self.value_ratio),
            ("growth.derivative_ratio", self.derivative_ratio),
            ("growth.samples", self.samples),
            ("growth.seed", self.seed),
        ]


def _max_ratio(numerator: np.ndarray, denominator: np.ndarray) -> float:
    numerator = np.abs(numerator)
    zero = denominator == 0
    if np.any(zero & (numerator > 0)):
        return math.inf
    live = ~zero
    if not np.any(live):
        return 0.0
    return float(np.max(numerator[live] / denominator[live]))


def fit_growth_constant(problem: Problem, samples: int = GROWTH_SAMPLES, seed: int = 0) -> GrowthFit:
    """Sample (x, y) over grid nodes x [-5, 5] and fit C in the declared growth bounds."""
    growth = problem.growth
    if growth is None:
        raise ParameterError("problem declares no growth witness")
    grid = problem.grid
    rng = np.random.default_rng(seed)
    idx = rng.integers(0, grid.size, size=samples)
    y = rng.uniform(-Y_RANGE, Y_RANGE, size=samples)
    x = grid.points.reshape(grid.n, -1)[:, idx]

    coef = 1.0 if problem.coefficient is None else problem.coefficient.values.ravel()[idx]
    value = coef * problem.V(x, y)
    if problem.forcing is not None:
        value = value + problem.forcing.values.ravel()[idx]
    alpha = growth.alpha
    value_ratio = _max_ratio(value, np.abs(growth.h.values.ravel()[idx]) + np.abs(y) ** alpha)

    derivative_ratio = 0.0
    if growth.g is not None and problem.V.dy is not None:
        slope = coef * problem.V.derivative(x, y)
        derivative_ratio = _max_ratio(slope, np.abs(growth.g.values.ravel()[idx]) + np.abs(y) ** (alpha - 1.0))
    return GrowthFit(
        C=max(value_ratio, derivative_ratio),
        value_ratio=value_ratio,
        derivative_ratio=derivative_ratio,
        samples=int(samples),
        seed=int(seed),
    )
