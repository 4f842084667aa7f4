from __future__ import annotations

import math
from typing import Union

import numpy as np

from ..errors import ParameterError
from .models import Field

Exponent = Union[float, int, str]


def parse_exponent(p: Exponent) -> float:
    """Accept a float, or 'inf'/'infinity' for the sup norm."""
    if isinstance(p, str):
        text = p.strip().lower()
        if text in ("inf", "infinity", "oo"):
            return math.inf
        try:
            p = float(text)
        except ValueError as exc:
            raise ParameterError(f"invalid exponent {p!r}") from exc
    value = float(p)
    if math.isnan(value) or value <= 1.0:
        raise ParameterError(f"exponent must satisfy p > 1 or p = inf, got {p}")
    return value


def lp_values(values: np.ndarray, p: float, cell_volume: float) -> float:
    mags = np.abs(values)
    peak = float(np.max(mags)) if mags.size else 0.0
    if math.isinf(p):
        return peak
    if peak == 0.0:
        return 0.0
    # factor out the peak so large exponents do not overflow
    total = float(np.sum((mags / peak) ** p)) * cell_volume
    return peak * total ** (1.0 / p)


def lp_norm(f: Field, p: Exponent) -> float:
    """(sum_j |f_j|^p h^n)^{1/p}, or max |f_j| for p = inf."""
    return lp_values(f.values, parse_exponent(p), f.grid.cell_volume)


def dual_exponent(p: float) -> float:
    if math.isinf(p):
        return 1.0
    return p / (p - 1.0)
