from __future__ import annotations

import math

import numpy as np

from ..errors import ParameterError
from .models import ExpSymbol, Symbol

# Analytic closures are exact at every order; this caps what callers may ask for.
POWER_SYMBOL_MAX_ORDER = 6


def falling_product(x: float, k: int) -> float:
    """prod_{j<k} (x - j)."""
    out = 1.0
    for j in range(k):
        out *= x - j
    return out


def _power_symbol(label: str, order: float, shift: float, scale: float, /, **params: float) -> Symbol:
    half = order / 2.0

    def func(t: np.ndarray) -> np.ndarray:
        return scale * (np.abs(t) + shift) ** half

    def derivative(k: int, t: np.ndarray) -> np.ndarray:
        return scale * falling_product(half, k) * (np.abs(t) + shift) ** (half - k)

    return Symbol(
        label=label,
        func=func,
        derivative=derivative,
        beta=order,
        max_order=POWER_SYMBOL_MAX_ORDER,
        params=dict(params),
        class_claimed=shift > 0,
        singular_at_zero=shift == 0,
    )


def _check_gamma(gamma: float) -> None:
    if not 0.0 < gamma < 1.0:
        raise ParameterError(f"gamma must lie in (0, 1), got {gamma}")


def fractional_symbol(gamma: float, m: float) -> Symbol:
    """a(t) = (|t| + m^2)^{gamma/2}, m != 0."""
    _check_gamma(gamma)
    if m == 0 or not math.isfinite(m):
        raise ParameterError("mass m must be nonzero; use pure_fractional_symbol for m = 0")
    return _power_symbol("fractional", gamma, float(m) ** 2, 1.0, gamma=gamma, m=m)


def scaled_fractional_symbol(gamma: float, m: float, scale: float) -> Symbol:
    """scale * (|t| + m^2)^{gamma/2}."""
    _check_gamma(gamma)
    if m == 0:
        raise ParameterError("mass m must be nonzero")
    if not scale > 0:
        raise ParameterError(f"scale must be positive, got {scale}")
    return _power_symbol("scaled_fractional", gamma, float(m) ** 2, float(scale), gamma=gamma, m=m, scale=scale)


def pure_fractional_symbol(gamma: float, kappa: float = 1.0) -> Symbol:
    """a0(t) = (1/kappa)|t|^{gamma/2}; derivatives blow up at t = 0."""
    _check_gamma(gamma)
    if not kappa > 0:
        raise ParameterError(f"kappa must be positive, got {kappa}")
    return _power_symbol("pure_fractional", gamma, 0.0, 1.0 / kappa, gamma=gamma, kappa=kappa)


def laplace_symbol() -> Symbol:
    """a(t) = t: the Bessel potential reference symbol."""

    def derivative(k: int, t: np.ndarray) -> np.ndarray:
        return np.full_like(t, 1.0 if k == 1 else 0.0)

    return Symbol(
        label="laplace",
        func=lambda t: np.array(t, dtype=float, copy=True),
        derivative=derivative,
        beta=2.0,
        max_order=POWER_SYMBOL_MAX_ORDER,
    )


def exp_symbol(c: float) -> Symbol:
    """a(t) = t e^{ct}; a multiplier candidate that is not in any symbol class."""
    if not c > 0:
        raise ParameterError(f"rate c must be positive, got {c}")
    c = float(c)

    def derivative(k: int, t: np.ndarray) -> np.ndarray:
        return np.exp(c * t) * (c ** k * t + k * c ** (k - 1))

    return ExpSymbol(
        label="exp",
        func=lambda t: t * np.exp(c * t),
        derivative=derivative,
        beta=2.0,
        max_order=POWER_SYMBOL_MAX_ORDER,
        params={"c": c},
        class_claimed=False,
    )


def oscillatory_symbol() -> Symbol:
    """a(t) = t (2 + sin(t^3)): elliptic of order 2, derivatives grow like t^3.

    Shipped as the counterexample whose derivative bound fails.
    """

    def func(t: np.ndarray) -> np.ndarray:
        return t * (2.0 + np.sin(t ** 3))

    def derivative(k: int, t: np.ndarray) -> np.ndarray:
        s3 = np.sin(t ** 3)
        c3 = np.cos(t ** 3)
        if k == 1:
            return 2.0 + s3 + 3.0 * t ** 3 * c3
        if k == 2:
            return 12.0 * t ** 2 * c3 - 9.0 * t ** 5 * s3
        return 24.0 * t * c3 - 81.0 * t ** 4 * s3 - 27.0 * t ** 7 * c3

    return Symbol(
        label="oscillatory",
        func=func,
        derivative=derivative,
        beta=2.0,
        max_order=3,
        class_claimed=False,
    )


SYMBOL_KINDS = ("fractional", "scaled_fractional", "pure_fractional", "laplace", "exp", "oscillatory")
