"""Named right-hand sides V(x, y) with their y-derivatives."""

from __future__ import annotations

from typing import Callable, Dict

import numpy as np

from ..errors import ParameterError
from ..solvers.models import Nonlinearity


def _radius_sq(x: np.ndarray) -> np.ndarray:
    return np.sum(np.asarray(x, dtype=float) ** 2, axis=0)


def cos_gauss() -> Nonlinearity:
    """e^{-|x|^2} cos(y); Lipschitz in y with witness e^{-|x|^2}."""
    return Nonlinearity(
        label="cos_gauss",
        value=lambda x, y: np.exp(-_radius_sq(x)) * np.cos(y),
        dy=lambda x, y: -np.exp(-_radius_sq(x)) * np.sin(y),
    )


def linear(scale: float = 1.0) -> Nonlinearity:
    return Nonlinearity(label="linear", value=lambda x, y: scale * y, dy=lambda x, y: scale + 0.0 * y)


def quadratic() -> Nonlinearity:
    return Nonlinearity(label="quadratic", value=lambda x, y: y * y, dy=lambda x, y: 2.0 * y)


def cubic(kappa: float = 1.0) -> Nonlinearity:
    return Nonlinearity(label="cubic", value=lambda x, y: kappa * y ** 3, dy=lambda x, y: 3.0 * kappa * y ** 2)


def power(beta: float) -> Nonlinearity:
    """|y|^beta y."""
    if not beta > 0:
        raise ParameterError(f"power exponent must be positive, got {beta}")
    return Nonlinearity(
        label="power",
        value=lambda x, y: np.abs(y) ** beta * y,
        dy=lambda x, y: (beta + 1.0) * np.abs(y) ** beta,
    )


def sine(scale: float = 1.0) -> Nonlinearity:
    return Nonlinearity(label="sine", value=lambda x, y: scale * np.sin(y), dy=lambda x, y: scale * np.cos(y))


NONLINEARITIES: Dict[str, Callable[..., Nonlinearity]] = {
    "cos_gauss": cos_gauss,
    "linear": linear,
    "quadratic": quadratic,
    "cubic": cubic,
    "power": power,
    "sine": sine,
}


def make_nonlinearity(name: str, **params: float) -> Nonlinearity:
    try:
        factory = NONLINEARITIES[name]
    except KeyError:
        raise ParameterError(f"unknown nonlinearity {name!r}; expected one of {sorted(NONLINEARITIES)}") from None
    return factory(**params)
