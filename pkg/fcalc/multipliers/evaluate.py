from __future__ import annotations

from typing import Any, Sequence, Tuple

import numpy as np

from ..errors import ParameterError
from ..symbols.models import Symbol
from ..symbols.presets import exp_symbol, falling_product
from .expansion import expand_partial, monomial, subsets


def as_points(x: Any) -> np.ndarray:
    """Coerce a point (or batch of points) to shape (n, ...); scalars are 1-D points."""
    arr = np.asarray(x, dtype=float)
    if arr.ndim == 0:
        arr = arr.reshape(1)
    return arr


def validate_multi_index(I: Sequence[int], n: int) -> Tuple[int, ...]:
    """Axes are 0-based and must be strictly increasing (hence distinct)."""
    axes = tuple(int(i) for i in I)
    if len(set(axes)) != len(axes):
        raise ParameterError(f"multi-index {axes} repeats an axis")
    if list(axes) != sorted(axes):
        raise ParameterError(f"multi-index {axes} must be strictly increasing")
    if any(i < 0 or i >= n for i in axes):
        raise ParameterError(f"multi-index {axes} out of range for n={n}")
    return axes


def _check_mu(mu: float) -> None:
    if not mu > 0:
        raise ParameterError(f"mu must be positive, got {mu}")


def _safe_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    with np.errstate(invalid="ignore", over="ignore"):
        out = a * b
    # an underflowed multiplier kills any finite-order growth
    return np.where(a == 0.0, 0.0, out)


def m_mu_at_t(sym: Symbol, mu: float, t: np.ndarray) -> np.ndarray:
    """(1 + a(t))^{-mu/2} evaluated through log(1 + a)."""
    return np.exp(-0.5 * mu * sym.log1p_eval(t))


def eval_m_mu(sym: Symbol, mu: float, x: Any) -> np.ndarray:
    """m_{a,mu}(x) = (1 + a(|x|^2))^{-mu/2}."""
    _check_mu(mu)
    pts = as_points(x)
    return m_mu_at_t(sym, mu, np.sum(pts * pts, axis=0))


def eval_m_exp(c: float, x: Any) -> np.ndarray:
    """m_exp(x) = 1/(1 + |x|^2 e^{c|x|^2}), the mu = 2 multiplier of a(t) = t e^{ct}."""
    return eval_m_mu(exp_symbol(c), 2.0, x)


def partial_m_mu(sym: Symbol, mu: float, I: Sequence[int], x: Any) -> np.ndarray:
    """d_I m_{a,mu}(x) for distinct axes I (0-based)."""
    _check_mu(mu)
    pts = as_points(x)
    axes = validate_multi_index(I, pts.shape[0])
    if axes:
        sym.require_order(len(axes))
    m = eval_m_mu(sym, mu, pts)
    if not axes:
        return m
    with np.errstate(invalid="ignore", over="ignore", divide="ignore"):
        expansion = expand_partial(axes, pts, sym.relative_deriv, mu)
    return _safe_product(m, expansion)


def varphi_order(sym: Symbol, r: float, s: float) -> float:
    """s + 2r/beta."""
    return s + 2.0 * r / sym.beta


def _check_r(r: float) -> None:
    if not r > 0:
        raise ParameterError(f"Sobolev order r must be positive, got {r}")


def varphi_at_t(sym: Symbol, r: float, s: float, t: np.ndarray) -> np.ndarray:
    return np.exp(0.5 * r * np.log1p(t) - 0.5 * varphi_order(sym, r, s) * sym.log1p_eval(t))


def eval_varphi(sym: Symbol, r: float, s: float, x: Any) -> np.ndarray:
    """(1+|x|^2)^{r/2} / (1 + a(|x|^2))^{(s + 2r/beta)/2}."""
    _check_r(r)
    pts = as_points(x)
    return varphi_at_t(sym, r, s, np.sum(pts * pts, axis=0))


def partial_varphi(sym: Symbol, r: float, s: float, I: Sequence[int], x: Any) -> np.ndarray:
    """Leibniz over J in I: d_J (1+|x|^2)^{r/2} * d_{I\\J} m_{a, s+2r/beta}."""
    _check_r(r)
    pts = as_points(x)
    axes = validate_multi_index(I, pts.shape[0])
    mu = varphi_order(sym, r, s)
    t = np.sum(pts * pts, axis=0)
    total = np.zeros(pts.shape[1:])
    for J in subsets(axes):
        rest = tuple(i for i in axes if i not in J)
        j = len(J)
        bessel = falling_product(r / 2.0, j) * (2.0 ** j) * monomial(pts, J) * (1.0 + t) ** (r / 2.0 - j)
        total = total + _safe_product(partial_m_mu(sym, mu, rest, pts), bessel)
    return total
