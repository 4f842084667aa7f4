from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Tuple

import numpy as np

from ..errors import SymbolCapabilityError
from ..textblock import prefixed, render_block

ValueFn = Callable[[np.ndarray], np.ndarray]
DerivativeFn = Callable[[int, np.ndarray], np.ndarray]


@dataclass(frozen=True, eq=False)
class Symbol:
    """A scalar symbol a(t), t >= 0, with analytic derivatives up to max_order.

    `func` and `derivative` are vectorized closures; derivative(k, t) is only
    called for 1 <= k <= max_order.
    """

    label: str
    func: ValueFn
    derivative: DerivativeFn
    beta: float
    max_order: int
    params: Dict[str, float] = field(default_factory=dict)
    class_claimed: bool = True
    singular_at_zero: bool = False

    def eval(self, t: Any) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        with np.errstate(over="ignore"):
            return np.asarray(self.func(t), dtype=float)

    def deriv(self, k: int, t: Any) -> np.ndarray:
        if k == 0:
            return self.eval(t)
        self.require_order(k)
        t = np.asarray(t, dtype=float)
        with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
            return np.asarray(self.derivative(k, t), dtype=float)

    def require_order(self, k: int) -> None:
        if k > self.max_order:
            raise SymbolCapabilityError(self.label, k, self.max_order)

    def log_eval(self, t: Any) -> np.ndarray:
        """log a(t); -inf where a vanishes."""
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.log(self.eval(t))

    def log_abs_deriv(self, k: int, t: Any) -> np.ndarray:
        with np.errstate(divide="ignore"):
            return np.log(np.abs(self.deriv(k, t)))

    def log1p_eval(self, t: Any) -> np.ndarray:
        """log(1 + a(t))."""
        return np.log1p(self.eval(t))

    def relative_deriv(self, k: int, t: Any) -> np.ndarray:
        """a^(k)(t) / (1 + a(t))."""
        return self.deriv(k, t) / (1.0 + self.eval(t))

    def describe(self) -> List[Tuple[str, Any]]:
        pairs: List[Tuple[str, Any]] = [("label", self.label), ("beta", self.beta), ("max_order", self.max_order)]
        pairs.extend(prefixed("param", sorted(self.params.items())))
        pairs.append(("class_claimed", self.class_claimed))
        pairs.append(("singular_at_zero", self.singular_at_zero))
        return pairs


@dataclass(frozen=True, eq=False)
class ExpSymbol(Symbol):
    """t*e^{ct}; evaluated in log space so large |xi| never overflows."""

    def _rate(self) -> float:
        return float(self.params["c"])

    def log_eval(self, t: Any) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        with np.errstate(divide="ignore"):
            return np.log(t) + self._rate() * t

    def log_abs_deriv(self, k: int, t: Any) -> np.ndarray:
        self.require_order(k)
        c = self._rate()
        t = np.asarray(t, dtype=float)
        return c * t + np.log(c ** k * t + k * c ** (k - 1))

    def log1p_eval(self, t: Any) -> np.ndarray:
        # log(1 + t e^{ct}) = ct + log(t + e^{-ct})
        c = self._rate()
        t = np.asarray(t, dtype=float)
        return c * t + np.log(t + np.exp(-c * t))

    def relative_deriv(self, k: int, t: Any) -> np.ndarray:
        self.require_order(k)
        c = self._rate()
        t = np.asarray(t, dtype=float)
        return (c ** k * t + k * c ** (k - 1)) / (np.exp(-c * t) + t)


@dataclass
class ConstantFit:
    """A fitted constant over the sample ladder.

    `rung_values` holds the cumulative inf (G2) or sup (G3) up to each rung;
    `ratio` is coarse / fine over the last two rungs.
    """

    name: str
    value: float
    threshold: float
    ratio: float
    passed: bool
    stable_from: int
    exponent: float = 0.0
    rung_values: List[float] = field(default_factory=list)

    @property
    def divergence(self) -> float:
        if self.ratio == 0.0:
            return float("inf")
        return 1.0 / self.ratio

    def pairs(self) -> List[Tuple[str, Any]]:
        return [
            ("value", self.value),
            ("threshold", self.threshold),
            ("exponent", self.exponent),
            ("ratio", self.ratio),
            ("stable_from", self.stable_from),
            ("pass", self.passed),
        ]


@dataclass
class ClassReport:
    symbol: str
    g1_pass: bool
    g2: ConstantFit
    g3: List[ConstantFit]
    s_used: float
    n_used: int
    beta_used: float
    sample_spec: str
    class_claimed: bool = True
    ellipticity_only: bool = False

    @property
    def verdict(self) -> bool:
        return bool(self.g1_pass and self.g2.passed and all(fit.passed for fit in self.g3))

    def g3_for(self, k: int) -> ConstantFit:
        for fit in self.g3:
            if fit.name == f"g3.k{k}":
                return fit
        raise KeyError(k)

    def pairs(self) -> List[Tuple[str, Any]]:
        out: List[Tuple[str, Any]] = [
            ("symbol", self.symbol),
            ("s_used", self.s_used),
            ("n_used", self.n_used),
            ("beta_used", self.beta_used),
            ("sample_spec", self.sample_spec),
            ("class_claimed", self.class_claimed),
            ("ellipticity_only", self.ellipticity_only),
            ("g1.pass", self.g1_pass),
        ]
        out.extend(prefixed("g2", [("M" if k == "value" else k, v) for k, v in self.g2.pairs()]))
        for fit in self.g3:
            out.extend(prefixed(fit.name, [("N" if k == "value" else k, v) for k, v in fit.pairs()]))
        out.append(("verdict", "pass" if self.verdict else "fail"))
        return out

    def to_text(self) -> str:
        return render_block(self.pairs())
