from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import ParameterError
from ..symbols.models import Symbol
from ..symbols.presets import exp_symbol
from ..textblock import render_block
from .evaluate import eval_m_mu, eval_varphi, partial_m_mu, partial_varphi

MULTIPLIER_KINDS = ("m_mu", "varphi", "exp_m", "custom")

ValueFn = Callable[[np.ndarray], np.ndarray]
PartialFn = Callable[[Tuple[int, ...], np.ndarray], np.ndarray]


@dataclass(frozen=True, eq=False)
class MultiplierSpec:
    """A radial Fourier multiplier candidate with exact partials."""

    kind: str
    label: str
    symbol: Optional[Symbol] = None
    mu: Optional[float] = None
    r: Optional[float] = None
    s: Optional[float] = None
    value_fn: Optional[ValueFn] = None
    partial_fn: Optional[PartialFn] = None
    max_order: int = 0
    singular_at_zero: bool = False

    def value(self, x: Any) -> np.ndarray:
        if self.kind in ("m_mu", "exp_m"):
            return eval_m_mu(self.symbol, self.mu, x)
        if self.kind == "varphi":
            return eval_varphi(self.symbol, self.r, self.s, x)
        return np.asarray(self.value_fn(np.asarray(x, dtype=float)), dtype=float)

    def partial(self, I: Sequence[int], x: Any) -> np.ndarray:
        if self.kind in ("m_mu", "exp_m"):
            return partial_m_mu(self.symbol, self.mu, I, x)
        if self.kind == "varphi":
            return partial_varphi(self.symbol, self.r, self.s, I, x)
        return np.asarray(self.partial_fn(tuple(I), np.asarray(x, dtype=float)), dtype=float)

    def describe(self) -> List[Tuple[str, Any]]:
        pairs: List[Tuple[str, Any]] = [("kind", self.kind), ("label", self.label)]
        if self.symbol is not None:
            pairs.append(("symbol", self.symbol.label))
        for name in ("mu", "r", "s"):
            value = getattr(self, name)
            if value is not None:
                pairs.append((name, value))
        return pairs


def m_mu_spec(sym: Symbol, mu: float) -> MultiplierSpec:
    if not mu > 0:
        raise ParameterError(f"mu must be positive, got {mu}")
    return MultiplierSpec(
        kind="m_mu",
        label=f"m[{sym.label},mu={mu:g}]",
        symbol=sym,
        mu=float(mu),
        max_order=sym.max_order,
        singular_at_zero=sym.singular_at_zero,
    )


def varphi_spec(sym: Symbol, r: float, s: float) -> MultiplierSpec:
    if not r > 0:
        raise ParameterError(f"r must be positive, got {r}")
    return MultiplierSpec(
        kind="varphi",
        label=f"varphi[{sym.label},r={r:g},s={s:g}]",
        symbol=sym,
        r=float(r),
        s=float(s),
        max_order=sym.max_order,
        singular_at_zero=sym.singular_at_zero,
    )


def exp_m_spec(c: float) -> MultiplierSpec:
    """1/(1 + |x|^2 e^{c|x|^2}), i.e. m_{a,2} for a(t) = t e^{ct}."""
    sym = exp_symbol(c)
    return MultiplierSpec(
        kind="exp_m",
        label=f"m_exp[c={c:g}]",
        symbol=sym,
        mu=2.0,
        max_order=sym.max_order,
    )


def custom_spec(label: str, value_fn: ValueFn, partial_fn: PartialFn, max_order: int, singular_at_zero: bool = False) -> MultiplierSpec:
    return MultiplierSpec(
        kind="custom",
        label=label,
        value_fn=value_fn,
        partial_fn=partial_fn,
        max_order=int(max_order),
        singular_at_zero=singular_at_zero,
    )


@dataclass
class AlphaEntry:
    alpha: Tuple[int, ...]
    sup: float
    ratio: float
    passed: bool

    @property
    def key(self) -> str:
        return "alpha[" + ",".join(str(i) for i in self.alpha) + "]"


@dataclass
class RegimeReport:
    """Per-alpha sups over one sampling regime (with or without the origin)."""

    name: str
    entries: List[AlphaEntry] = field(default_factory=list)

    @property
    def constant(self) -> float:
        return max((e.sup for e in self.entries), default=0.0)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def entry(self, alpha: Sequence[int]) -> AlphaEntry:
        wanted = tuple(alpha)
        for e in self.entries:
            if e.alpha == wanted:
                return e
        raise KeyError(wanted)


@dataclass
class MultiplierReport:
    spec: MultiplierSpec
    n: int
    regimes: Dict[str, RegimeReport]
    primary: str
    covered: bool
    coverage_note: str
    sample_spec: str
    seed: int

    @property
    def constant(self) -> float:
        return self.regimes[self.primary].constant

    @property
    def passed(self) -> bool:
        return self.regimes[self.primary].passed

    @property
    def certified(self) -> bool:
        return self.passed and self.covered

    def pairs(self) -> List[Tuple[str, Any]]:
        out: List[Tuple[str, Any]] = list(self.spec.describe())
        out.extend([("n", self.n), ("sample_spec", self.sample_spec), ("seed", self.seed), ("primary_regime", self.primary)])
        for name, regime in self.regimes.items():
            for e in regime.entries:
                out.append((f"{name}.{e.key}.sup", e.sup))
                out.append((f"{name}.{e.key}.ratio", e.ratio))
                out.append((f"{name}.{e.key}.pass", e.passed))
            out.append((f"{name}.C", regime.constant))
            out.append((f"{name}.pass", regime.passed))
        out.extend(
            [
                ("C", self.constant),
                ("pass", self.passed),
                ("coverage", self.coverage_note),
                ("certified", self.certified),
            ]
        )
        return out

    def to_text(self) -> str:
        return render_block(self.pairs())
