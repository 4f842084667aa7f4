"""Typed run configuration built from INI sections."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields, replace
from typing import Any, Dict, Mapping, Optional, Union

from app.domain.entities import ConfigError

AUTO = "auto"

SYMBOL_KINDS = ("fractional", "scaled_fractional", "pure_fractional", "laplace", "exp", "oscillatory")
MULTIPLIER_KINDS = ("m_mu", "varphi", "exp_m")
EQUATION_MODES = ("linear", "contraction", "localized", "radial", "preset")


@dataclass(frozen=True)
class GridConfig:
    n: int = 1
    N: int = 256
    L: float = 20.0


@dataclass(frozen=True)
class SymbolConfig:
    kind: str = "fractional"
    gamma: float = 0.5
    m: float = 1.0
    c: float = 1.0
    kappa: float = 1.0
    scale: float = 1.0
    s: float = 17.0


@dataclass(frozen=True)
class MultiplierConfig:
    kind: str = "m_mu"
    mu: str = AUTO
    r: float = 1.0
    c: float = 1.0
    directions: int = 16


@dataclass(frozen=True)
class EquationConfig:
    mode: str = "linear"
    preset: str = ""
    p: float = 2.0
    alpha: float = 2.0
    C: float = 1.0
    delta: float = 1.0
    nonlinearity: str = "cos_gauss"
    nl_kappa: float = 1.0
    nl_beta: float = 2.0
    nl_scale: float = 1.0
    rhs: str = "gaussian(1, 1)"
    forcing: str = ""
    coefficient: str = ""
    h: str = "zero"
    g: str = "zero"
    lipschitz: str = ""
    cutoff: str = ""
    initial: str = ""
    rho: str = "bump(0.01, 2)"
    d: str = "bump(0.1, 2)"
    beta_pow: float = 2.0
    delta_growth: float = 0.1
    s_nls: float = 0.25
    mu: float = 1.0
    p_pow: float = 4.0
    route: str = "auto"
    linear_split: float = 1.0
    uncertified: bool = False


@dataclass(frozen=True)
class SolverConfig:
    epsilon: str = AUTO
    n_emb: str = AUTO
    m_reg: str = AUTO
    step_tol: float = 1e-10
    residual_tol: float = 1e-8
    max_iter: int = 0
    damping: float = 1.0
    damping_floor: float = 0.0625
    trials: int = 200
    lp_trials: int = 100
    seed: int = 0
    strict: bool = False


@dataclass(frozen=True)
class NormsConfig:
    field: str = "random(1, 4)"
    p: float = 2.0
    r: float = 1.0
    delta: float = 0.0
    trials: int = 100
    modes: int = 4


@dataclass(frozen=True)
class OutputConfig:
    directory: str = "runs/latest"
    emit_pdf: bool = False


@dataclass(frozen=True)
class RunConfig:
    grid: GridConfig = field(default_factory=GridConfig)
    symbol: SymbolConfig = field(default_factory=SymbolConfig)
    multiplier: MultiplierConfig = field(default_factory=MultiplierConfig)
    equation: EquationConfig = field(default_factory=EquationConfig)
    solver: SolverConfig = field(default_factory=SolverConfig)
    norms: NormsConfig = field(default_factory=NormsConfig)
    output: OutputConfig = field(default_factory=OutputConfig)


SECTIONS = {
    "grid": GridConfig,
    "symbol": SymbolConfig,
    "multiplier": MultiplierConfig,
    "equation": EquationConfig,
    "solver": SolverConfig,
    "norms": NormsConfig,
    "output": OutputConfig,
}

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


def _coerce(section: str, key: str, raw: str, default: Any) -> Any:
    text = raw.strip()
    where = f"[{section}] {key}"
    if isinstance(default, bool):
        lowered = text.lower()
        if lowered in _TRUE:
            return True
        if lowered in _FALSE:
            return False
        raise ConfigError(f"{where}: expected a boolean, got {raw!r}")
    if isinstance(default, int):
        try:
            return int(text)
        except ValueError:
            raise ConfigError(f"{where}: expected an integer, got {raw!r}") from None
    if isinstance(default, float):
        try:
            value = float(text)
        except ValueError:
            raise ConfigError(f"{where}: expected a number, got {raw!r}") from None
        if math.isnan(value):
            raise ConfigError(f"{where}: NaN is not allowed")
        return value
    return text


def _build_section(name: str, values: Mapping[str, str]) -> Any:
    cls = SECTIONS[name]
    defaults = {f.name: f.default for f in fields(cls)}
    kwargs: Dict[str, Any] = {}
    for key, raw in values.items():
        if key not in defaults:
            raise ConfigError(f"unknown key {key!r} in section [{name}]")
        kwargs[key] = _coerce(name, key, raw, defaults[key])
    return cls(**kwargs)


def auto_or_float(value: str, where: str) -> Union[str, float]:
    text = value.strip()
    if text.lower() == AUTO:
        return AUTO
    try:
        number = float(text)
    except ValueError:
        raise ConfigError(f"{where}: expected a number or 'auto', got {value!r}") from None
    if not (number > 0 and math.isfinite(number)):
        raise ConfigError(f"{where}: must be positive and finite, got {value!r}")
    return number


def auto_or_none(value: str, where: str) -> Optional[float]:
    parsed = auto_or_float(value, where)
    return None if parsed == AUTO else float(parsed)


def validate(config: RunConfig) -> RunConfig:
    grid = config.grid
    if grid.n not in (1, 2, 3):
        raise ConfigError(f"[grid] n must be 1, 2 or 3, got {grid.n}")
    if grid.N < 4 or grid.N % 2:
        raise ConfigError(f"[grid] N must be even and >= 4, got {grid.N}")
    if not (grid.L > 0 and math.isfinite(grid.L)):
        raise ConfigError(f"[grid] L must be positive, got {grid.L}")
    if config.symbol.kind not in SYMBOL_KINDS:
        raise ConfigError(f"[symbol] kind must be one of {', '.join(SYMBOL_KINDS)}, got {config.symbol.kind!r}")
    if not config.symbol.s > 0:
        raise ConfigError(f"[symbol] s must be positive, got {config.symbol.s}")
    if config.multiplier.kind not in MULTIPLIER_KINDS:
        raise ConfigError(f"[multiplier] kind must be one of {', '.join(MULTIPLIER_KINDS)}, got {config.multiplier.kind!r}")
    if config.multiplier.directions < 1:
        raise ConfigError("[multiplier] directions must be >= 1")
    mode = config.equation.mode
    if mode not in EQUATION_MODES:
        raise ConfigError(f"[equation] mode must be one of {', '.join(EQUATION_MODES)}, got {mode!r}")
    if mode == "preset" and not config.equation.preset:
        raise ConfigError("[equation] mode = preset needs a preset name")
    if not config.equation.p > 1:
        raise ConfigError(f"[equation] p must be > 1, got {config.equation.p}")
    if not config.norms.p > 1:
        raise ConfigError(f"[norms] p must be > 1, got {config.norms.p}")
    if config.solver.max_iter < 0:
        raise ConfigError("[solver] max_iter must be >= 0 (0 keeps the solver default)")
    if config.solver.trials < 1 or config.solver.lp_trials < 1 or config.norms.trials < 1:
        raise ConfigError("trial counts must be >= 1")
    auto_or_float(config.solver.epsilon, "[solver] epsilon")
    auto_or_float(config.solver.n_emb, "[solver] n_emb")
    auto_or_float(config.solver.m_reg, "[solver] m_reg")
    auto_or_float(config.multiplier.mu, "[multiplier] mu")
    if not config.output.directory.strip():
        raise ConfigError("[output] directory must not be empty")
    return config


def build_run_config(sections: Mapping[str, Mapping[str, str]]) -> RunConfig:
    built: Dict[str, Any] = {}
    for name, values in sections.items():
        if name not in SECTIONS:
            raise ConfigError(f"unknown section [{name}]")
        built[name] = _build_section(name, values)
    return validate(RunConfig(**built))


def apply_overrides(
    config: RunConfig,
    *,
    out: Optional[str] = None,
    seed: Optional[int] = None,
    uncertified: bool = False,
) -> RunConfig:
    if out:
        config = replace(config, output=replace(config.output, directory=out))
    if seed is not None:
        if seed < 0:
            raise ConfigError(f"--seed must be >= 0, got {seed}")
        config = replace(config, solver=replace(config.solver, seed=int(seed)))
    if uncertified:
        config = replace(config, equation=replace(config.equation, uncertified=True))
    return config


def check_symbol_precondition(config: RunConfig, beta: float) -> None:
    product = beta * config.symbol.s
    if product < 4 * config.grid.n:
        raise ConfigError(f"class check needs beta*s >= 4n, got {product:g} < {4 * config.grid.n}")
