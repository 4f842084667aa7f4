"""Builds fcalc objects from a RunConfig, including the field-spec grammar."""

from __future__ import annotations

import re
from pathlib import Path
from typing import Callable, Dict, List, Optional

import numpy as np

from app.application.config import RunConfig
from app.domain.entities import ConfigError
from fcalc.calculus import Calculus, random_band_limited_field
from fcalc.grid import Field, Grid, constant_field, make_grid, radial_field, read_field_csv, zero_field
from fcalc.presets import make_nonlinearity
from fcalc.solvers import Nonlinearity
from fcalc.symbols import (
    Symbol,
    exp_symbol,
    fractional_symbol,
    laplace_symbol,
    oscillatory_symbol,
    pure_fractional_symbol,
    scaled_fractional_symbol,
)

FIELD_SPEC_RE = re.compile(r"^\s*([a-z_]+)\s*(?:\((.*)\))?\s*$")
FIELD_ARITY = {
    "zero": (0, 0),
    "constant": (1, 1),
    "gaussian": (0, 2),
    "bump": (0, 2),
    "cosine": (0, 2),
    "random": (0, 2),
    "radial_random": (0, 2),
    "file": (1, 1),
}
NONLINEARITY_PARAMS = {
    "cos_gauss": (),
    "linear": ("scale",),
    "quadratic": (),
    "cubic": ("kappa",),
    "power": ("beta",),
    "sine": ("scale",),
}


def build_grid(config: RunConfig) -> Grid:
    return make_grid(config.grid.n, config.grid.N, config.grid.L)


def build_symbol(config: RunConfig) -> Symbol:
    cfg = config.symbol
    builders: Dict[str, Callable[[], Symbol]] = {
        "fractional": lambda: fractional_symbol(cfg.gamma, cfg.m),
        "scaled_fractional": lambda: scaled_fractional_symbol(cfg.gamma, cfg.m, cfg.scale),
        "pure_fractional": lambda: pure_fractional_symbol(cfg.gamma, cfg.kappa),
        "laplace": laplace_symbol,
        "exp": lambda: exp_symbol(cfg.c),
        "oscillatory": oscillatory_symbol,
    }
    return builders[cfg.kind]()


def build_calculus(config: RunConfig, grid: Optional[Grid] = None) -> Calculus:
    return Calculus(build_symbol(config), float(config.symbol.s), grid or build_grid(config))


def build_nonlinearity(config: RunConfig) -> Nonlinearity:
    eq = config.equation
    name = eq.nonlinearity
    if name not in NONLINEARITY_PARAMS:
        raise ConfigError(f"[equation] nonlinearity must be one of {', '.join(NONLINEARITY_PARAMS)}, got {name!r}")
    available = {"scale": eq.nl_scale, "kappa": eq.nl_kappa, "beta": eq.nl_beta}
    return make_nonlinearity(name, **{key: available[key] for key in NONLINEARITY_PARAMS[name]})


def _args(name: str, raw: Optional[str], spec: str) -> List[str]:
    parts = [] if raw is None or not raw.strip() else [part.strip() for part in raw.split(",")]
    low, high = FIELD_ARITY[name]
    if not low <= len(parts) <= high:
        raise ConfigError(f"field spec {spec!r}: {name} takes {low}..{high} arguments, got {len(parts)}")
    return parts


def _numbers(parts: List[str], defaults: List[float], spec: str) -> List[float]:
    values = list(defaults)
    for idx, part in enumerate(parts):
        try:
            values[idx] = float(part)
        except ValueError:
            raise ConfigError(f"field spec {spec!r}: {part!r} is not a number") from None
    return values


def _bump(amp: float, radius: float) -> Callable[[np.ndarray], np.ndarray]:
    def profile(r: np.ndarray) -> np.ndarray:
        q = np.clip(r / radius, 0.0, 1.0)
        out = np.zeros_like(r)
        inside = q < 1.0
        out[inside] = amp * np.exp(1.0 - 1.0 / (1.0 - q[inside] ** 2))
        return out

    return profile


class FieldFactory:
    """Parses field specs such as ``gaussian(1, 0.5)`` onto one grid.

    Random specs draw from one generator seeded once per factory, so a config
    always produces the same fields in the same order.
    """

    def __init__(self, grid: Grid, seed: int = 0, base_dir: Optional[Path] = None) -> None:
        self.grid = grid
        self.rng = np.random.default_rng(seed)
        self.base_dir = base_dir

    def build(self, spec: str) -> Field:
        match = FIELD_SPEC_RE.match(spec or "")
        if not match or match.group(1) not in FIELD_ARITY:
            raise ConfigError(f"unrecognized field spec {spec!r}; expected one of {', '.join(FIELD_ARITY)}")
        name, raw = match.group(1), match.group(2)
        parts = _args(name, raw, spec)
        grid = self.grid
        if name == "zero":
            return zero_field(grid)
        if name == "file":
            return self._from_file(parts[0])
        if name == "constant":
            (value,) = _numbers(parts, [0.0], spec)
            return constant_field(grid, value)
        if name == "gaussian":
            amp, width = _numbers(parts, [1.0, 1.0], spec)
            self._positive(width, "width", spec)
            return radial_field(grid, lambda r: amp * np.exp(-(r ** 2) / (2.0 * width ** 2)))
        if name == "bump":
            amp, radius = _numbers(parts, [1.0, 1.0], spec)
            self._positive(radius, "radius", spec)
            return radial_field(grid, _bump(amp, radius))
        if name == "cosine":
            k, amp = _numbers(parts, [1.0, 1.0], spec)
            freq = k * np.pi / grid.L
            return Field(grid, amp * np.cos(freq * grid.points[0]))
        amp, modes = _numbers(parts, [1.0, 4.0], spec)
        if modes < 1 or modes != int(modes):
            raise ConfigError(f"field spec {spec!r}: modes must be a positive integer")
        return random_band_limited_field(grid, self.rng, modes=int(modes), radial=name == "radial_random", amplitude=amp)

    def optional(self, spec: str) -> Optional[Field]:
        return self.build(spec) if spec and spec.strip() else None

    def _from_file(self, raw_path: str) -> Field:
        path = Path(raw_path.strip().strip("'\""))
        if not path.is_absolute() and self.base_dir is not None:
            path = self.base_dir / path
        try:
            f = read_field_csv(path)
        except FileNotFoundError:
            raise ConfigError(f"field file not found: {path}") from None
        if not f.grid.compatible(self.grid):
            raise ConfigError(f"field file {path} is on {f.grid.describe()}, expected {self.grid.describe()}")
        return Field(self.grid, f.values)

    @staticmethod
    def _positive(value: float, name: str, spec: str) -> None:
        if not value > 0:
            raise ConfigError(f"field spec {spec!r}: {name} must be positive")
