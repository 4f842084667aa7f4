from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from ..calculus.operators import Calculus
from ..errors import ParameterError
from ..grid.models import Field, require_same_grid
from ..grid.norms import Exponent, parse_exponent
from ..grid.radial import shell_defect
from ..textblock import render_block

PointFn = Callable[[np.ndarray, np.ndarray], np.ndarray]

RADIAL_SAMPLE_VALUES = (-2.0, -0.5, 0.0, 0.75, 3.0)
RADIAL_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Nonlinearity:
    """V(x, y) and its partial dV/dy; x has shape (n, ...), y the trailing shape."""

    label: str
    value: PointFn
    dy: Optional[PointFn] = None

    def __call__(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.asarray(self.value(x, y), dtype=float)

    def derivative(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.dy is None:
            raise ParameterError(f"nonlinearity {self.label!r} has no y-derivative")
        return np.asarray(self.dy(x, y), dtype=float)


@dataclass(frozen=True, eq=False)
class GrowthWitness:
    """|V| <= C(|h| + |y|^alpha) and |dV/dy| <= C(|g| + |y|^{alpha-1})."""

    alpha: float
    C: float
    h: Field
    g: Optional[Field] = None
    form: str = "|V| <= C(|h| + |y|^alpha), |dV/dy| <= C(|g| + |y|^(alpha-1))"

    def __post_init__(self) -> None:
        if not (self.alpha > 1 and math.isfinite(self.alpha)):
            raise ParameterError(f"growth exponent alpha must exceed 1, got {self.alpha}")
        if not (self.C > 0 and math.isfinite(self.C)):
            raise ParameterError(f"growth constant C must be positive, got {self.C}")
        if self.g is not None:
            require_same_grid(self.h.grid, self.g.grid)


@dataclass(frozen=True, eq=False)
class Problem:
    """One instance of [1 + a(-Delta)]^{s/2} u = delta * phi * (c(x) V(x, u) + forcing)."""

    calc: Calculus
    p: Exponent
    V: Nonlinearity
    growth: Optional[GrowthWitness] = None
    forcing: Optional[Field] = None
    coefficient: Optional[Field] = None
    cutoff: Optional[Field] = None
    lipschitz: Optional[Field] = None
    delta: float = 1.0
    radial: bool = False
    initial: Optional[Field] = None
    label: str = "problem"

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", parse_exponent(self.p))
        if not (self.delta >= 0 and math.isfinite(self.delta)):
            raise ParameterError(f"coupling delta must be >= 0, got {self.delta}")
        grid = self.calc.grid
        for name in ("forcing", "coefficient", "cutoff", "lipschitz", "initial"):
            value = getattr(self, name)
            if value is not None:
                require_same_grid(grid, value.grid)
        if self.growth is not None:
            require_same_grid(grid, self.growth.h.grid)
        if self.radial:
            defect = self.radial_defect_of_rhs()
            if defect > RADIAL_TOLERANCE:
                raise ParameterError(f"radial problem but V(., y) is not radial (shell spread {defect:.3e})")

    @property
    def grid(self):
        return self.calc.grid

    @property
    def alpha(self) -> Optional[float]:
        return None if self.growth is None else self.growth.alpha

    def source(self, u: Field) -> np.ndarray:
        """c(x) V(x, u(x)) + forcing(x) on the nodes."""
        out = np.broadcast_to(self.V(self.grid.points, u.values), self.grid.shape).astype(float)
        if self.coefficient is not None:
            out = out * self.coefficient.values
        if self.forcing is not None:
            out = out + self.forcing.values
        return out

    def rhs(self, u: Field) -> Field:
        out = self.delta * self.source(u)
        if self.cutoff is not None:
            out = out * self.cutoff.values
        return Field(self.grid, out)

    def radial_defect_of_rhs(self) -> float:
        points = self.grid.points
        worst = 0.0
        for y in RADIAL_SAMPLE_VALUES:
            sampled = np.broadcast_to(self.V(points, np.full(self.grid.shape, y)), self.grid.shape)
            values = np.asarray(sampled, dtype=float)
            if self.coefficient is not None:
                values = values * self.coefficient.values
            if self.forcing is not None:
                values = values + self.forcing.values
            if self.cutoff is not None:
                values = values * self.cutoff.values
            scale = max(float(np.max(np.abs(values))), 1.0)
            worst = max(worst, shell_defect(values, self.grid) / scale)
        return worst


@dataclass(frozen=True)
class SolveSettings:
    step_tol: float = 1e-10
    residual_tol: float = 1e-8
    max_iter: Optional[int] = None
    damping: float = 1.0
    damping_floor: float = 1.0 / 16.0
    divergence_window: int = 10
    embedding_trials: int = 200
    lp_trials: int = 100
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0 < self.damping <= 1:
            raise ParameterError(f"damping must lie in (0, 1], got {self.damping}")
        if not 0 < self.damping_floor <= self.damping:
            raise ParameterError(f"damping floor must lie in (0, damping], got {self.damping_floor}")
        if self.max_iter is not None and self.max_iter < 1:
            raise ParameterError(f"max_iter must be >= 1, got {self.max_iter}")
        if self.step_tol <= 0 or self.residual_tol <= 0:
            raise ParameterError("tolerances must be positive")

    def iteration_cap(self, default: int) -> int:
        return default if self.max_iter is None else int(self.max_iter)


DEFAULT_SETTINGS = SolveSettings()


@dataclass(frozen=True)
class HistoryRow:
    iter: int
    residual: float
    h_norm: float
    lp_alpha_norm: float
    damping: float
    projection_flag: bool


@dataclass
class SolveResult:
    u: Field
    method: str
    residual_history: List[float] = field(default_factory=list)
    history: List[HistoryRow] = field(default_factory=list)
    iterations: int = 0
    converged: bool = False
    certified: bool = True
    constants: Dict[str, Any] = field(default_factory=dict)
    projection_events: int = 0
    notes: List[str] = field(default_factory=list)

    @property
    def final_residual(self) -> float:
        return self.residual_history[-1] if self.residual_history else math.inf

    def record(self, row: HistoryRow) -> None:
        self.history.append(row)
        self.residual_history.append(row.residual)
        self.iterations = row.iter

    def pairs(self) -> List[Tuple[str, Any]]:
        out: List[Tuple[str, Any]] = [
            ("method", self.method),
            ("iterations", self.iterations),
            ("converged", self.converged),
            ("certified", self.certified),
            ("residual", self.final_residual),
            ("projection_events", self.projection_events),
        ]
        out.extend(self.constants.items())
        out.extend((f"note.{i}", note) for i, note in enumerate(self.notes))
        return out

    def to_text(self) -> str:
        return render_block(self.pairs())
