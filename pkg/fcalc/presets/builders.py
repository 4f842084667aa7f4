"""
Preset equations, each normalized to [1 + a(-Delta)]^{s/2} u = c(x) V(x, u) + forcing.

Equations stated as (1/kappa)(-Delta)^{gamma/2} u = -u + V absorb the -u term
into the left side: s = 2, p = 2 and a(t) = (1/kappa)|t|^{gamma/2}.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Any, List, Optional, Tuple

import numpy as np

from ..calculus.operators import Calculus
from ..errors import ParameterError, PresetCertificateError
from ..grid.models import Field, Grid, constant_field, zero_field
from ..grid.radial import shell_defect
from ..symbols.classcheck import check_ellipticity
from ..symbols.presets import fractional_symbol, pure_fractional_symbol, scaled_fractional_symbol
from ..textblock import render_block
from ..solvers.models import GrowthWitness, Nonlinearity, Problem
from .growth import GrowthFit, fit_growth_constant
from .nonlinearities import cubic, power, quadratic, sine

logger = logging.getLogger(__name__)

MASSIVE_BASIS = "radial existence for [1 + (-Delta + m^2)^{gamma/2}]^{s/2} u = V(x, u)"
L2_BASIS = "L2 ellipticity theory for (1/kappa)(-Delta)^{gamma/2} u = -u + V(x, u)"
GROWTH_SLACK = 1e-9
RADIAL_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Certificate:
    basis: str
    constraint: str
    satisfied: bool
    route: str = ""

    def pairs(self) -> List[Tuple[str, Any]]:
        out: List[Tuple[str, Any]] = [
            ("certificate.basis", self.basis),
            ("certificate.constraint", self.constraint),
            ("certificate.satisfied", self.satisfied),
        ]
        if self.route:
            out.append(("certificate.route", self.route))
        return out


@dataclass(eq=False)
class Preset:
    name: str
    problem: Problem
    certificate: Certificate
    growth_fit: GrowthFit
    solver: str = "radial"
    notes: List[str] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return self.certificate.satisfied and self.growth_fit.C <= self.problem.growth.C * (1.0 + GROWTH_SLACK)

    def pairs(self) -> List[Tuple[str, Any]]:
        growth = self.problem.growth
        out: List[Tuple[str, Any]] = [
            ("preset", self.name),
            ("solver", self.solver),
            ("symbol", self.problem.calc.sym.label),
            ("s", self.problem.calc.s),
            ("p", self.problem.p),
            ("alpha", growth.alpha),
            ("C", growth.C),
        ]
        out.extend(self.certificate.pairs())
        out.extend(self.growth_fit.pairs())
        out.append(("certified", self.certified))
        out.extend((f"note.{i}", note) for i, note in enumerate(self.notes))
        return out

    def to_text(self) -> str:
        return render_block(self.pairs())


def _enforce(preset: str, constraint: str, satisfied: bool, uncertified: bool) -> None:
    if satisfied:
        return
    if not uncertified:
        raise PresetCertificateError(preset, constraint)
    logger.warning("preset %s built outside its window (%s); results are uncertified", preset, constraint)


def _require_radial(name: str, f: Optional[Field], grid: Grid) -> None:
    if f is None:
        return
    scale = max(f.max_abs(), 1.0)
    if shell_defect(f.values, grid) > RADIAL_TOLERANCE * scale:
        raise ParameterError(f"{name} must be radial")


def _finish(name: str, problem: Problem, certificate: Certificate, uncertified: bool, notes: List[str]) -> Preset:
    fit = fit_growth_constant(problem)
    if fit.C > problem.growth.C * (1.0 + GROWTH_SLACK):
        message = f"declared growth constant C = {problem.growth.C:g} is below the sampled {fit.C:.6g}"
        if not uncertified:
            raise PresetCertificateError(name, "declared growth bounds", message)
        notes.append(message)
        logger.warning("preset %s: %s", name, message)
    if problem.forcing is None and problem.V(np.zeros((problem.grid.n, 1)), np.zeros(1))[0] == 0:
        notes.append("V(x, 0) = 0: u = 0 is an exact discrete solution (trivial branch)")
    return Preset(name=name, problem=problem, certificate=certificate, growth_fit=fit, notes=notes)


def preset_gp(
    grid: Grid,
    m: float,
    gamma: float,
    s: float,
    V: Nonlinearity,
    alpha: float,
    C: float,
    h: Field,
    g: Field,
    p: float = 2.0,
    forcing: Optional[Field] = None,
    coefficient: Optional[Field] = None,
    uncertified: bool = False,
    name: str = "gp",
) -> Preset:
    """[1 + (-Delta + m^2)^{gamma/2}]^{s/2} u = V(x, u) with declared growth (alpha, C, h, g)."""
    constraint = f"s > 4n/gamma = {4 * grid.n / gamma:.6g} (the massive symbol class excludes s = 2)"
    satisfied = s > 4.0 * grid.n / gamma
    _enforce(name, constraint, satisfied, uncertified)
    calc = Calculus(fractional_symbol(gamma, m), float(s), grid)
    problem = Problem(
        calc=calc,
        p=p,
        V=V,
        growth=GrowthWitness(alpha=alpha, C=C, h=h, g=g),
        forcing=forcing,
        coefficient=coefficient,
        radial=True,
        label=name,
    )
    certificate = Certificate(basis=MASSIVE_BASIS, constraint=constraint, satisfied=satisfied)
    return _finish(name, problem, certificate, uncertified, [])


def preset_allen_cahn(
    grid: Grid,
    m: float,
    gamma: float,
    s: float,
    kappa: float,
    rho: Field,
    p: float = 2.0,
    uncertified: bool = False,
) -> Preset:
    """kappa u^3 + rho(|x|): alpha = 3, C = max(1, 3|kappa|), h = rho, g = 0."""
    _require_radial("rho", rho, grid)
    return preset_gp(
        grid,
        m,
        gamma,
        s,
        V=cubic(kappa),
        alpha=3.0,
        C=max(1.0, 3.0 * abs(kappa)),
        h=rho,
        g=zero_field(grid),
        p=p,
        forcing=rho,
        uncertified=uncertified,
        name="allen_cahn",
    )


def preset_power(
    grid: Grid,
    m: float,
    gamma: float,
    s: float,
    beta_pow: float,
    rho: Field,
    p: float = 2.0,
    uncertified: bool = False,
) -> Preset:
    """|u|^beta u + rho(|x|): alpha = beta + 1, C = max(1, beta + 1)."""
    _require_radial("rho", rho, grid)
    return preset_gp(
        grid,
        m,
        gamma,
        s,
        V=power(beta_pow),
        alpha=beta_pow + 1.0,
        C=max(1.0, beta_pow + 1.0),
        h=rho,
        g=zero_field(grid),
        p=p,
        forcing=rho,
        uncertified=uncertified,
        name="power",
    )


def l2_window(n: int, delta_growth: float) -> float:
    """Lower end of the admissible gamma range: (n/2) delta/(1 + delta)."""
    return 0.5 * n * delta_growth / (1.0 + delta_growth)


def preset_l2_theory(
    grid: Grid,
    gamma: float,
    kappa: float,
    V: Nonlinearity,
    delta_growth: float,
    C: float,
    h: Field,
    g: Field,
    forcing: Optional[Field] = None,
    coefficient: Optional[Field] = None,
    uncertified: bool = False,
    name: str = "l2_theory",
) -> Preset:
    """[1 + (1/kappa)(-Delta)^{gamma/2}] u = V(x, u): s = p = 2, alpha = 1 + delta."""
    if not delta_growth > 0:
        raise ParameterError(f"delta_growth must be positive, got {delta_growth}")
    low = l2_window(grid.n, delta_growth)
    constraint = f"gamma > (n/2)(delta/(1+delta)) = {low:.6g}"
    satisfied = gamma > low
    _enforce(name, constraint, satisfied, uncertified)
    sym = pure_fractional_symbol(gamma, kappa)
    ellipticity = check_ellipticity(sym, grid.n)
    if not ellipticity.verdict:
        raise ParameterError(f"symbol {sym.label!r} fails the ellipticity check")
    logger.warning("%s: symbol derivatives are singular at 0; multiplier certification excludes the origin ball", name)
    problem = Problem(
        calc=Calculus(sym, 2.0, grid),
        p=2.0,
        V=V,
        growth=GrowthWitness(alpha=1.0 + delta_growth, C=C, h=h, g=g),
        forcing=forcing,
        coefficient=coefficient,
        radial=True,
        label=name,
    )
    certificate = Certificate(basis=L2_BASIS, constraint=constraint, satisfied=satisfied)
    notes = [f"ellipticity constant M = {ellipticity.g2.value:.6g}"]
    return _finish(name, problem, certificate, uncertified, notes)


def _forcing_witness(grid: Grid, forcing: Optional[Field]) -> Field:
    return zero_field(grid) if forcing is None else forcing


def preset_benjamin_ono(grid: Grid, gamma: float, forcing: Optional[Field] = None, uncertified: bool = False) -> Preset:
    """(-Delta)^{gamma/2} u = u^2 - u (+ forcing): kappa = 1, delta = 1, C = 2."""
    _require_radial("forcing", forcing, grid)
    return preset_l2_theory(
        grid,
        gamma,
        kappa=1.0,
        V=quadratic(),
        delta_growth=1.0,
        C=2.0,
        h=_forcing_witness(grid, forcing),
        g=zero_field(grid),
        forcing=forcing,
        uncertified=uncertified,
        name="benjamin_ono",
    )


def preset_cubic_l2(
    grid: Grid,
    gamma: float,
    forcing: Optional[Field] = None,
    uncertified: bool = False,
) -> Preset:
    """(-Delta)^{gamma/2} u = -u + u^3 (+ forcing): delta = 2, C = 3."""
    _require_radial("forcing", forcing, grid)
    return preset_l2_theory(
        grid,
        gamma,
        kappa=1.0,
        V=cubic(1.0),
        delta_growth=2.0,
        C=3.0,
        h=_forcing_witness(grid, forcing),
        g=zero_field(grid),
        forcing=forcing,
        uncertified=uncertified,
        name="cubic_l2",
    )


def preset_peierls_nabarro(
    grid: Grid,
    gamma: float,
    kappa: float,
    d: Field,
    delta_growth: float = 0.1,
    forcing: Optional[Field] = None,
    uncertified: bool = False,
) -> Preset:
    """(-Delta)^{gamma/2} u = -kappa u + d(|x|) sin u: V = (1/kappa) d sin u, h = g = |d|."""
    if not kappa > 0:
        raise ParameterError(f"kappa must be positive, got {kappa}")
    _require_radial("d", d, grid)
    _require_radial("forcing", forcing, grid)
    witness = Field(grid, np.abs(d.values))
    if forcing is not None:
        witness = witness + Field(grid, np.abs(forcing.values))
    return preset_l2_theory(
        grid,
        gamma,
        kappa=kappa,
        V=sine(1.0),
        delta_growth=delta_growth,
        C=1.0 / kappa if forcing is None else max(1.0, 1.0 / kappa),
        h=witness,
        g=Field(grid, np.abs(d.values)),
        forcing=forcing,
        coefficient=d / kappa,
        uncertified=uncertified,
        name="peierls_nabarro",
    )


FNLS_ROUTES = ("auto", "a0", "massive")


def fnls_window(n: int, beta: float) -> Optional[float]:
    """Lower end of the gamma window for |u|^beta u on the a0 route; None when no window exists."""
    if n == 1:
        return beta / (2.0 * (beta + 1.0))
    if n == 2:
        return beta / (beta + 1.0)
    return None


def preset_fnls(
    grid: Grid,
    m: float,
    s_nls: float,
    mu: float,
    p_pow: float,
    route: str = "auto",
    linear_split: float = 1.0,
    forcing: Optional[Field] = None,
    uncertified: bool = False,
) -> Preset:
    """[(-Delta + m^2)^{s} - m^{2s}] u + mu u = |u|^{p-2} u, gamma = 2 s.

    a0 route: the massless reading (1/mu)(-Delta)^{gamma/2} u = -u + (1/mu)|u|^beta u.
    massive route: with c = mu - m^{2s}, a fraction theta of c u stays on the left,
    [1 + (1/(theta c))(-Delta + m^2)^{gamma/2}] u = (|u|^beta u - (1 - theta) c u)/(theta c).
    """
    if route not in FNLS_ROUTES:
        raise ParameterError(f"route must be one of {FNLS_ROUTES}, got {route!r}")
    if not p_pow > 2:
        raise ParameterError(f"power p must exceed 2, got {p_pow}")
    gamma = 2.0 * s_nls
    beta = p_pow - 2.0
    n = grid.n
    _require_radial("forcing", forcing, grid)
    low = fnls_window(n, beta)
    in_window = low is not None and low < gamma < 1.0
    if route == "auto":
        route = "a0" if in_window else "massive"

    if route == "a0":
        constraint = (
            f"{low:.6g} < gamma < 1" if low is not None else f"no gamma window in dimension n = {n}"
        )
        _enforce("fnls", constraint, in_window, uncertified)
        if not mu > 0:
            raise ParameterError(f"a0 route needs mu > 0, got {mu}")
        built = preset_l2_theory(
            grid,
            gamma,
            kappa=mu,
            V=power(beta),
            delta_growth=beta,
            C=max(1.0, (beta + 1.0) / mu),
            h=_forcing_witness(grid, forcing),
            g=zero_field(grid),
            forcing=forcing,
            coefficient=constant_field(grid, 1.0 / mu),
            uncertified=uncertified,
            name="fnls",
        )
        built.certificate = Certificate(basis=L2_BASIS, constraint=constraint, satisfied=in_window, route="a0")
        if m != 0:
            note = f"m = {m:g} dropped: the a0 route solves the massless reading"
            built.notes.append(note)
            logger.warning("fnls: %s", note)
        return built

    if not 0 < linear_split <= 1:
        raise ParameterError(f"linear_split must lie in (0, 1], got {linear_split}")
    c = mu - abs(m) ** (2.0 * s_nls)
    if not c > 0:
        raise ParameterError(f"massive route needs mu - m^(2s) > 0, got {c:g}")
    theta = float(linear_split)
    scale = 1.0 / (theta * c)
    constraint = f"s > 4n/gamma = {4 * n / gamma:.6g} with s = 2"
    satisfied = 2.0 > 4.0 * n / gamma
    _enforce("fnls", constraint, satisfied, uncertified)
    leak = (1.0 - theta) * c
    V = Nonlinearity(
        label="fnls_massive",
        value=lambda x, y: scale * (np.abs(y) ** beta * y - leak * y),
        dy=lambda x, y: scale * ((beta + 1.0) * np.abs(y) ** beta - leak),
    )
    problem = Problem(
        calc=Calculus(scaled_fractional_symbol(gamma, m, scale), 2.0, grid),
        p=2.0,
        V=V,
        growth=GrowthWitness(alpha=beta + 1.0, C=max(1.0, (beta + 1.0) * scale), h=_forcing_witness(grid, forcing), g=zero_field(grid)),
        forcing=forcing,
        radial=True,
        label="fnls",
    )
    certificate = Certificate(basis=MASSIVE_BASIS, constraint=constraint, satisfied=satisfied, route="massive")
    return _finish("fnls", problem, certificate, uncertified, [f"linear split theta = {theta:g}, c = {c:.6g}"])
