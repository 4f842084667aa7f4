from __future__ import annotations

import logging
from typing import Any, Callable, List, Optional, Tuple

from app.application.config import RunConfig, auto_or_float, auto_or_none
from app.application.factories import FieldFactory, build_calculus, build_grid, build_nonlinearity
from app.application.use_cases.presets import preset_arguments
from app.application.use_cases.session import CommandService, RunSession
from app.domain.entities import ConfigError, RunOutcome, STATUS_NONCONVERGED, STATUS_OK, STATUS_UNCERTIFIED
from fcalc.errors import NonConvergenceError
from fcalc.presets import PRESETS, Preset
from fcalc.solvers import (
    GrowthWitness,
    Problem,
    SolveResult,
    SolveSettings,
    linear_problem,
    residual,
    solve_contraction,
    solve_linear,
    solve_localized,
    solve_radial,
)
from fcalc.textblock import prefixed, render_block

logger = logging.getLogger(__name__)

Runner = Callable[[], SolveResult]


def solve_settings(config: RunConfig) -> SolveSettings:
    sv = config.solver
    return SolveSettings(
        step_tol=sv.step_tol,
        residual_tol=sv.residual_tol,
        max_iter=sv.max_iter or None,
        damping=sv.damping,
        damping_floor=sv.damping_floor,
        embedding_trials=sv.trials,
        lp_trials=sv.lp_trials,
        seed=sv.seed,
    )


def _required(spec: str, key: str, mode: str) -> str:
    if not spec or not spec.strip():
        raise ConfigError(f"[equation] mode = {mode} needs [equation] {key}")
    return spec


class SolveService(CommandService):
    command = "solve"

    def execute(self, config: RunConfig, session: RunSession) -> RunOutcome:
        grid = build_grid(config)
        fields = FieldFactory(grid, config.solver.seed)
        settings = solve_settings(config)
        preset: Optional[Preset] = None
        if config.equation.mode == "preset":
            preset, problem, runner = self._preset(config, fields, settings)
        else:
            problem, runner = self._problem(config, fields, settings)
        if problem.calc.sym.singular_at_zero:
            session.warn_origin_ball()
        session.log("solve", mode=config.equation.mode, label=problem.label, grid=grid.describe())

        try:
            result = runner()
        except NonConvergenceError as exc:
            if exc.result is None:
                raise
            result = exc.result
            session.warn(str(exc))

        status = self._status(result, preset)
        constants: List[Tuple[str, Any]] = [("mode", config.equation.mode), ("label", problem.label)]
        constants.extend(result.pairs())
        constants.append(("verified_residual", residual(problem, result.u)))
        if preset is not None:
            constants.extend(prefixed("preset", preset.pairs()))
        constants.append(("status", status))

        session.write_field("solution.csv", result.u)
        session.write_history("history.csv", result.history)
        session.write_text("constants.txt", render_block(constants))
        session.section("solve", constants)
        summary = [
            ("method", result.method),
            ("iterations", result.iterations),
            ("residual", result.final_residual),
            ("converged", result.converged),
            ("certified", result.certified and (preset is None or preset.certified)),
        ]
        return session.finish(status, summary)

    @staticmethod
    def _status(result: SolveResult, preset: Optional[Preset]) -> str:
        if not result.converged:
            return STATUS_NONCONVERGED
        if not result.certified or (preset is not None and not preset.certified):
            return STATUS_UNCERTIFIED
        return STATUS_OK

    def _problem(self, config: RunConfig, fields: FieldFactory, settings: SolveSettings) -> Tuple[Problem, Runner]:
        eq, sv = config.equation, config.solver
        calc = build_calculus(config, fields.grid)
        mode = eq.mode
        if mode == "linear":
            g = fields.build(eq.rhs)
            return linear_problem(calc, g, eq.p), lambda: solve_linear(calc, g, eq.p)

        V = build_nonlinearity(config)
        common = dict(
            calc=calc,
            p=eq.p,
            V=V,
            forcing=fields.optional(eq.forcing),
            coefficient=fields.optional(eq.coefficient),
            delta=eq.delta,
            initial=fields.optional(eq.initial),
            label=f"{mode}:{V.label}",
        )
        if mode == "contraction":
            lipschitz = fields.build(_required(eq.lipschitz, "lipschitz", mode))
            prob = Problem(lipschitz=lipschitz, cutoff=fields.optional(eq.cutoff), **common)
            return prob, lambda: solve_contraction(prob, settings)
        if mode == "localized":
            growth = GrowthWitness(alpha=eq.alpha, C=eq.C, h=fields.build(eq.h))
            cutoff = fields.build(_required(eq.cutoff, "cutoff", mode))
            prob = Problem(growth=growth, cutoff=cutoff, **common)
            m_reg = auto_or_none(sv.m_reg, "[solver] m_reg")
            return prob, lambda: solve_localized(prob, m_reg=m_reg, settings=settings)
        growth = GrowthWitness(alpha=eq.alpha, C=eq.C, h=fields.build(eq.h), g=fields.build(eq.g))
        prob = Problem(growth=growth, cutoff=fields.optional(eq.cutoff), radial=True, **common)
        return prob, self._radial_runner(config, prob, settings)

    def _preset(self, config: RunConfig, fields: FieldFactory, settings: SolveSettings) -> Tuple[Preset, Problem, Runner]:
        name = config.equation.preset
        info = PRESETS.get(name)
        if info is None:
            raise ConfigError(f"[equation] preset must be one of {', '.join(PRESETS)}, got {name!r}")
        preset = info.builder(fields.grid, **preset_arguments(config, info, fields))
        for note in preset.notes:
            logger.info("preset %s: %s", name, note)
        return preset, preset.problem, self._radial_runner(config, preset.problem, settings)

    @staticmethod
    def _radial_runner(config: RunConfig, prob: Problem, settings: SolveSettings) -> Runner:
        sv = config.solver
        epsilon = auto_or_float(sv.epsilon, "[solver] epsilon")
        n_emb = auto_or_none(sv.n_emb, "[solver] n_emb")
        return lambda: solve_radial(prob, epsilon=epsilon, n_emb=n_emb, strict=sv.strict, settings=settings)
