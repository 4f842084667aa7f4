from __future__ import annotations

import inspect
from typing import Any, Callable, Dict

from app.application.config import RunConfig
from app.application.factories import FieldFactory, build_grid, build_nonlinearity
from app.application.use_cases.session import CommandService, RunSession
from app.domain.entities import RunOutcome, STATUS_OK
from fcalc.errors import FcalcError
from fcalc.grid import Grid
from fcalc.presets import PresetInfo, list_presets
from fcalc.textblock import render_block


def preset_arguments(config: RunConfig, info: PresetInfo, fields: FieldFactory) -> Dict[str, Any]:
    """Keyword arguments for a preset builder, drawn from the config in signature order."""
    sym, eq = config.symbol, config.equation
    sources: Dict[str, Callable[[], Any]] = {
        "m": lambda: sym.m,
        "gamma": lambda: sym.gamma,
        "s": lambda: sym.s,
        "kappa": lambda: sym.kappa,
        "p": lambda: eq.p,
        "V": lambda: build_nonlinearity(config),
        "alpha": lambda: eq.alpha,
        "C": lambda: eq.C,
        "h": lambda: fields.build(eq.h),
        "g": lambda: fields.build(eq.g),
        "rho": lambda: fields.build(eq.rho),
        "d": lambda: fields.build(eq.d),
        "forcing": lambda: fields.optional(eq.forcing),
        "coefficient": lambda: fields.optional(eq.coefficient),
        "beta_pow": lambda: eq.beta_pow,
        "delta_growth": lambda: eq.delta_growth,
        "s_nls": lambda: eq.s_nls,
        "mu": lambda: eq.mu,
        "p_pow": lambda: eq.p_pow,
        "route": lambda: eq.route,
        "linear_split": lambda: eq.linear_split,
        "uncertified": lambda: eq.uncertified,
    }
    kwargs: Dict[str, Any] = {}
    for name in inspect.signature(info.builder).parameters:
        if name in sources:
            kwargs[name] = sources[name]()
    return kwargs


class PresetsService(CommandService):
    command = "presets"

    def execute(self, config: RunConfig, session: RunSession) -> RunOutcome:
        grid: Grid = build_grid(config)
        lines = []
        certified = 0
        infos = list_presets()
        for info in infos:
            pairs = info.pairs()
            fields = FieldFactory(grid, config.solver.seed)
            try:
                preset = info.builder(grid, **preset_arguments(config, info, fields))
            except FcalcError as exc:
                pairs.append((f"{info.name}.status", "rejected"))
                pairs.append((f"{info.name}.reason", str(exc)))
            else:
                certified += int(preset.certified)
                pairs.append((f"{info.name}.status", "certified" if preset.certified else "uncertified"))
                pairs.extend((f"{info.name}.{key}", value) for key, value in preset.certificate.pairs())
                pairs.append((f"{info.name}.growth.C", preset.growth_fit.C))
            session.section(info.name, pairs)
            lines.append(render_block(pairs))
        session.write_text("presets.txt", "".join(lines))
        summary = [("presets", len(infos)), ("certified", certified), ("grid", grid.describe())]
        return session.finish(STATUS_OK, summary)
