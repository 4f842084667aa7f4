from __future__ import annotations

from app.application.config import RunConfig
from app.application.factories import FieldFactory, build_calculus, build_grid
from app.application.use_cases.session import CommandService, RunSession
from app.domain.entities import RunOutcome, STATUS_FAILED, STATUS_OK
from fcalc.calculus import embedding_audit, h_norm, sobolev_norm
from fcalc.grid import lp_norm
from fcalc.textblock import render_block


class NormsService(CommandService):
    command = "norms"

    def execute(self, config: RunConfig, session: RunSession) -> RunOutcome:
        cfg = config.norms
        grid = build_grid(config)
        calc = build_calculus(config, grid)
        if calc.sym.singular_at_zero:
            session.warn_origin_ball()
        u = FieldFactory(grid, config.solver.seed).build(cfg.field)
        norms = [
            ("field", cfg.field),
            ("p", cfg.p),
            ("r", cfg.r),
            ("norm.lp", lp_norm(u, cfg.p)),
            ("norm.h", h_norm(calc, u, cfg.p)),
            ("norm.sobolev", sobolev_norm(grid, u, cfg.r, cfg.p)),
            ("norm.linf", u.max_abs()),
        ]
        audit = embedding_audit(
            calc, cfg.p, cfg.r, trials=cfg.trials, delta=cfg.delta, seed=config.solver.seed, modes=cfg.modes
        )
        for row in audit.rows:
            if not row.stable:
                session.warn(f"embedding audit row {row.name} drifted by {row.drift:.3g}")
        session.write_text("norms.txt", render_block(norms) + audit.to_text())
        session.section("norms", norms)
        session.section("embedding audit", audit.pairs())
        summary = norms[3:] + [("audit.stable", audit.stable)]
        return session.finish(STATUS_OK if audit.stable else STATUS_FAILED, summary)
