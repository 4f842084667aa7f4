from __future__ import annotations

from app.application.config import AUTO, RunConfig, auto_or_float
from app.application.factories import build_symbol
from app.application.use_cases.session import CommandService, RunSession
from app.domain.entities import RunOutcome, STATUS_FAILED, STATUS_OK
from fcalc.multipliers import MultiplierSpec, exp_m_spec, m_mu_spec, mikhlin_certify, varphi_spec


def build_multiplier(config: RunConfig) -> MultiplierSpec:
    cfg = config.multiplier
    if cfg.kind == "exp_m":
        return exp_m_spec(cfg.c)
    sym = build_symbol(config)
    if cfg.kind == "varphi":
        return varphi_spec(sym, cfg.r, config.symbol.s)
    mu = auto_or_float(cfg.mu, "[multiplier] mu")
    return m_mu_spec(sym, config.symbol.s if mu == AUTO else float(mu))


class MultiplierService(CommandService):
    command = "verify-multiplier"

    def execute(self, config: RunConfig, session: RunSession) -> RunOutcome:
        spec = build_multiplier(config)
        if spec.singular_at_zero:
            session.warn_origin_ball()
        report = mikhlin_certify(
            spec,
            config.grid.n,
            s=config.symbol.s,
            seed=config.solver.seed,
            directions=config.multiplier.directions,
        )
        session.write_text("multiplier_report.txt", report.to_text())
        session.section("multiplier", report.pairs())
        if not report.covered:
            session.warn(report.coverage_note)
        # outside the theorem's coverage the pass flag is informational only
        ok = report.passed or not report.covered
        summary = [
            ("multiplier", spec.label),
            ("C", report.constant),
            ("pass", report.passed),
            ("certified", report.certified),
        ]
        return session.finish(STATUS_OK if ok else STATUS_FAILED, summary)
