from __future__ import annotations

from app.application.config import RunConfig, check_symbol_precondition
from app.application.factories import build_symbol
from app.application.use_cases.session import CommandService, RunSession
from app.domain.entities import RunOutcome, STATUS_FAILED, STATUS_OK
from fcalc.symbols import check_class


class SymbolCheckService(CommandService):
    command = "check-symbol"

    def execute(self, config: RunConfig, session: RunSession) -> RunOutcome:
        sym = build_symbol(config)
        check_symbol_precondition(config, sym.beta)
        if sym.singular_at_zero:
            session.warn_origin_ball()
        report = check_class(sym, config.symbol.s, config.grid.n)
        session.write_text("class_report.txt", report.to_text())
        session.section("symbol", sym.describe())
        session.section("class check", report.pairs())
        summary = [("symbol", sym.label), ("s", config.symbol.s), ("n", config.grid.n), ("verdict", report.verdict)]
        return session.finish(STATUS_OK if report.verdict else STATUS_FAILED, summary)
