from __future__ import annotations

from app.application.config import RunConfig
from app.application.factories import build_calculus
from app.application.use_cases.session import CommandService, RunSession
from app.domain.entities import RunOutcome, STATUS_OK, STATUS_UNCERTIFIED
from fcalc.calculus import kernel_K, kernel_refinement_ratio, require_kernel_hypothesis
from fcalc.errors import KernelHypothesisError
from fcalc.grid import lp_norm
from fcalc.textblock import render_block

REFINEMENT_TOLERANCE = 0.02


class KernelService(CommandService):
    command = "kernel"

    def execute(self, config: RunConfig, session: RunSession) -> RunOutcome:
        calc = build_calculus(config)
        certified = True
        try:
            require_kernel_hypothesis(calc)
        except KernelHypothesisError as exc:
            if not config.equation.uncertified:
                raise
            certified = False
            session.warn(f"{exc}; tabulating the square-integrable kernel uncertified")
        if calc.sym.singular_at_zero:
            session.warn_origin_ball()
        K = kernel_K(calc, strict=certified)
        ratio = kernel_refinement_ratio(calc, strict=certified)
        stable = abs(ratio - 1.0) <= REFINEMENT_TOLERANCE
        if not stable:
            session.warn(f"kernel L2 norm moved by {abs(ratio - 1.0):.3%} under refinement; grid may be too coarse")
        pairs = [
            ("kernel.symbol", calc.sym.label),
            ("kernel.s", calc.s),
            ("kernel.beta_s", calc.beta_s),
            ("kernel.grid", calc.grid.describe()),
            ("kernel.l2_norm", lp_norm(K, 2)),
            ("kernel.max", K.max_abs()),
            ("kernel.refinement_ratio", ratio),
            ("kernel.refinement_stable", stable),
            ("kernel.certified", certified),
        ]
        session.write_field("kernel.csv", K)
        session.write_text("constants.txt", render_block(pairs))
        session.section("kernel", pairs)
        return session.finish(STATUS_OK if certified else STATUS_UNCERTIFIED, pairs)
