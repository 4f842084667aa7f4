from __future__ import annotations

import logging
from contextlib import contextmanager
from typing import Any, Iterator, List, Optional, Sequence, Tuple

from app.application.config import RunConfig
from app.domain.entities import NonConvergedError, ParameterRejectedError, RunOutcome, STATUS_OK
from app.domain.ports import OutputFactory, OutputPort, PdfRendererPort, RunLoggerFactory, RunLogPort
from fcalc.errors import FcalcError, NonConvergenceError

logger = logging.getLogger(__name__)

Pairs = Sequence[Tuple[str, Any]]

ORIGIN_BALL_WARNING = "pure fractional symbol: multiplier certification excludes the origin ball"


@contextmanager
def translate_errors() -> Iterator[None]:
    """Re-raise numerical-core rejections as application errors."""
    try:
        yield
    except NonConvergenceError as exc:
        raise NonConvergedError(str(exc)) from exc
    except FcalcError as exc:
        raise ParameterRejectedError(str(exc)) from exc


class RunSession:
    def __init__(
        self,
        command: str,
        config: RunConfig,
        outputs: OutputFactory,
        run_logs: RunLoggerFactory,
        pdf: Optional[PdfRendererPort] = None,
    ) -> None:
        self.config = config
        self.outcome = RunOutcome(command=command)
        self.output: OutputPort = outputs.create(config.output.directory)
        self.log: RunLogPort = run_logs.create(self.output.directory)
        self.pdf = pdf
        self.sections: List[Tuple[str, List[Tuple[str, Any]]]] = []
        self.log("start", command=command, directory=self.output.directory, seed=config.solver.seed)

    def warn(self, message: str) -> None:
        logger.warning(message)
        self.outcome.messages.append(message)
        self.log("warning", message=message)

    def warn_origin_ball(self) -> None:
        self.warn(ORIGIN_BALL_WARNING)

    def write_text(self, name: str, text: str) -> str:
        path = self.output.write_text(name, text)
        self._register(name, path)
        return path

    def write_field(self, name: str, field: Any) -> str:
        path = self.output.write_field(name, field)
        self._register(name, path)
        return path

    def write_history(self, name: str, rows: Any) -> str:
        path = self.output.write_history(name, rows)
        self._register(name, path)
        return path

    def section(self, title: str, pairs: Pairs) -> None:
        self.sections.append((title, list(pairs)))

    def finish(self, status: str = STATUS_OK, summary: Optional[Pairs] = None) -> RunOutcome:
        self.outcome.status = status
        if summary is not None:
            self.outcome.summary = list(summary)
        if self.config.output.emit_pdf and self.pdf is not None:
            target = self.output.path("report.pdf")
            self.pdf.render(f"fcalc {self.outcome.command}", self.sections, target)
            self._register("report.pdf", target)
        self.log("finish", status=status, files=len(self.outcome.files))
        return self.outcome

    def _register(self, name: str, path: str) -> None:
        self.outcome.files[name] = path
        self.log("wrote", file=name)


class CommandService:
    """Shared run lifecycle: open a session, execute, translate core errors."""

    command = ""

    def __init__(
        self,
        outputs: OutputFactory,
        run_logs: RunLoggerFactory,
        pdf: Optional[PdfRendererPort] = None,
    ) -> None:
        self.outputs = outputs
        self.run_logs = run_logs
        self.pdf = pdf

    def run(self, config: RunConfig) -> RunOutcome:
        session = RunSession(self.command, config, self.outputs, self.run_logs, self.pdf)
        try:
            with translate_errors():
                return self.execute(config, session)
        except Exception as exc:
            session.log("error", kind=type(exc).__name__, message=str(exc))
            raise

    def execute(self, config: RunConfig, session: RunSession) -> RunOutcome:
        raise NotImplementedError
