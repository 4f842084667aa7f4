from __future__ import annotations

from typing import Any, Dict, Iterable, List, Optional, Tuple

from app.application.use_cases import (
    ConfigService,
    KernelService,
    MultiplierService,
    NormsService,
    PresetsService,
    SolveService,
    SymbolCheckService,
)
from app.bootstrap.container import AppContainer
from app.domain.ports import (
    ConfigRepository,
    OutputFactory,
    OutputPort,
    PdfRendererPort,
    RunLogPort,
    RunLoggerFactory,
)
from fcalc.grid import format_field_csv
from fcalc.solvers import format_history_csv


class DictConfigRepository(ConfigRepository):
    def __init__(self, sections: Optional[Dict[str, Dict[str, str]]] = None) -> None:
        self.sections = sections or {}
        self.last_path: Optional[str] = None

    def load(self, path: str) -> Dict[str, Dict[str, str]]:
        self.last_path = path
        return {name: dict(values) for name, values in self.sections.items()}


class MemoryOutput(OutputPort):
    def __init__(self, directory: str) -> None:
        self.directory = directory
        self.texts: Dict[str, str] = {}
        self.fields: Dict[str, Any] = {}
        self.histories: Dict[str, List[Any]] = {}

    def path(self, name: str) -> str:
        return f"{self.directory}/{name}"

    def write_text(self, name: str, text: str) -> str:
        self.texts[name] = text
        return self.path(name)

    def write_field(self, name: str, field: Any) -> str:
        self.fields[name] = field
        self.texts[name] = format_field_csv(field)
        return self.path(name)

    def write_history(self, name: str, rows: Iterable[Any]) -> str:
        self.histories[name] = list(rows)
        self.texts[name] = format_history_csv(self.histories[name])
        return self.path(name)


class MemoryOutputFactory(OutputFactory):
    def __init__(self) -> None:
        self.created: List[MemoryOutput] = []

    def create(self, directory: str) -> OutputPort:
        output = MemoryOutput(directory)
        self.created.append(output)
        return output

    @property
    def last(self) -> MemoryOutput:
        return self.created[-1]


class RecordingRunLog(RunLogPort):
    def __init__(self) -> None:
        self.events: List[Tuple[str, Dict[str, Any]]] = []

    def __call__(self, event: str, **fields: Any) -> None:
        self.events.append((event, fields))

    def names(self) -> List[str]:
        return [event for event, _ in self.events]


class RecordingRunLoggerFactory(RunLoggerFactory):
    def __init__(self) -> None:
        self.logs: List[RecordingRunLog] = []

    def create(self, directory: str) -> RunLogPort:
        log = RecordingRunLog()
        self.logs.append(log)
        return log


class RecordingPdf(PdfRendererPort):
    def __init__(self) -> None:
        self.calls: List[Tuple[str, List[Any], str]] = []

    def render(self, title: str, sections: List[Tuple[str, List[Tuple[str, Any]]]], output_path: str) -> None:
        self.calls.append((title, list(sections), output_path))


class FakeAdapters:
    def __init__(self) -> None:
        self.outputs = MemoryOutputFactory()
        self.run_logs = RecordingRunLoggerFactory()
        self.pdf = RecordingPdf()


def build_fake_container(
    sections: Optional[Dict[str, Dict[str, str]]] = None,
    adapters: Optional[FakeAdapters] = None,
) -> AppContainer:
    adapters = adapters or FakeAdapters()
    ports = (adapters.outputs, adapters.run_logs, adapters.pdf)
    return AppContainer(
        config=ConfigService(DictConfigRepository(sections)),
        symbols=SymbolCheckService(*ports),
        multipliers=MultiplierService(*ports),
        solve=SolveService(*ports),
        kernel=KernelService(*ports),
        norms=NormsService(*ports),
        presets=PresetsService(*ports),
    )
