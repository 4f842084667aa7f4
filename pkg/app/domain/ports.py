from __future__ import annotations

from typing import Any, Dict, Iterable, List, Protocol, Tuple


class ConfigRepository(Protocol):
    def load(self, path: str) -> Dict[str, Dict[str, str]]: ...


class OutputPort(Protocol):
    directory: str

    def path(self, name: str) -> str: ...
    def write_text(self, name: str, text: str) -> str: ...
    def write_field(self, name: str, field: Any) -> str: ...
    def write_history(self, name: str, rows: Iterable[Any]) -> str: ...


class OutputFactory(Protocol):
    def create(self, directory: str) -> OutputPort: ...


class RunLogPort(Protocol):
    def __call__(self, event: str, **fields: Any) -> None: ...


class RunLoggerFactory(Protocol):
    def create(self, directory: str) -> RunLogPort: ...


class PdfRendererPort(Protocol):
    def render(self, title: str, sections: List[Tuple[str, List[Tuple[str, Any]]]], output_path: str) -> None: ...
