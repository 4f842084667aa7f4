from __future__ import annotations

from pathlib import Path
from typing import Any, Iterable

from app.domain.entities import OutputError
from app.domain.ports import OutputFactory, OutputPort
from fcalc.grid import write_field_csv
from fcalc.solvers import write_history_csv
from .data_paths import resolve_output_dir


class OutputDirectory(OutputPort):
    def __init__(self, directory: Path) -> None:
        self.root = Path(directory)
        try:
            self.root.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise OutputError(f"cannot create output directory {self.root}: {exc}") from exc
        self.directory = str(self.root)

    def path(self, name: str) -> str:
        return str(self.root / name)

    def write_text(self, name: str, text: str) -> str:
        target = self.root / name
        try:
            target.write_text(text, encoding="utf-8")
        except OSError as exc:
            raise OutputError(f"cannot write {target}: {exc}") from exc
        return str(target)

    def write_field(self, name: str, field: Any) -> str:
        try:
            return str(write_field_csv(field, self.root / name))
        except OSError as exc:
            raise OutputError(f"cannot write {self.root / name}: {exc}") from exc

    def write_history(self, name: str, rows: Iterable[Any]) -> str:
        try:
            return str(write_history_csv(list(rows), self.root / name))
        except OSError as exc:
            raise OutputError(f"cannot write {self.root / name}: {exc}") from exc


class OutputDirectoryFactory(OutputFactory):
    def create(self, directory: str) -> OutputPort:
        return OutputDirectory(resolve_output_dir(directory))
