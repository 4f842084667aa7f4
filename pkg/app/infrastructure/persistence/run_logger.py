from __future__ import annotations

import time
from pathlib import Path
from typing import Any

from app.domain.ports import RunLogPort, RunLoggerFactory

RUN_LOG_NAME = "run.log"


class RunLogger(RunLogPort):
    """Append-only run.log with one timestamped line per event."""

    def __init__(self, path: Path):
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)

    def __call__(self, event: str, **fields: Any) -> None:
        ts = time.strftime("%Y-%m-%d %H:%M:%S")
        details = " ".join(f"{key}={value}" for key, value in fields.items())
        with self.path.open("a", encoding="utf-8") as f:
            f.write(f"[{ts}] {event} {details}".rstrip() + "\n")


class RunLoggerFactoryImpl(RunLoggerFactory):
    def create(self, directory: str) -> RunLogPort:
        return RunLogger(Path(directory) / RUN_LOG_NAME)
