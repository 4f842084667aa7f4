from __future__ import annotations

import sys
from typing import Any, Iterable, Mapping, Tuple

from app.domain.entities import RunOutcome

STATUS_LABELS = {
    "ok": "OK",
    "failed": "CHECK FAILED",
    "uncertified": "CONVERGED (UNCERTIFIED)",
    "nonconverged": "NOT CONVERGED",
}


def print_header(title: str) -> None:
    print("\n" + "=" * 60)
    print(f"  {title}")
    print("=" * 60)


def print_pairs(pairs: Iterable[Tuple[str, Any]]) -> None:
    items = list(pairs)
    if not items:
        return
    width = max(len(key) for key, _ in items)
    for key, value in items:
        print(f"  {key:<{width}}  {value}")


def print_files(files: Mapping[str, str]) -> None:
    for name, path in files.items():
        print(f"  -> {name}: {path}")


def print_error(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def print_outcome(outcome: RunOutcome) -> None:
    print_header(f"{outcome.command}: {STATUS_LABELS.get(outcome.status, outcome.status)}")
    print_pairs(outcome.summary)
    for message in outcome.messages:
        print(f"  ! {message}")
    print_files(outcome.files)
