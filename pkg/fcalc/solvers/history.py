"""Convergence history CSV: iter, residual, h_norm, lp_alpha_norm, damping, projection_flag."""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Iterable, Union

from ..grid.serialize import format_number
from .models import HistoryRow

HISTORY_COLUMNS = ("iter", "residual", "h_norm", "lp_alpha_norm", "damping", "projection_flag")


def format_history_csv(rows: Iterable[HistoryRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(HISTORY_COLUMNS)
    for row in rows:
        writer.writerow(
            [
                row.iter,
                format_number(row.residual),
                format_number(row.h_norm),
                format_number(row.lp_alpha_norm),
                format_number(row.damping),
                int(row.projection_flag),
            ]
        )
    return buffer.getvalue()


def write_history_csv(rows: Iterable[HistoryRow], path: Union[str, Path]) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", newline="", encoding="utf-8") as handle:
        handle.write(format_history_csv(rows))
    return target
