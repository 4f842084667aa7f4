"""
Field CSV format
================
Header ``# n=<n> N=<N> L=<L>``, then one row per node in row-major order:
coordinates followed by the value, 17 significant digits.
"""

from __future__ import annotations

import csv
import io
import re
from pathlib import Path
from typing import List, Union

import numpy as np

from ..errors import GridError
from .models import Field, Grid, make_grid

HEADER_RE = re.compile(r"^#\s*n=(\d+)\s+N=(\d+)\s+L=(\S+)\s*$")


def format_number(value: float) -> str:
    return "%.17g" % value


def grid_header(grid: Grid) -> str:
    return f"# n={grid.n} N={grid.N} L={format_number(grid.L)}"


def format_field_csv(f: Field) -> str:
    grid = f.grid
    buffer = io.StringIO()
    buffer.write(grid_header(grid) + "\n")
    writer = csv.writer(buffer, lineterminator="\n")
    coords = grid.points.reshape(grid.n, -1)
    values = f.values.ravel()
    for idx in range(values.size):
        row = [format_number(c) for c in coords[:, idx]]
        row.append(format_number(values[idx]))
        writer.writerow(row)
    return buffer.getvalue()


def write_field_csv(f: Field, path: Union[str, Path]) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", newline="", encoding="utf-8") as handle:
        handle.write(format_field_csv(f))
    return target


def read_field_csv(path: Union[str, Path]) -> Field:
    with open(path, "r", newline="", encoding="utf-8") as handle:
        header = handle.readline().strip()
        match = HEADER_RE.match(header)
        if not match:
            raise GridError(f"{path}: missing field header '# n=.. N=.. L=..'")
        grid = make_grid(int(match.group(1)), int(match.group(2)), float(match.group(3)))
        values: List[float] = []
        for row in csv.reader(handle):
            if not row:
                continue
            if len(row) != grid.n + 1:
                raise GridError(f"{path}: expected {grid.n + 1} columns, got {len(row)}")
            values.append(float(row[-1]))
    if len(values) != grid.size:
        raise GridError(f"{path}: expected {grid.size} rows, got {len(values)}")
    return Field(grid, np.asarray(values).reshape(grid.shape))
