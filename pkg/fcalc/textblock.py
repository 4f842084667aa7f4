"""Flat ``key = value`` text blocks used by every report file."""

from __future__ import annotations

import math
import re
from typing import Any, Dict, Iterable, List, Mapping, Tuple, Union

import numpy as np

Pairs = Union[Mapping[str, Any], Iterable[Tuple[str, Any]]]

LINE_RE = re.compile(r"^\s*([^=#\s][^=]*?)\s*=\s*(.*?)\s*$")


def format_value(value: Any) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        v = float(value)
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return "%.17g" % v
    if value is None:
        return "none"
    if isinstance(value, (list, tuple)):
        return ",".join(format_value(v) for v in value)
    return str(value)


def render_block(pairs: Pairs) -> str:
    items = pairs.items() if isinstance(pairs, Mapping) else pairs
    return "".join(f"{key} = {format_value(value)}\n" for key, value in items)


def parse_block(text: str) -> Dict[str, str]:
    out: Dict[str, str] = {}
    for line in text.splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        match = LINE_RE.match(line)
        if match:
            out[match.group(1)] = match.group(2)
    return out


def prefixed(prefix: str, pairs: Pairs) -> List[Tuple[str, Any]]:
    items = pairs.items() if isinstance(pairs, Mapping) else pairs
    return [(f"{prefix}.{key}", value) for key, value in items]
