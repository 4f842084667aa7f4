from __future__ import annotations

import logging
import os
import sys

LOG_LEVEL_ENV = "FCALC_LOG_LEVEL"
LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"
VERBOSITY_LEVELS = {0: logging.WARNING, 1: logging.INFO}

_configured = False


def resolve_level(verbosity: int = 0) -> int:
    override = os.getenv(LOG_LEVEL_ENV, "").strip().upper()
    if override:
        level = logging.getLevelName(override)
        if isinstance(level, int):
            return level
    return VERBOSITY_LEVELS.get(verbosity, logging.DEBUG)


def init_environment(verbosity: int = 0) -> None:
    """Install the stderr log handler once; later calls only adjust the level."""
    global _configured
    root = logging.getLogger()
    root.setLevel(resolve_level(verbosity))
    if _configured:
        return
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    logging.captureWarnings(True)
    _configured = True
