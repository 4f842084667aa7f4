from __future__ import annotations

import argparse

from app.application.config import RunConfig
from app.bootstrap.container import get_container


def load_run_config(args: argparse.Namespace) -> RunConfig:
    return get_container().config.load(
        args.config,
        out=args.out,
        seed=args.seed,
        uncertified=args.uncertified,
    )
