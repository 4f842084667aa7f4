from __future__ import annotations

import argparse

from app.bootstrap.container import get_container
from app.domain.entities import RunOutcome
from app.presentation.cli.actions.common import load_run_config


def check_symbol(args: argparse.Namespace) -> RunOutcome:
    return get_container().symbols.run(load_run_config(args))


def verify_multiplier(args: argparse.Namespace) -> RunOutcome:
    return get_container().multipliers.run(load_run_config(args))


def solve(args: argparse.Namespace) -> RunOutcome:
    return get_container().solve.run(load_run_config(args))


def kernel(args: argparse.Namespace) -> RunOutcome:
    return get_container().kernel.run(load_run_config(args))


def norms(args: argparse.Namespace) -> RunOutcome:
    return get_container().norms.run(load_run_config(args))


def presets(args: argparse.Namespace) -> RunOutcome:
    return get_container().presets.run(load_run_config(args))
