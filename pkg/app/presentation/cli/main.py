from __future__ import annotations

import argparse
import os
import sys
import traceback
from typing import Callable, Dict, List, Optional

from app.bootstrap.runtime import init_environment
from app.domain.entities import AppError, RunOutcome, UsageError
from app.presentation.cli.actions import commands
from app.presentation.cli.exit_codes import EXIT_USAGE, exit_code_for, exit_code_for_error
from app.presentation.cli.ui import print_error, print_outcome

TRACE_ENV = "FCALC_CLI_TRACE"

COMMANDS: Dict[str, Callable[[argparse.Namespace], RunOutcome]] = {
    "check-symbol": commands.check_symbol,
    "verify-multiplier": commands.verify_multiplier,
    "solve": commands.solve,
    "kernel": commands.kernel,
    "norms": commands.norms,
    "presets": commands.presets,
}

COMMAND_HELP = {
    "check-symbol": "numerically certify class membership of the configured symbol",
    "verify-multiplier": "sample the Mikhlin bounds of the configured multiplier",
    "solve": "solve the configured equation (linear, contraction, localized, radial, preset)",
    "kernel": "tabulate the Bessel-type kernel of T_s",
    "norms": "norms of a configured field and the embedding audit",
    "presets": "list preset equations with their certificate status",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _seed(value: str) -> int:
    try:
        seed = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {value!r}") from None
    if not 0 <= seed < 2 ** 64:
        raise argparse.ArgumentTypeError(f"seed must lie in [0, 2^64), got {seed}")
    return seed


def _add_global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--config", default=default, help="INI run configuration (default: data/configs/default.ini)")
    parser.add_argument("--out", default=default, help="output directory, overrides [output] directory")
    parser.add_argument("--seed", type=_seed, default=default, help="random seed, overrides [solver] seed")
    parser.add_argument(
        "--uncertified",
        action="store_true",
        default=argparse.SUPPRESS if suppress else False,
        help="allow presets outside their certified parameter window",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=argparse.SUPPRESS if suppress else 0,
        help="more logging (repeat for debug)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="app_cli",
        description="Spectral functional calculus toolkit: class checks, multipliers, kernels and fixed-point solves",
    )
    _add_global_flags(parser, suppress=False)
    shared = argparse.ArgumentParser(add_help=False)
    _add_global_flags(shared, suppress=True)
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True
    for name, handler in COMMANDS.items():
        command = sub.add_parser(name, parents=[shared], help=COMMAND_HELP[name])
        command.set_defaults(handler=handler)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    if os.environ.get(TRACE_ENV) == "1":
        stack = "".join(traceback.format_stack(limit=6)).rstrip()
        print(f"[{TRACE_ENV}] pid={os.getpid()} argv={sys.argv} file={__file__}\n{stack}", file=sys.stderr)

    parser = build_parser()
    try:
        args = parser.parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print_error(str(exc))
        return EXIT_USAGE

    init_environment(args.verbose)
    if os.environ.get(TRACE_ENV) == "1":
        print(f"[{TRACE_ENV}] dispatch command={args.command}", file=sys.stderr)
    try:
        outcome = args.handler(args)
    except AppError as exc:
        print_error(str(exc))
        return exit_code_for_error(exc)
    print_outcome(outcome)
    return exit_code_for(outcome)


if __name__ == "__main__":
    raise SystemExit(main())
