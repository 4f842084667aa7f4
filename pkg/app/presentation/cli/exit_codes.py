from __future__ import annotations

from app.domain.entities import (
    AppError,
    NonConvergedError,
    RunOutcome,
    STATUS_FAILED,
    STATUS_NONCONVERGED,
    STATUS_OK,
    STATUS_UNCERTIFIED,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CHECK_FAILED = 2
EXIT_UNCERTIFIED = 3
EXIT_NONCONVERGED = 4

STATUS_EXIT_CODES = {
    STATUS_OK: EXIT_OK,
    STATUS_FAILED: EXIT_CHECK_FAILED,
    STATUS_UNCERTIFIED: EXIT_UNCERTIFIED,
    STATUS_NONCONVERGED: EXIT_NONCONVERGED,
}


def exit_code_for(outcome: RunOutcome) -> int:
    return STATUS_EXIT_CODES.get(outcome.status, EXIT_USAGE)


def exit_code_for_error(exc: AppError) -> int:
    return EXIT_NONCONVERGED if isinstance(exc, NonConvergedError) else EXIT_USAGE
