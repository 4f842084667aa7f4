from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple


class AppError(Exception):
    pass


class ConfigError(AppError):
    pass


class UsageError(AppError):
    pass


class OutputError(AppError):
    pass


class ParameterRejectedError(AppError):
    """The numerical core refused the configured parameters."""


class NonConvergedError(AppError):
    """Iteration stopped without a usable partial result."""


STATUS_OK = "ok"
STATUS_FAILED = "failed"
STATUS_UNCERTIFIED = "uncertified"
STATUS_NONCONVERGED = "nonconverged"


@dataclass
class RunOutcome:
    command: str
    status: str = STATUS_OK
    files: Dict[str, str] = field(default_factory=dict)
    summary: List[Tuple[str, Any]] = field(default_factory=list)
    messages: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == STATUS_OK
