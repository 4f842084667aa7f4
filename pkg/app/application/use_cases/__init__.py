from app.application.use_cases.config_loader import ConfigService
from app.application.use_cases.kernel import KernelService
from app.application.use_cases.multipliers import MultiplierService, build_multiplier
from app.application.use_cases.norms import NormsService
from app.application.use_cases.presets import PresetsService, preset_arguments
from app.application.use_cases.session import CommandService, RunSession, translate_errors
from app.application.use_cases.solve import SolveService, solve_settings
from app.application.use_cases.symbols import SymbolCheckService

__all__ = [
    "CommandService",
    "ConfigService",
    "KernelService",
    "MultiplierService",
    "NormsService",
    "PresetsService",
    "RunSession",
    "SolveService",
    "SymbolCheckService",
    "build_multiplier",
    "preset_arguments",
    "solve_settings",
    "translate_errors",
]
