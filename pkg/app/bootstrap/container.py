from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from app.application.use_cases import (
    ConfigService,
    KernelService,
    MultiplierService,
    NormsService,
    PresetsService,
    SolveService,
    SymbolCheckService,
)
from app.infrastructure.persistence.config_store import IniConfigRepository
from app.infrastructure.persistence.output_dir import OutputDirectoryFactory
from app.infrastructure.persistence.run_logger import RunLoggerFactoryImpl
from app.infrastructure.reporting.pdf_renderer import PdfRunRenderer


@dataclass
class AppContainer:
    config: ConfigService
    symbols: SymbolCheckService
    multipliers: MultiplierService
    solve: SolveService
    kernel: KernelService
    norms: NormsService
    presets: PresetsService


def build_container() -> AppContainer:
    outputs = OutputDirectoryFactory()
    run_logs = RunLoggerFactoryImpl()
    pdf_renderer = PdfRunRenderer()

    return AppContainer(
        config=ConfigService(IniConfigRepository()),
        symbols=SymbolCheckService(outputs, run_logs, pdf_renderer),
        multipliers=MultiplierService(outputs, run_logs, pdf_renderer),
        solve=SolveService(outputs, run_logs, pdf_renderer),
        kernel=KernelService(outputs, run_logs, pdf_renderer),
        norms=NormsService(outputs, run_logs, pdf_renderer),
        presets=PresetsService(outputs, run_logs, pdf_renderer),
    )


_container: Optional[AppContainer] = None


def get_container() -> AppContainer:
    global _container
    if _container is None:
        _container = build_container()
    return _container
