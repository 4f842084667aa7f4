from __future__ import annotations

from typing import Optional

from app.application.config import RunConfig, apply_overrides, build_run_config
from app.domain.ports import ConfigRepository


class ConfigService:
    def __init__(self, repo: ConfigRepository) -> None:
        self.repo = repo

    def load(
        self,
        path: Optional[str] = None,
        *,
        out: Optional[str] = None,
        seed: Optional[int] = None,
        uncertified: bool = False,
    ) -> RunConfig:
        config = build_run_config(self.repo.load(path or ""))
        return apply_overrides(config, out=out, seed=seed, uncertified=uncertified)
