from __future__ import annotations

import configparser
from pathlib import Path
from typing import Dict

from app.domain.entities import ConfigError
from app.domain.ports import ConfigRepository
from .data_paths import default_config_path


DEFAULT_CONFIG_PATH = default_config_path()


def _parser() -> configparser.ConfigParser:
    parser = configparser.ConfigParser(
        comment_prefixes=("#", ";"),
        inline_comment_prefixes=("#", ";"),
        interpolation=None,
        default_section="__defaults__",
    )
    # keys are case sensitive (N and n are different grid keys)
    parser.optionxform = str  # type: ignore[assignment]
    return parser


def parse_config_text(text: str, source: str = "<string>") -> Dict[str, Dict[str, str]]:
    parser = _parser()
    try:
        parser.read_string(text, source=source)
    except configparser.Error as exc:
        raise ConfigError(f"{source}: {exc}") from exc
    return {name: dict(parser.items(name)) for name in parser.sections()}


def load_config(path: Path) -> Dict[str, Dict[str, str]]:
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}") from None
    except (OSError, UnicodeDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_config_text(text, source=str(path))


class IniConfigRepository(ConfigRepository):
    def load(self, path: str) -> Dict[str, Dict[str, str]]:
        if not path:
            if not DEFAULT_CONFIG_PATH.exists():
                return {}
            return load_config(DEFAULT_CONFIG_PATH)
        return load_config(Path(path))
