from __future__ import annotations

from pathlib import Path


def project_root() -> Path:
    """Walk up from this file until a 'data' folder appears."""
    current = Path(__file__).resolve()
    for parent in [current] + list(current.parents):
        if (parent / "data").exists():
            return parent
    return current.parents[3]


def data_dir() -> Path:
    return project_root() / "data"


def configs_dir() -> Path:
    return data_dir() / "configs"


def default_config_path() -> Path:
    return configs_dir() / "default.ini"


def resolve_output_dir(directory: str) -> Path:
    path = Path(directory).expanduser()
    return path if path.is_absolute() else Path.cwd() / path
