from __future__ import annotations

import tempfile
import unittest
from pathlib import Path

from app.application.config import build_run_config
from app.domain.entities import ConfigError
from app.infrastructure.persistence import config_store
from app.infrastructure.persistence.data_paths import configs_dir


class InfraConfigStoreTests(unittest.TestCase):
    def test_missing_default_returns_empty(self) -> None:
        with tempfile.TemporaryDirectory(prefix="config_store_") as tmp_dir:
            old_path = config_store.DEFAULT_CONFIG_PATH
            config_store.DEFAULT_CONFIG_PATH = Path(tmp_dir) / "default.ini"
            try:
                data = config_store.IniConfigRepository().load("")
                self.assertEqual(data, {})
            finally:
                config_store.DEFAULT_CONFIG_PATH = old_path

    def test_default_path_is_used(self) -> None:
        with tempfile.TemporaryDirectory(prefix="config_store_") as tmp_dir:
            path = Path(tmp_dir) / "default.ini"
            path.write_text("[grid]\nN = 32\n", encoding="utf-8")
            old_path = config_store.DEFAULT_CONFIG_PATH
            config_store.DEFAULT_CONFIG_PATH = path
            try:
                data = config_store.IniConfigRepository().load("")
                self.assertEqual(data, {"grid": {"N": "32"}})
            finally:
                config_store.DEFAULT_CONFIG_PATH = old_path

    def test_explicit_missing_path(self) -> None:
        with tempfile.TemporaryDirectory(prefix="config_store_") as tmp_dir:
            with self.assertRaises(ConfigError):
                config_store.IniConfigRepository().load(str(Path(tmp_dir) / "absent.ini"))

    def test_parse_keeps_key_case_and_strips_comments(self) -> None:
        text = "# run\n[grid]\nn = 1\nN = 64  # nodes\nL = 8 ; half width\n"
        data = config_store.parse_config_text(text)
        self.assertEqual(data["grid"], {"n": "1", "N": "64", "L": "8"})

    def test_malformed_text(self) -> None:
        with self.assertRaises(ConfigError):
            config_store.parse_config_text("N = 64\n")
        with self.assertRaises(ConfigError):
            config_store.parse_config_text("[grid]\nN = 1\nN = 2\n")

    def test_shipped_configs_are_valid(self) -> None:
        paths = sorted(configs_dir().glob("*.ini"))
        self.assertTrue(paths)
        for path in paths:
            with self.subTest(config=path.name):
                build_run_config(config_store.load_config(path))
