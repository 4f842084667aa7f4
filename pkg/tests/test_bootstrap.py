from __future__ import annotations

import logging
import os
import unittest
from unittest import mock

from app.bootstrap import container as container_module
from app.bootstrap.runtime import LOG_LEVEL_ENV, resolve_level


class RuntimeTests(unittest.TestCase):
    def test_verbosity_levels(self) -> None:
        with mock.patch.dict(os.environ, {LOG_LEVEL_ENV: ""}):
            self.assertEqual(resolve_level(0), logging.WARNING)
            self.assertEqual(resolve_level(1), logging.INFO)
            self.assertEqual(resolve_level(3), logging.DEBUG)

    def test_env_override(self) -> None:
        with mock.patch.dict(os.environ, {LOG_LEVEL_ENV: "error"}):
            self.assertEqual(resolve_level(2), logging.ERROR)
        with mock.patch.dict(os.environ, {LOG_LEVEL_ENV: "chatty"}):
            self.assertEqual(resolve_level(0), logging.WARNING)


class ContainerTests(unittest.TestCase):
    def setUp(self) -> None:
        self._old_container = container_module._container

    def tearDown(self) -> None:
        container_module._container = self._old_container

    def test_container_is_built_once(self) -> None:
        container_module._container = None
        first = container_module.get_container()
        self.assertIs(container_module.get_container(), first)
        self.assertEqual(first.kernel.command, "kernel")
        self.assertIs(first.solve.outputs, first.kernel.outputs)
