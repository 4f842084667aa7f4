from __future__ import annotations

import unittest

from app.application.config import (
    AUTO,
    RunConfig,
    apply_overrides,
    auto_or_float,
    auto_or_none,
    build_run_config,
    check_symbol_precondition,
)
from app.domain.entities import ConfigError


class RunConfigTests(unittest.TestCase):
    def test_defaults(self) -> None:
        config = build_run_config({})
        self.assertEqual(config, RunConfig())
        self.assertEqual(config.grid.N, 256)
        self.assertEqual(config.symbol.kind, "fractional")
        self.assertEqual(config.equation.mode, "linear")
        self.assertEqual(config.solver.max_iter, 0)

    def test_values_are_coerced(self) -> None:
        config = build_run_config(
            {
                "grid": {"n": "2", "N": "64", "L": "5"},
                "solver": {"strict": "yes", "seed": "12"},
                "output": {"emit_pdf": "off"},
            }
        )
        self.assertEqual(config.grid.n, 2)
        self.assertIsInstance(config.grid.N, int)
        self.assertEqual(config.grid.L, 5.0)
        self.assertTrue(config.solver.strict)
        self.assertEqual(config.solver.seed, 12)
        self.assertFalse(config.output.emit_pdf)

    def test_unknown_section_or_key(self) -> None:
        with self.assertRaises(ConfigError):
            build_run_config({"bogus": {}})
        with self.assertRaises(ConfigError):
            build_run_config({"grid": {"M": "3"}})

    def test_bad_values(self) -> None:
        cases = [
            {"grid": {"N": "many"}},
            {"grid": {"L": "nan"}},
            {"solver": {"strict": "maybe"}},
        ]
        for sections in cases:
            with self.subTest(sections=sections):
                with self.assertRaises(ConfigError):
                    build_run_config(sections)

    def test_validation(self) -> None:
        cases = [
            {"grid": {"N": "63"}},
            {"grid": {"n": "4"}},
            {"grid": {"L": "0"}},
            {"symbol": {"kind": "bessel"}},
            {"symbol": {"s": "0"}},
            {"multiplier": {"kind": "nope"}},
            {"equation": {"p": "1"}},
            {"equation": {"mode": "preset"}},
            {"norms": {"p": "0.5"}},
            {"solver": {"max_iter": "-1"}},
            {"solver": {"epsilon": "-1"}},
            {"solver": {"lp_trials": "0"}},
            {"multiplier": {"mu": "zero"}},
            {"output": {"directory": "  "}},
        ]
        for sections in cases:
            with self.subTest(sections=sections):
                with self.assertRaises(ConfigError):
                    build_run_config(sections)

    def test_overrides(self) -> None:
        config = apply_overrides(build_run_config({}), out="runs/x", seed=7, uncertified=True)
        self.assertEqual(config.output.directory, "runs/x")
        self.assertEqual(config.solver.seed, 7)
        self.assertTrue(config.equation.uncertified)
        untouched = apply_overrides(build_run_config({}))
        self.assertEqual(untouched, RunConfig())
        with self.assertRaises(ConfigError):
            apply_overrides(build_run_config({}), seed=-1)

    def test_auto_values(self) -> None:
        self.assertEqual(auto_or_float("auto", "x"), AUTO)
        self.assertEqual(auto_or_float(" AUTO ", "x"), AUTO)
        self.assertEqual(auto_or_float("0.5", "x"), 0.5)
        self.assertIsNone(auto_or_none("auto", "x"))
        self.assertEqual(auto_or_none("2", "x"), 2.0)
        for bad in ("0", "inf", "many"):
            with self.subTest(bad=bad):
                with self.assertRaises(ConfigError):
                    auto_or_float(bad, "x")

    def test_symbol_precondition(self) -> None:
        config = build_run_config({"symbol": {"kind": "laplace", "s": "2"}})
        check_symbol_precondition(config, 2.0)
        with self.assertRaises(ConfigError):
            check_symbol_precondition(config, 0.5)
