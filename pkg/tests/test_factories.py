from __future__ import annotations

import tempfile
import unittest
from pathlib import Path

import numpy as np

from app.application.config import build_run_config
from app.application.factories import FieldFactory, build_calculus, build_nonlinearity, build_symbol
from app.domain.entities import ConfigError
from fcalc.grid import constant_field, make_grid, write_field_csv


class FieldFactoryTests(unittest.TestCase):
    def setUp(self) -> None:
        self.grid = make_grid(1, 64, 8.0)
        self.fields = FieldFactory(self.grid, seed=3)

    def test_closed_form_specs(self) -> None:
        center = self.grid.N // 2
        self.assertEqual(self.fields.build("zero").max_abs(), 0.0)
        np.testing.assert_array_equal(self.fields.build("constant(2.5)").values, 2.5)
        self.assertAlmostEqual(float(self.fields.build("gaussian(2, 1)").values[center]), 2.0)
        bump = self.fields.build("bump(1, 2)")
        self.assertAlmostEqual(float(bump.values[center]), 1.0)
        self.assertTrue(np.all(bump.values[np.abs(self.grid.axis_nodes) >= 2.0] == 0.0))
        self.assertAlmostEqual(float(self.fields.build("cosine(1, 3)").values[0]), -3.0)

    def test_random_specs_are_seeded(self) -> None:
        first = self.fields.build("random(1, 3)")
        self.assertAlmostEqual(first.max_abs(), 1.0)
        again = FieldFactory(self.grid, seed=3).build("random(1, 3)")
        np.testing.assert_array_equal(first.values, again.values)
        second = self.fields.build("random(1, 3)")
        self.assertFalse(np.array_equal(first.values, second.values))
        radial = self.fields.build("radial_random(1, 2)")
        np.testing.assert_allclose(radial.values[1:], radial.values[1:][::-1], atol=1e-12)

    def test_bad_specs(self) -> None:
        for spec in ("", "unknown(1)", "constant()", "gaussian(1, 0)", "gaussian(a)", "random(1, 2.5)", "bump(1, 2, 3)"):
            with self.subTest(spec=spec):
                with self.assertRaises(ConfigError):
                    self.fields.build(spec)

    def test_optional_blank_is_none(self) -> None:
        self.assertIsNone(self.fields.optional(""))
        self.assertIsNone(self.fields.optional("   "))
        self.assertIsNotNone(self.fields.optional("zero"))

    def test_file_spec(self) -> None:
        with tempfile.TemporaryDirectory(prefix="field_factory_") as tmp_dir:
            base = Path(tmp_dir)
            write_field_csv(constant_field(self.grid, 1.25), base / "u.csv")
            write_field_csv(constant_field(make_grid(1, 32, 8.0), 1.0), base / "coarse.csv")
            fields = FieldFactory(self.grid, base_dir=base)
            np.testing.assert_array_equal(fields.build("file(u.csv)").values, 1.25)
            with self.assertRaises(ConfigError):
                fields.build("file(coarse.csv)")
            with self.assertRaises(ConfigError):
                fields.build("file(missing.csv)")


class BuilderTests(unittest.TestCase):
    def test_symbol_kinds(self) -> None:
        for kind in ("fractional", "scaled_fractional", "pure_fractional", "laplace", "exp", "oscillatory"):
            with self.subTest(kind=kind):
                sym = build_symbol(build_run_config({"symbol": {"kind": kind}}))
                self.assertTrue(sym.label)

    def test_calculus_uses_configured_order(self) -> None:
        config = build_run_config({"grid": {"N": "32", "L": "4"}, "symbol": {"kind": "laplace", "s": "3"}})
        calc = build_calculus(config)
        self.assertEqual(calc.s, 3.0)
        self.assertEqual(calc.grid.N, 32)

    def test_nonlinearity(self) -> None:
        config = build_run_config({"equation": {"nonlinearity": "power", "nl_beta": "2"}})
        V = build_nonlinearity(config)
        self.assertAlmostEqual(float(V(np.zeros((1, 1)), np.array([2.0]))[0]), 8.0)
        with self.assertRaises(ConfigError):
            build_nonlinearity(build_run_config({"equation": {"nonlinearity": "quartic"}}))
