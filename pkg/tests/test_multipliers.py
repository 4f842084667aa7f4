from __future__ import annotations

import math
import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from fcalc.errors import ParameterError
from fcalc.multipliers import (
    chain_coefficient,
    custom_spec,
    eval_m_exp,
    eval_m_mu,
    eval_varphi,
    exp_m_spec,
    m_mu_spec,
    mikhlin_certify,
    partial_m_mu,
    partial_varphi,
    set_partitions,
    validate_multi_index,
    varphi_spec,
)
from fcalc.symbols import fractional_symbol, laplace_symbol, pure_fractional_symbol


class MultiplierValueTests(unittest.TestCase):
    def test_m_mu_values(self) -> None:
        sym = laplace_symbol()
        self.assertAlmostEqual(float(eval_m_mu(sym, 2.0, [0.0])), 1.0)
        self.assertAlmostEqual(float(eval_m_mu(sym, 2.0, [1.0])), 0.5)
        self.assertAlmostEqual(float(eval_m_mu(sym, 4.0, [0.0, 1.0])), 0.25)

    def test_m_mu_partial(self) -> None:
        sym = laplace_symbol()
        self.assertAlmostEqual(float(partial_m_mu(sym, 2.0, [0], [1.0])), -0.5)
        # d1 d2 (1 + x1^2 + x2^2)^{-1} = 8 x1 x2 / (1 + |x|^2)^3
        self.assertAlmostEqual(float(partial_m_mu(sym, 2.0, [0, 1], [1.0, 1.0])), 8.0 / 27.0)

    def test_exp_multiplier_values(self) -> None:
        self.assertAlmostEqual(float(eval_m_exp(0.5, [0.0])), 1.0)
        self.assertAlmostEqual(float(eval_m_exp(1.0, [1.0])), 1.0 / (1.0 + math.e))
        self.assertAlmostEqual(float(eval_m_exp(2.0, [0.0, 1.0])), float(exp_m_spec(2.0).value([0.0, 1.0])))

    def test_partial_matches_difference_quotient(self) -> None:
        sym = fractional_symbol(0.5, 1.0)
        x = np.array([0.7, -1.3])
        step = 1e-6
        shift = np.array([step, 0.0])
        approx = (eval_m_mu(sym, 3.0, x + shift) - eval_m_mu(sym, 3.0, x - shift)) / (2 * step)
        self.assertAlmostEqual(float(partial_m_mu(sym, 3.0, [0], x)), float(approx), places=7)

    def test_partials_at_random_points(self) -> None:
        rng = np.random.default_rng(21)
        cases = [(1, (0,)), (2, (0,)), (2, (1,)), (2, (0, 1))]
        for k in range(100):
            sym = (laplace_symbol(), fractional_symbol(0.5, 1.0))[k % 2]
            mu = float(rng.uniform(1.0, 6.0))
            n, axes = cases[k % len(cases)]
            x = rng.uniform(-4.0, 4.0, size=n)
            axis = axes[-1]
            step = 1e-6 * max(1.0, abs(x[axis]))
            shift = np.zeros(n)
            shift[axis] = step
            lower = axes[:-1]
            approx = (partial_m_mu(sym, mu, lower, x + shift) - partial_m_mu(sym, mu, lower, x - shift)) / (2 * step)
            exact = float(partial_m_mu(sym, mu, axes, x))
            with self.subTest(k=k, symbol=sym.label, axes=axes):
                self.assertLessEqual(abs(float(approx) - exact), 1e-6 * max(abs(exact), 1e-2))

    def test_varphi_values(self) -> None:
        sym = laplace_symbol()
        self.assertAlmostEqual(float(eval_varphi(sym, 1.0, 2.0, [1.0])), 0.5)
        self.assertAlmostEqual(float(eval_varphi(sym, 1.0, 2.0, [math.sqrt(1023.0)])), 2.0 ** -10)

    def test_varphi_partial(self) -> None:
        sym = laplace_symbol()
        # r = 2, s = 2: varphi = (1 + x^2)^{-1}
        self.assertAlmostEqual(float(partial_varphi(sym, 2.0, 2.0, [0], [1.0])), -0.5)

    def test_multi_index_rules(self) -> None:
        self.assertEqual(validate_multi_index([0, 2], 3), (0, 2))
        for bad in ([1, 0], [0, 0], [3]):
            with self.subTest(bad=bad):
                with self.assertRaises(ParameterError):
                    validate_multi_index(bad, 3)

    def test_order_checks(self) -> None:
        with self.assertRaises(ParameterError):
            eval_m_mu(laplace_symbol(), 0.0, [1.0])
        with self.assertRaises(ParameterError):
            eval_varphi(laplace_symbol(), 0.0, 2.0, [1.0])

    def test_expansion_helpers(self) -> None:
        self.assertEqual(len(set_partitions((0, 1, 2))), 5)
        self.assertAlmostEqual(chain_coefficient(2.0, 2), 2.0)

    @settings(max_examples=30, deadline=None)
    @given(
        mu=st.floats(min_value=0.1, max_value=20.0),
        x=st.lists(st.floats(min_value=-50.0, max_value=50.0), min_size=1, max_size=3),
    )
    def test_m_mu_is_bounded_by_one(self, mu: float, x) -> None:
        value = float(eval_m_mu(fractional_symbol(0.5, 1.0), mu, x))
        self.assertGreater(value, 0.0)
        self.assertLessEqual(value, 1.0)


class MikhlinCertifyTests(unittest.TestCase):
    def test_certified_when_mu_reaches_order(self) -> None:
        report = mikhlin_certify(m_mu_spec(fractional_symbol(0.5, 1.0), 17.0), 1, s=17.0)
        self.assertTrue(report.passed)
        self.assertTrue(report.covered)
        self.assertTrue(report.certified)
        self.assertEqual(report.primary, "full")
        self.assertLessEqual(report.constant, 1.0 + 1e-12)

    def test_below_order_is_not_covered(self) -> None:
        report = mikhlin_certify(m_mu_spec(laplace_symbol(), 2.0), 2, s=4.0)
        self.assertTrue(report.passed)
        self.assertFalse(report.covered)
        self.assertFalse(report.certified)
        self.assertIn("mu < s", report.coverage_note)

    def test_two_dimensional_entries(self) -> None:
        report = mikhlin_certify(m_mu_spec(laplace_symbol(), 2.0), 2, s=2.0, directions=8)
        regime = report.regimes["full"]
        self.assertEqual(sorted(e.alpha for e in regime.entries), [(), (0,), (0, 1), (1,)])
        self.assertTrue(report.certified)

    def test_singular_symbol_uses_punctured_regime(self) -> None:
        report = mikhlin_certify(m_mu_spec(pure_fractional_symbol(0.5), 2.0), 1)
        self.assertEqual(report.primary, "punctured")
        self.assertIn("punctured.C", dict(report.pairs()))

    def test_varphi_and_exp_multipliers(self) -> None:
        self.assertTrue(mikhlin_certify(varphi_spec(laplace_symbol(), 1.0, 2.0), 1).certified)
        exp_report = mikhlin_certify(exp_m_spec(1.0), 1)
        self.assertEqual(exp_report.coverage_note, "empirical only")
        self.assertTrue(exp_report.passed)

    def test_seed_is_reproducible(self) -> None:
        spec = m_mu_spec(laplace_symbol(), 2.0)
        first = mikhlin_certify(spec, 2, seed=5).to_text()
        second = mikhlin_certify(spec, 2, seed=5).to_text()
        self.assertEqual(first, second)

    def test_custom_multiplier_matches_builtin(self) -> None:
        sym = laplace_symbol()
        spec = custom_spec(
            "inverse-quadratic",
            lambda x: eval_m_mu(sym, 2.0, x),
            lambda I, x: partial_m_mu(sym, 2.0, I, x),
            max_order=2,
        )
        custom = mikhlin_certify(spec, 2, seed=3, directions=8)
        builtin = mikhlin_certify(m_mu_spec(sym, 2.0), 2, seed=3, directions=8)
        self.assertEqual(custom.coverage_note, "empirical only")
        self.assertAlmostEqual(custom.constant, builtin.constant)
        self.assertEqual(custom.passed, builtin.passed)
