from __future__ import annotations

import unittest

import numpy as np

from fcalc.errors import ParameterError, PresetCertificateError
from fcalc.grid import Field, make_grid, radial_field, zero_field
from fcalc.presets import (
    PRESETS,
    build_preset,
    fit_growth_constant,
    fnls_window,
    l2_window,
    list_presets,
    make_nonlinearity,
    preset_allen_cahn,
    preset_benjamin_ono,
    preset_cubic_l2,
    preset_fnls,
    preset_gp,
    preset_peierls_nabarro,
    preset_power,
)
from fcalc.solvers import solve_radial


def _grid():
    return make_grid(1, 64, 10.0)


def _rho(grid, amp=0.01):
    return radial_field(grid, lambda r: amp * np.exp(-(r ** 2)))


class PresetWindowTests(unittest.TestCase):
    def test_allen_cahn_inside_window(self) -> None:
        grid = _grid()
        preset = preset_allen_cahn(grid, 1.0, 0.5, 9.0, 1.0, _rho(grid))
        self.assertTrue(preset.certified)
        self.assertEqual(preset.problem.growth.alpha, 3.0)
        self.assertAlmostEqual(preset.growth_fit.C, 3.0, places=9)
        self.assertTrue(preset.problem.radial)
        self.assertIn(("certificate.satisfied", True), preset.pairs())

    def test_massive_window_excludes_low_order(self) -> None:
        grid = _grid()
        with self.assertRaises(PresetCertificateError) as ctx:
            preset_allen_cahn(grid, 1.0, 0.5, 8.0, 1.0, _rho(grid))
        self.assertEqual(ctx.exception.preset, "allen_cahn")
        preset = preset_allen_cahn(grid, 1.0, 0.5, 8.0, 1.0, _rho(grid), uncertified=True)
        self.assertFalse(preset.certified)

    def test_power_preset(self) -> None:
        grid = _grid()
        preset = preset_power(grid, 1.0, 0.5, 9.0, 2.0, _rho(grid))
        self.assertEqual(preset.problem.growth.alpha, 3.0)
        self.assertTrue(preset.certified)

    def test_rho_must_be_radial(self) -> None:
        grid = _grid()
        skewed = Field(grid, np.linspace(0.0, 1.0, grid.N))
        with self.assertRaises(ParameterError):
            preset_allen_cahn(grid, 1.0, 0.5, 9.0, 1.0, skewed)

    def test_understated_growth_constant(self) -> None:
        grid = _grid()
        kwargs = dict(V=make_nonlinearity("cubic", kappa=1.0), alpha=3.0, h=zero_field(grid), g=zero_field(grid))
        with self.assertRaises(PresetCertificateError):
            preset_gp(grid, 1.0, 0.5, 9.0, C=1.0, **kwargs)
        preset = preset_gp(grid, 1.0, 0.5, 9.0, C=1.0, uncertified=True, **kwargs)
        self.assertFalse(preset.certified)
        self.assertTrue(any("below the sampled" in note for note in preset.notes))

    def test_trivial_branch_is_flagged(self) -> None:
        preset = preset_benjamin_ono(_grid(), 0.5)
        self.assertTrue(preset.certified)
        self.assertTrue(any("trivial branch" in note for note in preset.notes))
        self.assertTrue(preset.problem.calc.sym.singular_at_zero)
        self.assertEqual(preset.problem.calc.s, 2.0)


class L2TheoryPresetTests(unittest.TestCase):
    def test_windows(self) -> None:
        self.assertAlmostEqual(l2_window(1, 1.0), 0.25)
        self.assertAlmostEqual(l2_window(1, 2.0), 1.0 / 3.0)
        self.assertAlmostEqual(l2_window(2, 0.1), 0.1 / 1.1)

    def test_benjamin_ono_window(self) -> None:
        grid = _grid()
        self.assertTrue(preset_benjamin_ono(grid, 0.3).certified)
        with self.assertRaises(PresetCertificateError):
            preset_benjamin_ono(grid, 0.2)

    def test_cubic_window(self) -> None:
        grid = _grid()
        with self.assertRaises(PresetCertificateError):
            preset_cubic_l2(grid, 0.3)
        self.assertTrue(preset_cubic_l2(grid, 0.4).certified)

    def test_peierls_nabarro(self) -> None:
        grid = _grid()
        d = _rho(grid, amp=0.1)
        preset = preset_peierls_nabarro(grid, 0.5, 2.0, d)
        self.assertTrue(preset.certified)
        np.testing.assert_allclose(preset.problem.coefficient.values, d.values / 2.0)
        with self.assertRaises(ParameterError):
            preset_peierls_nabarro(grid, 0.5, 0.0, d)


class PresetSolveTests(unittest.TestCase):
    def _solve(self, preset):
        return solve_radial(preset.problem, n_emb=1.0)

    def test_allen_cahn_is_solved_and_certified(self) -> None:
        grid = _grid()
        preset = preset_allen_cahn(grid, 1.0, 0.5, 9.0, 1.0, _rho(grid, amp=1e-4))
        result = self._solve(preset)
        self.assertTrue(preset.certified)
        self.assertTrue(result.converged and result.certified)
        self.assertLess(result.final_residual, 1e-8)
        self.assertGreater(result.u.max_abs(), 0.0)

    def test_allen_cahn_without_forcing_is_zero(self) -> None:
        grid = _grid()
        result = self._solve(preset_allen_cahn(grid, 1.0, 0.5, 9.0, 1.0, zero_field(grid)))
        self.assertTrue(result.converged and result.certified)
        self.assertEqual(result.u.max_abs(), 0.0)

    def test_benjamin_ono_is_solved_and_certified(self) -> None:
        grid = _grid()
        preset = preset_benjamin_ono(grid, 0.3, forcing=_rho(grid, amp=1e-4))
        result = self._solve(preset)
        self.assertTrue(preset.certified)
        self.assertTrue(result.converged and result.certified)
        self.assertLess(result.final_residual, 1e-8)

    def test_peierls_nabarro_is_solved_and_certified(self) -> None:
        grid = _grid()
        preset = preset_peierls_nabarro(grid, 0.5, 2.0, _rho(grid))
        result = self._solve(preset)
        self.assertTrue(preset.certified)
        self.assertTrue(result.converged and result.certified)
        self.assertLess(result.final_residual, 1e-8)


class FnlsPresetTests(unittest.TestCase):
    def test_window_bounds(self) -> None:
        self.assertAlmostEqual(fnls_window(1, 2.0), 1.0 / 3.0)
        self.assertAlmostEqual(fnls_window(2, 2.0), 2.0 / 3.0)
        self.assertIsNone(fnls_window(3, 2.0))

    def test_auto_route_picks_a0_inside_window(self) -> None:
        preset = preset_fnls(_grid(), 0.0, 0.25, 1.0, 4.0)
        self.assertEqual(preset.certificate.route, "a0")
        self.assertTrue(preset.certified)
        self.assertEqual(preset.problem.growth.alpha, 3.0)

    def test_mass_is_dropped_on_a0_route(self) -> None:
        preset = preset_fnls(_grid(), 1.0, 0.25, 1.0, 4.0, route="a0")
        self.assertTrue(any("dropped" in note for note in preset.notes))

    def test_massive_route_outside_window(self) -> None:
        grid = _grid()
        with self.assertRaises(PresetCertificateError):
            preset_fnls(grid, 1.0, 0.1, 2.0, 4.0)
        preset = preset_fnls(grid, 1.0, 0.1, 2.0, 4.0, uncertified=True)
        self.assertEqual(preset.certificate.route, "massive")
        self.assertFalse(preset.certified)
        with self.assertRaises(ParameterError):
            preset_fnls(grid, 1.0, 0.1, 1.0, 4.0, uncertified=True)

    def test_argument_checks(self) -> None:
        grid = _grid()
        with self.assertRaises(ParameterError):
            preset_fnls(grid, 0.0, 0.25, 1.0, 2.0)
        with self.assertRaises(ParameterError):
            preset_fnls(grid, 0.0, 0.25, 1.0, 4.0, route="sideways")
        with self.assertRaises(ParameterError):
            preset_fnls(grid, 1.0, 0.1, 2.0, 4.0, linear_split=0.0, uncertified=True)


class RegistryTests(unittest.TestCase):
    def test_names(self) -> None:
        self.assertEqual(
            sorted(PRESETS),
            ["allen_cahn", "benjamin_ono", "cubic_l2", "fnls", "gp", "l2_theory", "peierls_nabarro", "power"],
        )
        self.assertEqual([info.name for info in list_presets()], list(PRESETS))

    def test_build_by_name(self) -> None:
        preset = build_preset("benjamin_ono", _grid(), gamma=0.5)
        self.assertEqual(preset.name, "benjamin_ono")
        with self.assertRaises(ParameterError):
            build_preset("missing", _grid())

    def test_growth_fit_is_reproducible(self) -> None:
        preset = preset_benjamin_ono(_grid(), 0.5)
        first = fit_growth_constant(preset.problem, samples=500, seed=7)
        second = fit_growth_constant(preset.problem, samples=500, seed=7)
        self.assertEqual(first, second)
        self.assertAlmostEqual(first.derivative_ratio, 2.0)

    def test_nonlinearity_lookup(self) -> None:
        V = make_nonlinearity("power", beta=2.0)
        self.assertAlmostEqual(float(V(np.zeros((1, 1)), np.array([-2.0]))[0]), -8.0)
        with self.assertRaises(ParameterError):
            make_nonlinearity("nope")
