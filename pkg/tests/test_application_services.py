from __future__ import annotations

import unittest
from typing import Dict

from app.application.config import RunConfig, build_run_config
from app.application.use_cases import (
    ConfigService,
    KernelService,
    MultiplierService,
    NormsService,
    PresetsService,
    SolveService,
    SymbolCheckService,
    preset_arguments,
    solve_settings,
)
from app.application.use_cases.session import ORIGIN_BALL_WARNING
from app.application.factories import FieldFactory, build_grid
from app.domain.entities import (
    ConfigError,
    ParameterRejectedError,
    STATUS_FAILED,
    STATUS_NONCONVERGED,
    STATUS_OK,
    STATUS_UNCERTIFIED,
)
from fcalc.presets import PRESETS
from fcalc.textblock import parse_block
from tests.fakes import DictConfigRepository, FakeAdapters

SMALL_GRID = {"n": "1", "N": "64", "L": "10"}


def _config(**sections: Dict[str, str]) -> RunConfig:
    merged = {"grid": dict(SMALL_GRID), "output": {"directory": "runs/test"}}
    for name, values in sections.items():
        merged.setdefault(name, {}).update(values)
    return build_run_config(merged)


class ServiceTestCase(unittest.TestCase):
    def setUp(self) -> None:
        self.adapters = FakeAdapters()

    def _service(self, cls):
        return cls(self.adapters.outputs, self.adapters.run_logs, self.adapters.pdf)

    @property
    def output(self):
        return self.adapters.outputs.last

    @property
    def log_events(self):
        return self.adapters.run_logs.logs[-1].names()


class ConfigServiceTests(unittest.TestCase):
    def test_load_applies_overrides(self) -> None:
        repo = DictConfigRepository({"grid": {"N": "32"}})
        config = ConfigService(repo).load(None, out="runs/elsewhere", seed=9)
        self.assertEqual(repo.last_path, "")
        self.assertEqual(config.grid.N, 32)
        self.assertEqual(config.output.directory, "runs/elsewhere")
        self.assertEqual(config.solver.seed, 9)

    def test_load_rejects_bad_sections(self) -> None:
        with self.assertRaises(ConfigError):
            ConfigService(DictConfigRepository({"grid": {"N": "33"}})).load("x.ini")


class SymbolCheckServiceTests(ServiceTestCase):
    def test_passing_symbol(self) -> None:
        outcome = self._service(SymbolCheckService).run(_config(symbol={"kind": "laplace", "s": "2"}))
        self.assertEqual(outcome.status, STATUS_OK)
        self.assertIn("class_report.txt", outcome.files)
        self.assertEqual(parse_block(self.output.texts["class_report.txt"])["verdict"], "pass")
        self.assertEqual(self.log_events[0], "start")
        self.assertEqual(self.log_events[-1], "finish")

    def test_failing_symbol(self) -> None:
        outcome = self._service(SymbolCheckService).run(_config(symbol={"kind": "oscillatory", "s": "2"}))
        self.assertEqual(outcome.status, STATUS_FAILED)

    def test_precondition_is_a_config_error(self) -> None:
        with self.assertRaises(ConfigError):
            self._service(SymbolCheckService).run(_config(symbol={"kind": "fractional", "s": "4"}))
        self.assertEqual(self.log_events[-1], "error")

    def test_singular_symbol_warns(self) -> None:
        outcome = self._service(SymbolCheckService).run(_config(symbol={"kind": "pure_fractional", "s": "8"}))
        self.assertIn(ORIGIN_BALL_WARNING, outcome.messages)

    def test_pdf_is_rendered_when_asked(self) -> None:
        config = _config(symbol={"kind": "laplace", "s": "2"}, output={"emit_pdf": "true"})
        outcome = self._service(SymbolCheckService).run(config)
        self.assertEqual(len(self.adapters.pdf.calls), 1)
        title, sections, path = self.adapters.pdf.calls[0]
        self.assertEqual(title, "fcalc check-symbol")
        self.assertEqual([name for name, _ in sections], ["symbol", "class check"])
        self.assertEqual(outcome.files["report.pdf"], path)


class MultiplierServiceTests(ServiceTestCase):
    def test_certified_multiplier(self) -> None:
        outcome = self._service(MultiplierService).run(_config(multiplier={"directions": "4"}))
        self.assertEqual(outcome.status, STATUS_OK)
        self.assertIn(("certified", True), outcome.summary)
        self.assertIn("multiplier_report.txt", self.output.texts)

    def test_outside_coverage_is_reported_not_failed(self) -> None:
        config = _config(symbol={"kind": "laplace", "s": "4"}, multiplier={"mu": "2", "directions": "4"})
        outcome = self._service(MultiplierService).run(config)
        self.assertEqual(outcome.status, STATUS_OK)
        self.assertIn(("certified", False), outcome.summary)
        self.assertTrue(any("mu < s" in message for message in outcome.messages))


class KernelServiceTests(ServiceTestCase):
    def test_certified_kernel(self) -> None:
        outcome = self._service(KernelService).run(_config(symbol={"kind": "laplace", "s": "3"}))
        self.assertEqual(outcome.status, STATUS_OK)
        self.assertEqual(sorted(self.output.fields), ["kernel.csv"])
        constants = parse_block(self.output.texts["constants.txt"])
        self.assertEqual(constants["kernel.certified"], "true")

    def test_boundary_order_needs_uncertified(self) -> None:
        with self.assertRaises(ParameterRejectedError):
            self._service(KernelService).run(_config(symbol={"kind": "laplace", "s": "2"}))
        config = _config(symbol={"kind": "laplace", "s": "2"}, equation={"uncertified": "true"})
        outcome = self._service(KernelService).run(config)
        self.assertEqual(outcome.status, STATUS_UNCERTIFIED)
        self.assertEqual(parse_block(self.output.texts["constants.txt"])["kernel.certified"], "false")


class SolveServiceTests(ServiceTestCase):
    def test_linear_solve(self) -> None:
        outcome = self._service(SolveService).run(_config(symbol={"kind": "laplace", "s": "2"}))
        self.assertEqual(outcome.status, STATUS_OK)
        self.assertEqual(sorted(outcome.files), ["constants.txt", "history.csv", "solution.csv"])
        constants = parse_block(self.output.texts["constants.txt"])
        self.assertEqual(constants["mode"], "linear")
        self.assertEqual(constants["status"], STATUS_OK)
        self.assertLess(float(constants["verified_residual"]), 1e-10)

    def test_iteration_cap_reports_nonconvergence(self) -> None:
        config = _config(
            symbol={"kind": "laplace", "s": "2"},
            equation={"mode": "contraction", "lipschitz": "gaussian(1, 1)", "delta": "0.1"},
            solver={"max_iter": "1", "lp_trials": "10"},
        )
        outcome = self._service(SolveService).run(config)
        self.assertEqual(outcome.status, STATUS_NONCONVERGED)
        self.assertIn(("converged", False), outcome.summary)
        self.assertEqual(len(self.output.histories["history.csv"]), 1)
        self.assertTrue(outcome.messages)

    def test_missing_required_field(self) -> None:
        with self.assertRaises(ConfigError):
            self._service(SolveService).run(_config(equation={"mode": "contraction"}))
        with self.assertRaises(ConfigError):
            self._service(SolveService).run(_config(equation={"mode": "localized"}))

    def test_unknown_preset(self) -> None:
        with self.assertRaises(ConfigError):
            self._service(SolveService).run(_config(equation={"mode": "preset", "preset": "kdv"}))

    def test_settings_mapping(self) -> None:
        settings = solve_settings(_config(solver={"max_iter": "0", "seed": "4"}))
        self.assertIsNone(settings.max_iter)
        self.assertEqual(settings.seed, 4)
        self.assertEqual(solve_settings(_config(solver={"max_iter": "5"})).max_iter, 5)


class NormsServiceTests(ServiceTestCase):
    def test_norms_report(self) -> None:
        config = _config(symbol={"kind": "laplace", "s": "2"}, norms={"trials": "10", "field": "gaussian(1, 1)"})
        outcome = self._service(NormsService).run(config)
        self.assertIn(outcome.status, (STATUS_OK, STATUS_FAILED))
        values = parse_block(self.output.texts["norms.txt"])
        self.assertEqual(values["field"], "gaussian(1, 1)")
        self.assertGreater(float(values["norm.sobolev"]), float(values["norm.lp"]))


class PresetsServiceTests(ServiceTestCase):
    def test_every_preset_is_listed(self) -> None:
        outcome = self._service(PresetsService).run(_config())
        self.assertEqual(outcome.status, STATUS_OK)
        self.assertIn(("presets", len(PRESETS)), outcome.summary)
        values = parse_block(self.output.texts["presets.txt"])
        for name in PRESETS:
            with self.subTest(preset=name):
                self.assertIn(values[f"{name}.status"], ("certified", "uncertified", "rejected"))

    def test_arguments_follow_builder_signature(self) -> None:
        config = _config(symbol={"gamma": "0.4"})
        info = PRESETS["cubic_l2"]
        kwargs = preset_arguments(config, info, FieldFactory(build_grid(config)))
        self.assertEqual(kwargs["gamma"], 0.4)
        self.assertNotIn("rho", kwargs)
