from __future__ import annotations

import unittest
from pathlib import Path
from unittest import mock

from app.domain.entities import OutputError
from app.infrastructure.reporting.pdf_renderer import PdfRunRenderer


class InfraPdfRendererTests(unittest.TestCase):
    def test_render_delegates(self) -> None:
        renderer = PdfRunRenderer()
        sections = [("kernel", [("kernel.s", 3.0), ("kernel.certified", True)])]
        with mock.patch("app.infrastructure.reporting.pdf_renderer.render_run_pdf") as render_pdf:
            renderer.render("fcalc kernel", sections, "out/report.pdf")
            args, kwargs = render_pdf.call_args
            self.assertEqual(args[0], "fcalc kernel")
            self.assertEqual(args[1], sections)
            self.assertIsInstance(args[2], Path)
            self.assertEqual(args[2].name, "report.pdf")

    def test_missing_reportlab_is_an_output_error(self) -> None:
        renderer = PdfRunRenderer()
        with mock.patch(
            "app.infrastructure.reporting.pdf_renderer.render_run_pdf",
            side_effect=RuntimeError("Missing dependency: reportlab"),
        ):
            with self.assertRaises(OutputError) as ctx:
                renderer.render("fcalc kernel", [], "out/report.pdf")
        self.assertIn("reportlab", str(ctx.exception))
