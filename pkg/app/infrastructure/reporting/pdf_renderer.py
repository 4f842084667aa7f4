from __future__ import annotations

from pathlib import Path
from typing import Any, List, Tuple

from app.domain.entities import OutputError
from app.domain.ports import PdfRendererPort
from app.infrastructure.reporting.pdf_engine import render_run_pdf


class PdfRunRenderer(PdfRendererPort):
    def render(self, title: str, sections: List[Tuple[str, List[Tuple[str, Any]]]], output_path: str) -> None:
        try:
            render_run_pdf(title, sections, Path(output_path))
        except RuntimeError as exc:
            raise OutputError(f"cannot write {output_path}: {exc}") from exc
