from __future__ import annotations

from pathlib import Path
from typing import Any, List, Sequence, Tuple
from xml.sax.saxutils import escape

from fcalc.textblock import format_value

Section = Tuple[str, Sequence[Tuple[str, Any]]]

VALUE_WIDTH = 60


def _clip(text: str) -> str:
    return text if len(text) <= VALUE_WIDTH else text[: VALUE_WIDTH - 3] + "..."


def render_run_pdf(title: str, sections: Sequence[Section], output_path: Path) -> Path:
    """One table per section of key/value pairs; invariant mode keeps bytes stable across runs."""
    try:
        from reportlab.lib import colors
        from reportlab.lib.pagesizes import A4
        from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
        from reportlab.lib.units import inch
        from reportlab.platypus import Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle
    except ImportError as exc:
        raise RuntimeError("Missing dependency: reportlab") from exc

    styles = getSampleStyleSheet()
    styles.add(
        ParagraphStyle(
            name="RunTitle",
            parent=styles["Title"],
            fontSize=16,
            leading=20,
            textColor=colors.HexColor("#1F3A5F"),
            spaceAfter=8,
        )
    )
    styles.add(
        ParagraphStyle(
            name="SectionHeader",
            parent=styles["Heading2"],
            fontSize=11,
            leading=14,
            textColor=colors.HexColor("#1F3A5F"),
            spaceBefore=8,
            spaceAfter=4,
        )
    )

    def para(text: str, style_name: str) -> Paragraph:
        return Paragraph(escape(text), styles[style_name])

    output_path.parent.mkdir(parents=True, exist_ok=True)
    doc = SimpleDocTemplate(
        str(output_path),
        pagesize=A4,
        leftMargin=0.7 * inch,
        rightMargin=0.7 * inch,
        topMargin=0.7 * inch,
        bottomMargin=0.7 * inch,
        title=title,
        invariant=1,
    )

    story: List[Any] = [para(title, "RunTitle")]
    for heading, pairs in sections:
        story.append(para(heading, "SectionHeader"))
        rows = [[key, _clip(format_value(value))] for key, value in pairs]
        if not rows:
            continue
        table = Table(rows, colWidths=[2.6 * inch, 4.0 * inch], repeatRows=0)
        table.setStyle(
            TableStyle(
                [
                    ("BOX", (0, 0), (-1, -1), 0.5, colors.HexColor("#B8C7DA")),
                    ("INNERGRID", (0, 0), (-1, -1), 0.25, colors.HexColor("#D0DAE6")),
                    ("ROWBACKGROUNDS", (0, 0), (-1, -1), [colors.white, colors.HexColor("#F6F8FB")]),
                    ("FONTNAME", (0, 0), (-1, -1), "Helvetica"),
                    ("FONTSIZE", (0, 0), (-1, -1), 8),
                    ("VALIGN", (0, 0), (-1, -1), "TOP"),
                ]
            )
        )
        story.append(table)
        story.append(Spacer(1, 6))

    doc.build(story)
    return output_path
