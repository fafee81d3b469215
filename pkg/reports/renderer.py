"""Jinja2 rendering of the Markdown convergence report."""

import logging
from pathlib import Path

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from config.constants import TARGET_DISPLAY_NAMES, TargetKind
from config.settings import get_version
from verify.convergence import ConvergenceReport

logger = logging.getLogger(__name__)


class ReportRenderer:
    """Renders verification results into Markdown using Jinja2 templates."""

    def __init__(self, template_dir: Path | None = None):
        self.template_dir = template_dir or Path(__file__).parent / "templates"
        self.env = Environment(
            loader=FileSystemLoader(str(self.template_dir)),
            autoescape=False,
            keep_trailing_newline=True,
            trim_blocks=True,
            lstrip_blocks=True,
            undefined=StrictUndefined,
        )
        self.env.filters["sig"] = self._significant
        self.env.filters["verdict_mark"] = self._verdict_mark

    @staticmethod
    def _significant(value: float, digits: int = 6) -> str:
        return format(float(value), f".{digits}g")

    @staticmethod
    def _verdict_mark(verdict: str) -> str:
        return "**PASS**" if verdict == "PASS" else "**FAIL**"

    @staticmethod
    def _display_name(target: str) -> str:
        kind = TargetKind(target.split(":", 1)[0])
        return TARGET_DISPLAY_NAMES[kind]

    def render_convergence(self, report: ConvergenceReport) -> str:
        template = self.env.get_template("convergence.md.j2")
        groups = []
        for verdict in report.verdicts:
            groups.append(
                {
                    "verdict": verdict,
                    "name": self._display_name(verdict.target),
                    "rows": [row for row in report.rows if row.target == verdict.target],
                }
            )
        markdown = template.render(
            version=get_version(),
            band=report.band,
            xs=report.xs,
            passed=report.passed,
            groups=groups,
            contrast=report.contrast,
        )
        logger.debug(f"[reports] rendered convergence report for {len(groups)} target(s)")
        return markdown

    def write_convergence(self, report: ConvergenceReport, path: Path) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.render_convergence(report), encoding="utf-8")
        return path
