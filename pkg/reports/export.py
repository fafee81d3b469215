"""Deterministic CSV and JSON writers.

Floats are written as decimal strings with SIGNIFICANT_DIGITS significant
digits, integers exactly, and rows in a fixed order, so identical inputs
give byte-identical files.
"""

import csv
import json
import logging
from pathlib import Path
from typing import Iterable, Sequence

from pydantic import BaseModel

from analytic.precision import PrecisionValue
from census.table import CensusTable
from config.constants import CENSUS_CSV_HEADER, SIGNIFICANT_DIGITS, VERIFY_CSV_HEADER
from reports.schemas import (
    CensusRecord,
    ComparisonRecord,
    ConstantRecord,
    VerdictRecord,
    VerifySummary,
)
from verify.convergence import ComparisonRow, ConvergenceReport, TargetVerdict

logger = logging.getLogger(__name__)


def format_decimal(value: float) -> str:
    return format(float(value), f".{SIGNIFICANT_DIGITS}g")


def census_records(table: CensusTable) -> list[CensusRecord]:
    return [
        CensusRecord(x=table.x, q=table.q, k=k, signature=str(signature), count=count)
        for k, signature, count in table.rows()
    ]


def constant_record(
    name: str,
    value: PrecisionValue,
    q: int | None = None,
    alpha: str | None = None,
    cutoff: int | None = None,
    exact: str | None = None,
) -> ConstantRecord:
    heuristic = value.heuristic_tail
    return ConstantRecord(
        name=name,
        q=q,
        alpha=alpha,
        value=format_decimal(value.real),
        err=format_decimal(value.err),
        cutoff=cutoff,
        heuristic_tail=None if heuristic is None else format_decimal(heuristic),
        exact=exact,
    )


def comparison_record(row: ComparisonRow) -> ComparisonRecord:
    return ComparisonRecord(
        target=row.target,
        q=row.q,
        alpha=None if row.alpha is None else str(row.alpha),
        x=row.x,
        empirical=row.empirical,
        predicted=format_decimal(row.predicted),
        ratio=format_decimal(row.ratio),
    )


def verdict_record(verdict: TargetVerdict) -> VerdictRecord:
    return VerdictRecord(
        target=verdict.target,
        verdict=verdict.verdict.value,
        band=format_decimal(verdict.band),
        final_deviation=format_decimal(verdict.final_deviation),
        trend_ok=verdict.trend_ok,
        within_band=verdict.within_band,
    )


def verify_summary(report: ConvergenceReport) -> VerifySummary:
    return VerifySummary(
        xs=report.xs,
        band=format_decimal(report.band),
        passed=report.passed,
        verdicts=[verdict_record(v) for v in report.verdicts],
    )


def _write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence]) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    logger.debug(f"[reports] wrote {path}")
    return path


def write_json(path: Path, payload: BaseModel | Sequence[BaseModel]) -> Path:
    if isinstance(payload, BaseModel):
        data = payload.model_dump()
    else:
        data = [record.model_dump() for record in payload]
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    logger.debug(f"[reports] wrote {path}")
    return path


def write_census_csv(path: Path, table: CensusTable) -> Path:
    records = census_records(table)
    rows = ([r.x, r.q, r.k, r.signature, r.count] for r in records)
    return _write_csv(path, CENSUS_CSV_HEADER, rows)


def write_census_json(path: Path, table: CensusTable) -> Path:
    return write_json(path, census_records(table))


def write_verify_csv(path: Path, rows: Sequence[ComparisonRow]) -> Path:
    records = [comparison_record(row) for row in rows]
    lines = (
        [r.target, r.q if r.q is not None else "", r.alpha or "", r.x, r.empirical,
         r.predicted, r.ratio]
        for r in records
    )
    return _write_csv(path, VERIFY_CSV_HEADER, lines)
