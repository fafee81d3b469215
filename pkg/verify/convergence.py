"""Empirical-versus-predicted comparison across decades of x.

A target passes when |ratio - 1| at the largest x lies inside the band and
|ratio - 1| never increases across the last TREND_WINDOW checkpoints.
"""

import logging
import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from sqlalchemy.orm import Session

from census.census import census_mnc_checkpoints, census_sylow_checkpoints, cyclic_count
from census.table import CensusConfig, CensusTable
from config.constants import TREND_WINDOW, TargetKind, Verdict
from config.settings import get_settings
from groups.errors import ConfigError, MissingCensusError, require_odd_prime
from groups.partitions import Partition
from store.cache import load_mnc, load_table, save_mnc, save_table
from verify.predictions import predicted_cyclic, predicted_D, predicted_D0, predicted_mnc

logger = logging.getLogger(__name__)

_TARGET_SPLIT = re.compile(r",(?![^\[]*\])")


@dataclass(frozen=True)
class TargetSpec:
    kind: TargetKind
    q: int | None = None
    alpha: Partition | None = None

    @property
    def label(self) -> str:
        if self.kind == TargetKind.MNC:
            return self.kind.value
        return f"{self.kind.value}:{self.q}:{self.alpha}"

    def __str__(self) -> str:
        return self.label


def parse_target(text: str) -> TargetSpec:
    """Parse "d:3:[1]", "d0:5:[]" or "mnc"."""
    fields = text.strip().split(":")
    try:
        kind = TargetKind(fields[0].lower())
    except ValueError:
        raise ConfigError(f"unknown target kind in {text!r}") from None
    if kind == TargetKind.MNC:
        if len(fields) != 1:
            raise ConfigError(f"target 'mnc' takes no parameters, got {text!r}")
        return TargetSpec(kind)
    if len(fields) != 3:
        raise ConfigError(f"expected '{kind.value}:q:[parts]', got {text!r}")
    try:
        q = int(fields[1])
    except ValueError:
        raise ConfigError(f"q must be an integer in {text!r}") from None
    require_odd_prime(q)
    return TargetSpec(kind, q, Partition.parse(fields[2]))


def parse_targets(text: str) -> list[TargetSpec]:
    """Comma-separated targets; commas inside brackets belong to a partition."""
    return [parse_target(part) for part in _TARGET_SPLIT.split(text) if part.strip()]


@dataclass(frozen=True)
class ComparisonRow:
    target: str
    x: int
    empirical: int
    predicted: float
    ratio: float
    q: int | None = None
    alpha: Partition | None = None

    @property
    def deviation(self) -> float:
        return abs(self.ratio - 1.0)


@dataclass(frozen=True)
class TargetVerdict:
    target: str
    verdict: Verdict
    band: float
    final_deviation: float
    trend_ok: bool
    within_band: bool


@dataclass
class ConvergenceReport:
    rows: list[ComparisonRow]
    verdicts: list[TargetVerdict]
    band: float
    xs: list[int]
    # Cyclic unit-group counts, shown for contrast and never judged
    contrast: list[ComparisonRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(v.verdict == Verdict.PASS for v in self.verdicts)


def predict_main_term(target: TargetSpec, x: int) -> float:
    if target.kind == TargetKind.D:
        return predicted_D(target.q, target.alpha, x)
    if target.kind == TargetKind.D0:
        return predicted_D0(target.q, target.alpha, x)
    return predicted_mnc(x)


def judge(target: str, rows: Sequence[ComparisonRow], band: float) -> TargetVerdict:
    deviations = [row.deviation for row in rows]
    window = deviations[-TREND_WINDOW:]
    trend_ok = all(later <= earlier for earlier, later in zip(window, window[1:]))
    within_band = deviations[-1] < band
    verdict = Verdict.PASS if trend_ok and within_band else Verdict.FAIL
    return TargetVerdict(target, verdict, band, deviations[-1], trend_ok, within_band)


def _empirical(
    target: TargetSpec,
    x: int,
    tables: Mapping[int, Mapping[int, CensusTable]],
    mnc_counts: Mapping[int, int],
) -> int:
    if target.kind == TargetKind.MNC:
        if x not in mnc_counts:
            raise MissingCensusError(f"no maximally non-cyclic count at x={x}")
        return mnc_counts[x]
    table = tables.get(target.q, {}).get(x)
    if table is None:
        raise MissingCensusError(f"no census for q={target.q} at x={x}")
    if target.kind == TargetKind.D:
        return table.count_d(target.alpha)
    return table.count_dk(0, target.alpha)


def convergence_report(
    targets: Sequence[TargetSpec],
    xs: Sequence[int],
    band: float | None = None,
    tables: Mapping[int, Mapping[int, CensusTable]] | None = None,
    mnc_counts: Mapping[int, int] | None = None,
    predict: Callable[[TargetSpec, int], float] = predict_main_term,
) -> ConvergenceReport:
    """Rows for every (target, x) plus one verdict per target."""
    band = get_settings().verify_band if band is None else band
    xs = sorted(set(xs))
    if not xs:
        raise ConfigError("at least one x is required")
    tables = tables or {}
    mnc_counts = mnc_counts or {}

    rows: list[ComparisonRow] = []
    verdicts: list[TargetVerdict] = []
    for target in targets:
        target_rows = []
        for x in xs:
            empirical = _empirical(target, x, tables, mnc_counts)
            predicted = predict(target, x)
            target_rows.append(
                ComparisonRow(
                    target.label, x, empirical, predicted, empirical / predicted,
                    target.q, target.alpha,
                )
            )
        rows.extend(target_rows)
        verdict = judge(target.label, target_rows, band)
        verdicts.append(verdict)
        logger.info(
            f"[verify] {target.label}: {verdict.verdict.value} "
            f"(|ratio-1| = {verdict.final_deviation:.4f} at x={xs[-1]}, band {band})"
        )
    return ConvergenceReport(rows=rows, verdicts=verdicts, band=band, xs=xs)


def cyclic_contrast(xs: Iterable[int]) -> list[ComparisonRow]:
    rows = []
    for x in sorted(set(xs)):
        empirical = cyclic_count(x)
        predicted = predicted_cyclic(x)
        rows.append(ComparisonRow("cyclic", x, empirical, predicted, empirical / predicted))
    return rows


def collect_census(
    targets: Sequence[TargetSpec],
    xs: Sequence[int],
    threads: int | None = None,
    session: Session | None = None,
) -> tuple[dict[int, dict[int, CensusTable]], dict[int, int]]:
    """Run (or load from the cache) every census the targets need.

    One checkpointed sieve pass per q covers all xs.
    """
    xs = sorted(set(xs))
    tables: dict[int, dict[int, CensusTable]] = {}
    for q in sorted({t.q for t in targets if t.kind != TargetKind.MNC}):
        found = {}
        if session is not None:
            found = {x: t for x in xs if (t := load_table(session, q, x)) is not None}
        missing = [x for x in xs if x not in found]
        if missing:
            cfg = CensusConfig(x=max(missing), q=q, threads=threads or get_settings().threads)
            computed = census_sylow_checkpoints(cfg, missing)
            if session is not None:
                for table in computed.values():
                    save_table(session, table)
            found.update(computed)
        logger.info(f"[verify] q={q}: {len(xs) - len(missing)} cached, {len(missing)} computed")
        tables[q] = found

    mnc_counts: dict[int, int] = {}
    if any(t.kind == TargetKind.MNC for t in targets):
        if session is not None:
            mnc_counts = {x: c for x in xs if (c := load_mnc(session, x)) is not None}
        missing = [x for x in xs if x not in mnc_counts]
        if missing:
            computed = census_mnc_checkpoints(missing, threads=threads)
            if session is not None:
                for x, count in computed.items():
                    save_mnc(session, x, count)
            mnc_counts.update(computed)
    return tables, mnc_counts


def run_verification(
    targets: Sequence[TargetSpec],
    xs: Sequence[int],
    band: float | None = None,
    threads: int | None = None,
    session: Session | None = None,
) -> ConvergenceReport:
    tables, mnc_counts = collect_census(targets, xs, threads, session)
    report = convergence_report(targets, xs, band, tables, mnc_counts)
    if any(t.kind == TargetKind.MNC for t in targets):
        report.contrast = cyclic_contrast(report.xs)
    return report
