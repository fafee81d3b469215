"""sylow-census: exact censuses, constants and asymptotic verification.

Every command writes its artifacts plus a manifest.json into --out.
Exit codes: 0 success, 2 usage or domain error, 3 verification FAIL.
"""

import argparse
import json
import logging
import sys
from contextlib import nullcontext
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from analytic.euler import artin_xi, b_q, constant_A, k_constant
from analytic.precision import PrecisionValue
from census.census import census_mnc, census_sylow, cyclic_count
from census.table import CensusConfig
from config.constants import ExitCode
from config.logging_config import setup_logging
from config.settings import get_settings, get_version
from groups.errors import SylowCensusError
from groups.partitions import Partition, c_alpha, e_q_alpha
from reports.export import (
    constant_record,
    verify_summary,
    write_census_csv,
    write_census_json,
    write_json,
    write_verify_csv,
)
from reports.manifest import ManifestRecorder
from reports.markdown_export import MarkdownExporter
from reports.renderer import ReportRenderer
from reports.schemas import ConstantRecord, MncRecord
from store.base import cache_session
from verify.convergence import parse_targets, run_verification

logger = logging.getLogger(__name__)


def parse_limit(text: str) -> int:
    """Positive integer, also written in scientific notation such as 1e8."""
    try:
        value = Decimal(text.strip())
    except InvalidOperation:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if value != value.to_integral_value() or value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return int(value)


def parse_xs(text: str) -> list[int]:
    """Either a decade range "1e4..1e8" or a comma list "10000,50000"."""
    if ".." in text:
        start_text, end_text = text.split("..", 1)
        start, end = parse_limit(start_text), parse_limit(end_text)
        if start > end:
            raise argparse.ArgumentTypeError(f"empty range {text!r}")
        xs = []
        x = start
        while x <= end:
            xs.append(x)
            x *= 10
        return xs
    return sorted({parse_limit(part) for part in text.split(",") if part.strip()})


def _out_dir(args: argparse.Namespace) -> Path:
    out = Path(args.out or get_settings().output_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _cache(args: argparse.Namespace):
    if args.cache or get_settings().cache_enabled:
        return cache_session()
    return nullcontext()


def cmd_census(args: argparse.Namespace) -> int:
    settings = get_settings()
    cfg = CensusConfig(
        x=args.x,
        q=args.q,
        segment_size=args.segment_size or settings.segment_size,
        threads=args.threads or settings.threads,
    )
    out = _out_dir(args)
    recorder = ManifestRecorder(
        "census",
        {"x": cfg.x, "q": cfg.q, "segment_size": cfg.segment_size, "threads": cfg.threads},
        out,
    )
    table = census_sylow(cfg)
    stem = f"census_q{cfg.q}_x{cfg.x}"
    recorder.add(write_census_csv(out / f"{stem}.csv", table))
    recorder.add(write_census_json(out / f"{stem}.json", table))
    summary = out / f"{stem}.md"
    summary.write_text(MarkdownExporter().export(table), encoding="utf-8")
    recorder.add(summary)
    recorder.write()
    print(f"{table.total} integers, {len(table.signatures())} signatures -> {out / stem}.csv")
    return ExitCode.OK


def _exact_record(name: str, value: Fraction, q: int, alpha: Partition) -> ConstantRecord:
    return constant_record(
        name, PrecisionValue(float(value), 0.0), q=q, alpha=str(alpha), exact=str(value)
    )


def cmd_constants(args: argparse.Namespace) -> int:
    settings = get_settings()
    cutoff = args.cutoff or settings.euler_cutoff
    alpha = Partition.parse(args.alpha)
    records = [
        constant_record(f"B_{args.q}", b_q(args.q, cutoff), q=args.q, cutoff=cutoff),
        _exact_record("C", c_alpha(alpha), args.q, alpha),
        _exact_record("E", e_q_alpha(args.q, alpha), args.q, alpha),
        constant_record(
            "K", k_constant(args.q, alpha, cutoff), q=args.q, alpha=str(alpha), cutoff=cutoff
        ),
    ]
    config = {"q": args.q, "alpha": str(alpha), "cutoff": cutoff, "mnc": args.mnc}
    if args.mnc:
        xi = artin_xi(settings.xi_cutoff)
        records.append(constant_record("xi", xi, cutoff=settings.xi_cutoff))
        records.append(
            constant_record("A", constant_A(settings.a_cutoff, xi=xi), cutoff=settings.a_cutoff)
        )
        config.update({"xi_cutoff": settings.xi_cutoff, "a_cutoff": settings.a_cutoff})
    out = _out_dir(args)
    recorder = ManifestRecorder("constants", config, out)
    recorder.add(write_json(out / "constants.json", records))
    recorder.write()
    print(json.dumps([r.model_dump(exclude_none=True) for r in records], indent=2))
    return ExitCode.OK


def cmd_mnc(args: argparse.Namespace) -> int:
    out = _out_dir(args)
    settings = get_settings()
    threads = args.threads or settings.threads
    segment_size = args.segment_size or settings.segment_size
    recorder = ManifestRecorder(
        "mnc", {"x": args.x, "segment_size": segment_size, "threads": threads}, out
    )
    count = census_mnc(args.x, threads=threads, segment_size=segment_size)
    record = MncRecord(x=args.x, count=count, cyclic=cyclic_count(args.x, segment_size))
    recorder.add(write_json(out / f"mnc_x{args.x}.json", record))
    recorder.write()
    print(record.count)
    return ExitCode.OK


def cmd_verify(args: argparse.Namespace) -> int:
    settings = get_settings()
    targets = parse_targets(args.targets)
    xs = args.xs or parse_xs(settings.verify_xs)
    band = settings.verify_band if args.band is None else args.band
    out = _out_dir(args)
    recorder = ManifestRecorder(
        "verify",
        {"targets": [t.label for t in targets], "xs": xs, "band": band,
         "threads": args.threads or settings.threads},
        out,
    )
    with _cache(args) as session:
        report = run_verification(targets, xs, band, args.threads, session)
    recorder.add(write_verify_csv(out / "verify.csv", report.rows + report.contrast))
    recorder.add(write_json(out / "verify.json", verify_summary(report)))
    recorder.add(ReportRenderer().write_convergence(report, out / "convergence.md"))
    recorder.write()
    for verdict in report.verdicts:
        print(f"{verdict.target}: {verdict.verdict.value}")
    return ExitCode.OK if report.passed else ExitCode.VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sylow-census",
        description="Count n <= x by the structure of (Z/nZ)^x and check the asymptotics.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {get_version()}")
    parser.add_argument("--progress", action="store_true", help="Show sieve progress bars.")
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        type=str.upper,
        default=None,
        help="Override LOG_LEVEL for this run.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    census = sub.add_parser("census", help="Histogram of Sylow q-signatures over n <= x.")
    census.add_argument("--x", type=parse_limit, required=True)
    census.add_argument("--q", type=int, required=True)
    census.add_argument("--segment-size", type=parse_limit, default=None)
    census.add_argument("--threads", type=int, default=None)
    census.add_argument("--out", default=None)
    census.set_defaults(handler=cmd_census)

    constants = sub.add_parser("constants", help="B_q, C(alpha), E_q(alpha) and K.")
    constants.add_argument("--q", type=int, required=True)
    constants.add_argument("--alpha", default="[]")
    constants.add_argument("--cutoff", type=parse_limit, default=None)
    constants.add_argument("--mnc", action="store_true", help="Also compute xi and A.")
    constants.add_argument("--out", default=None)
    constants.set_defaults(handler=cmd_constants)

    mnc = sub.add_parser("mnc", help="Count n <= x with maximally non-cyclic unit group.")
    mnc.add_argument("--x", type=parse_limit, required=True)
    mnc.add_argument("--segment-size", type=parse_limit, default=None)
    mnc.add_argument("--threads", type=int, default=None)
    mnc.add_argument("--out", default=None)
    mnc.set_defaults(handler=cmd_mnc)

    verify = sub.add_parser("verify", help="Compare census counts with the main terms.")
    verify.add_argument("--targets", required=True, help='e.g. "d:3:[],d:3:[1],mnc"')
    verify.add_argument("--xs", type=parse_xs, default=None, help='"1e4..1e8" or "1e4,1e5"')
    verify.add_argument("--band", type=float, default=None)
    verify.add_argument("--threads", type=int, default=None)
    verify.add_argument("--cache", action="store_true", help="Reuse cached census runs.")
    verify.add_argument("--out", default=None)
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)
    if args.progress:
        get_settings().show_progress = True
    try:
        return int(args.handler(args))
    except SylowCensusError as exc:
        logger.debug("[cli] command failed", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return int(ExitCode.USAGE)


if __name__ == "__main__":
    raise SystemExit(main())
