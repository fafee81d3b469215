"""Tests for CSV/JSON export, manifests and the rendered reports."""

import hashlib
import json

from analytic.precision import PrecisionValue
from census.table import CensusTable
from config.constants import Verdict
from groups.partitions import Partition
from reports.export import (
    constant_record,
    format_decimal,
    verify_summary,
    write_census_csv,
    write_census_json,
    write_json,
    write_verify_csv,
)
from reports.manifest import ManifestRecorder, sha256_file
from reports.markdown_export import MarkdownExporter
from reports.renderer import ReportRenderer
from verify.convergence import ComparisonRow, ConvergenceReport, TargetVerdict


def _report():
    rows = [
        ComparisonRow("d:3:[]", 100, 40, 50.0, 0.8, 3, Partition()),
        ComparisonRow("d:3:[]", 1000, 450, 500.0, 0.9, 3, Partition()),
    ]
    verdict = TargetVerdict("d:3:[]", Verdict.PASS, 0.4, 0.1, True, True)
    contrast = [ComparisonRow("cyclic", 100, 47, 32.57, 1.443)]
    return ConvergenceReport(rows=rows, verdicts=[verdict], band=0.4, xs=[100, 1000], contrast=contrast)


class TestFormatting:
    def test_significant_digits(self):
        assert format_decimal(1 / 3) == "0.333333333333333"
        assert format_decimal(2.0) == "2"
        assert format_decimal(1.5e-12) == "1.5e-12"

    def test_constant_record(self):
        record = constant_record("A", PrecisionValue(0.5, 1e-3, heuristic_tail=4e-4), cutoff=100)
        assert record.value == "0.5"
        assert record.err == "0.001"
        assert record.heuristic_tail == "0.0004"
        assert record.q is None


class TestCensusExport:
    def test_csv_content(self, out_dir, census_q3_x10):
        path = write_census_csv(out_dir / "census.csv", census_q3_x10)
        assert path.read_text() == (
            "x,q,k,signature,count\n"
            "10,3,0,[],6\n"
            "10,3,0,[1],1\n"
            "10,3,1,[],2\n"
            "10,3,2,[1],1\n"
        )

    def test_csv_quotes_multi_part_signatures(self, out_dir):
        table = CensusTable(q=3, x=1, counts={(0, Partition.of(1, 1)): 1})
        text = write_census_csv(out_dir / "c.csv", table).read_text()
        assert '"[1,1]"' in text

    def test_json_mirror(self, out_dir, census_q3_x10):
        path = write_census_json(out_dir / "census.json", census_q3_x10)
        records = json.loads(path.read_text())
        assert records[0] == {"x": 10, "q": 3, "k": 0, "signature": "[]", "count": 6}
        assert sum(r["count"] for r in records) == 10

    def test_byte_identical_rewrites(self, out_dir, census_q3_x10):
        first = write_census_json(out_dir / "a.json", census_q3_x10).read_bytes()
        second = write_census_json(out_dir / "b.json", census_q3_x10).read_bytes()
        assert first == second


class TestVerifyExport:
    def test_csv(self, out_dir):
        report = _report()
        text = write_verify_csv(out_dir / "verify.csv", report.rows + report.contrast).read_text()
        lines = text.splitlines()
        assert lines[0] == "target,q,alpha,x,empirical,predicted,ratio"
        assert lines[1] == "d:3:[],3,[],100,40,50,0.8"
        assert lines[-1] == "cyclic,,,100,47,32.57,1.443"

    def test_summary(self, out_dir):
        summary = verify_summary(_report())
        assert summary.passed
        assert summary.verdicts[0].verdict == "PASS"
        path = write_json(out_dir / "verify.json", summary)
        assert json.loads(path.read_text())["xs"] == [100, 1000]


class TestManifest:
    def test_lists_artifacts_with_checksums(self, out_dir):
        artifact = out_dir / "data.txt"
        artifact.write_text("hello\n")
        recorder = ManifestRecorder("census", {"x": 10, "q": 3}, out_dir)
        recorder.add(artifact)
        path = recorder.write()

        manifest = json.loads(path.read_text())
        assert manifest["command"] == "census"
        assert manifest["config"] == {"x": 10, "q": 3}
        entry = manifest["artifacts"][0]
        assert entry["path"] == "data.txt"
        assert entry["sha256"] == hashlib.sha256(b"hello\n").hexdigest()
        assert entry["bytes"] == 6
        assert sha256_file(artifact) == entry["sha256"]


class TestRendering:
    def test_convergence_markdown(self, out_dir):
        path = ReportRenderer().write_convergence(_report(), out_dir / "convergence.md")
        text = path.read_text()
        assert text.startswith("# Convergence report")
        assert "## d:3:[] (Sylow q-subgroup count D(H,x))" in text
        assert "| 1000 | 450 | 500 | 0.9 |" in text
        assert "**PASS**" in text
        assert "Cyclic unit groups" in text

    def test_census_markdown(self, census_q3_x10):
        text = MarkdownExporter().export(census_q3_x10)
        assert "# Sylow 3-subgroup census up to x = 10" in text
        assert "| [] | 8 | 0.800000 | 0: 6, 1: 2 |" in text
        assert "| [1] | 2 | 0.200000 | 0: 1, 2: 1 |" in text
