"""Tests for the sylow-census command line."""

import argparse
import json

import pytest

from cli.main import build_parser, main, parse_limit, parse_xs


class TestArgumentParsing:
    def test_parse_limit(self):
        assert parse_limit("10") == 10
        assert parse_limit("1e6") == 1_000_000
        assert parse_limit(" 2.5e3 ") == 2500

    @pytest.mark.parametrize("text", ["0", "-5", "1.5", "abc", "1e-2"])
    def test_parse_limit_rejects(self, text):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_limit(text)

    def test_parse_xs(self):
        assert parse_xs("1e4..1e7") == [10**4, 10**5, 10**6, 10**7]
        assert parse_xs("50000,10000,1e4") == [10**4, 50000]
        with pytest.raises(argparse.ArgumentTypeError):
            parse_xs("1e5..1e4")

    def test_subcommand_required(self):
        with pytest.raises(SystemExit) as exc:
            build_parser().parse_args([])
        assert exc.value.code == 2

    def test_bad_limit_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["census", "--x", "ten", "--q", "3"])
        assert exc.value.code == 2


class TestCensusCommand:
    def test_writes_artifacts(self, out_dir, capsys):
        code = main(["census", "--x", "10", "--q", "3", "--out", str(out_dir)])
        assert code == 0
        for suffix in ("csv", "json", "md"):
            assert (out_dir / f"census_q3_x10.{suffix}").exists()
        manifest = json.loads((out_dir / "manifest.json").read_text())
        assert manifest["command"] == "census"
        assert [a["path"] for a in manifest["artifacts"]] == [
            "census_q3_x10.csv",
            "census_q3_x10.json",
            "census_q3_x10.md",
        ]
        assert "10 integers, 2 signatures" in capsys.readouterr().out

    def test_q_two_is_rejected(self, out_dir, capsys):
        code = main(["census", "--x", "10", "--q", "2", "--out", str(out_dir)])
        assert code == 2
        assert "q = 2" in capsys.readouterr().err

    def test_composite_q_is_rejected(self, out_dir, capsys):
        assert main(["census", "--x", "10", "--q", "9", "--out", str(out_dir)]) == 2
        assert "odd prime" in capsys.readouterr().err

    def test_output_independent_of_threads(self, tmp_path):
        outputs = []
        for threads in ("1", "3"):
            out = tmp_path / f"t{threads}"
            args = ["census", "--x", "20000", "--q", "3", "--segment-size", "3000"]
            assert main(args + ["--threads", threads, "--out", str(out)]) == 0
            outputs.append(
                (
                    (out / "census_q3_x20000.csv").read_bytes(),
                    (out / "census_q3_x20000.json").read_bytes(),
                )
            )
        assert outputs[0] == outputs[1]


class TestConstantsCommand:
    def test_trivial_signature(self, out_dir, capsys):
        args = ["constants", "--q", "3", "--cutoff", "1e4", "--out", str(out_dir)]
        assert main(args) == 0
        records = {r["name"]: r for r in json.loads((out_dir / "constants.json").read_text())}
        assert set(records) == {"B_3", "C", "E", "K"}
        assert records["C"]["exact"] == "1"
        assert records["E"]["exact"] == "4/3"
        assert records["B_3"]["cutoff"] == 10**4
        assert float(records["K"]["value"]) == pytest.approx(
            float(records["B_3"]["value"]) * 4 / 3, rel=1e-12
        )
        printed = json.loads(capsys.readouterr().out)
        assert [r["name"] for r in printed] == ["B_3", "C", "E", "K"]

    def test_bad_alpha(self, out_dir, capsys):
        args = ["constants", "--q", "3", "--alpha", "[0]", "--out", str(out_dir)]
        assert main(args) == 2
        assert "error:" in capsys.readouterr().err


class TestMncCommand:
    def test_count_up_to_sixteen(self, out_dir, capsys):
        assert main(["mnc", "--x", "16", "--out", str(out_dir)]) == 0
        assert capsys.readouterr().out.strip() == "11"
        record = json.loads((out_dir / "mnc_x16.json").read_text())
        assert record["count"] == 11
        assert record["x"] == 16


class TestVerifyCommand:
    def test_writes_report(self, out_dir, small_cutoffs, capsys):
        args = [
            "verify",
            "--targets",
            "d:3:[],d:3:[1]",
            "--xs",
            "1000,10000,100000",
            "--out",
            str(out_dir),
        ]
        code = main(args)
        assert code in (0, 3)
        for name in ("verify.csv", "verify.json", "convergence.md", "manifest.json"):
            assert (out_dir / name).exists()
        summary = json.loads((out_dir / "verify.json").read_text())
        assert summary["passed"] == (code == 0)
        assert [v["target"] for v in summary["verdicts"]] == ["d:3:[]", "d:3:[1]"]
        assert "d:3:[]:" in capsys.readouterr().out

    def test_unknown_target(self, out_dir, capsys):
        args = ["verify", "--targets", "zeta:3", "--xs", "1e3", "--out", str(out_dir)]
        assert main(args) == 2
        assert "unknown target" in capsys.readouterr().err

    def test_cache_is_reused(self, out_dir, small_cutoffs, monkeypatch, tmp_path):
        monkeypatch.setattr(small_cutoffs, "database_url", f"sqlite:///{tmp_path / 'cache.db'}")
        args = ["verify", "--targets", "d:3:[]", "--xs", "1000,10000", "--cache"]
        first = main(args + ["--out", str(out_dir / "a")])
        second = main(args + ["--out", str(out_dir / "b")])
        assert first == second
        assert (out_dir / "a" / "verify.csv").read_bytes() == (
            out_dir / "b" / "verify.csv"
        ).read_bytes()
        assert (tmp_path / "cache.db").exists()


class TestMncWorkers:
    def test_threads_do_not_change_count(self, tmp_path, capsys):
        counts = []
        for threads in ("1", "3"):
            out = tmp_path / f"mnc{threads}"
            args = ["mnc", "--x", "5000", "--segment-size", "700", "--threads", threads]
            assert main(args + ["--out", str(out)]) == 0
            counts.append(int(capsys.readouterr().out.strip()))
            manifest = json.loads((out / "manifest.json").read_text())
            assert manifest["config"]["threads"] == int(threads)
            assert manifest["config"]["segment_size"] == 700
        assert counts[0] == counts[1]
