import json

import pandas as pd
import pytest

from blindpair.cli.main import (
    EXIT_BAD_VALUE,
    EXIT_CACHE,
    EXIT_INPUT,
    EXIT_OK,
    build_parser,
    main,
)

PILLOW_FLAGS = ["--m", "8", "--reps", "50"]


def run(capsys, argv):
    status = main(argv)
    return status, capsys.readouterr().out


def run_with_log(capsys, argv):
    status = main(argv)
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def strict_loads(text):
    def reject(token):
        raise ValueError(f"non-standard JSON constant {token}")

    return json.loads(text, parse_constant=reject)


class TestEstimate:
    def test_json_to_stdout(self, capsys, pairs_csv):
        status, out = run(capsys, ["estimate", str(pairs_csv)])
        assert status == EXIT_OK
        data = json.loads(out)
        assert data["kind"] == "marginal_estimate"
        assert len(data["x"]) == len(data["g1"]) == len(data["truncated"]) == 100

    def test_csv_next_to_input(self, capsys, pairs_csv):
        status, _ = run(capsys, ["estimate", str(pairs_csv), "--format", "csv", "--isotonic"])
        assert status == EXIT_OK
        frame = pd.read_csv(pairs_csv.with_suffix(".estimate.csv"))
        assert list(frame.columns) == ["x", "g1", "g2", "d_n", "truncated"]
        assert frame["g1"].is_monotonic_increasing
        assert frame["g2"].is_monotonic_increasing

    def test_output_file(self, capsys, pairs_csv, tmp_path):
        output = tmp_path / "out.json"
        status, out = run(capsys, ["estimate", str(pairs_csv), "--output", str(output)])
        assert status == EXIT_OK
        assert out == ""
        assert json.loads(output.read_text())["kind"] == "marginal_estimate"

    def test_missing_file(self, capsys, tmp_path):
        status, out = run(capsys, ["estimate", str(tmp_path / "missing.csv")])
        assert status == EXIT_INPUT
        assert out == ""

    def test_empty_file(self, capsys, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("a,b\n")
        assert run(capsys, ["estimate", str(path)])[0] == EXIT_INPUT

    def test_malformed_row(self, capsys, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("a,b\n0.1,0.2\n0.3,oops\n")
        output = tmp_path / "out.json"
        status, out, err = run_with_log(capsys, ["estimate", str(path), "--output", str(output)])
        assert status == EXIT_BAD_VALUE
        assert out == ""
        assert not output.exists()
        assert "data row 2" in err

    def test_ragged_row_after_header(self, capsys, tmp_path):
        path = tmp_path / "ragged.csv"
        path.write_text("a,b\n0.1,0.2\n0.3,0.4,0.5\n")
        status, out, err = run_with_log(capsys, ["estimate", str(path)])
        assert status == EXIT_BAD_VALUE
        assert out == ""
        assert "data row 2" in err


class TestTest:
    def test_report(self, capsys, pairs_csv, tmp_path):
        argv = ["test", str(pairs_csv), *PILLOW_FLAGS, "--cache-dir", str(tmp_path), "--alpha", "0.05"]
        status, out = run(capsys, argv)
        assert status == EXIT_OK
        report = json.loads(out)
        assert report["kind"] == "test_report"
        assert report["pillow_m"] == 8
        assert report["reject"] == (report["statistic"] > report["quantiles"]["0.05"])
        assert 0.0 < report["p_value"] <= 1.0
        assert set(report["quantiles"]) == {"0.1", "0.05", "0.01"}

    def test_identical_across_runs_and_threads(self, capsys, pairs_csv, tmp_path):
        base = ["test", str(pairs_csv), *PILLOW_FLAGS, "--seed", "4"]
        _, first = run(capsys, [*base, "--threads", "1", "--cache-dir", str(tmp_path / "a")])
        _, second = run(capsys, [*base, "--threads", "3", "--cache-dir", str(tmp_path / "b")])
        _, cached = run(capsys, [*base, "--threads", "3", "--cache-dir", str(tmp_path / "b")])
        assert first == second == cached

    @pytest.mark.parametrize("alpha", ["0", "1.5"])
    def test_invalid_alpha(self, capsys, pairs_csv, tmp_path, alpha):
        output = tmp_path / "report.json"
        argv = ["test", str(pairs_csv), *PILLOW_FLAGS, "--cache-dir", str(tmp_path), "--alpha", alpha, "--output", str(output)]
        status, out, err = run_with_log(capsys, argv)
        assert status == EXIT_BAD_VALUE
        assert out == ""
        assert not output.exists()
        assert "alpha" in err


class TestPillowQuantiles:
    def test_json(self, capsys, tmp_path):
        argv = ["pillow-quantiles", *PILLOW_FLAGS, "--cache-dir", str(tmp_path), "--alpha", "0.1,0.05"]
        status, out = run(capsys, argv)
        assert status == EXIT_OK
        table = json.loads(out)
        assert set(table["rows"]) == {"0.1", "0.05"}

    def test_csv(self, capsys, tmp_path):
        output = tmp_path / "table.csv"
        argv = ["pillow-quantiles", *PILLOW_FLAGS, "--cache-dir", str(tmp_path), "--format", "csv", "--output", str(output)]
        assert run(capsys, argv)[0] == EXIT_OK
        frame = pd.read_csv(output)
        assert list(frame.columns) == ["alpha", "quantile"]
        assert list(frame["alpha"]) == [0.1, 0.05, 0.01]

    def test_cache_mismatch(self, capsys, tmp_path):
        (tmp_path / "pillow_m8_r50_s0.npz").write_bytes(b"not an npz file")
        argv = ["pillow-quantiles", *PILLOW_FLAGS, "--seed", "0", "--cache-dir", str(tmp_path)]
        assert run(capsys, argv)[0] == EXIT_CACHE


class TestSimulate:
    def test_estimation_csv(self, capsys, tmp_path):
        output = tmp_path / "curves.csv"
        argv = ["simulate", "uniform-square", "--n", "40", "--reps", "3", "--format", "csv", "--output", str(output)]
        status, out = run(capsys, argv)
        assert status == EXIT_OK
        assert json.loads(out)["kind"] == "study_result"
        frame = pd.read_csv(output)
        assert set(frame["rep"]) == {0, 1, 2}
        assert {"x", "g1", "g2", "truncated", "f1n", "f2n", "f_min_n", "f_max_n"} <= set(frame.columns)

    def test_clt(self, capsys):
        status, out = run(capsys, ["simulate", "clt", "--n", "30", "--reps", "5", "--x0", "0.4"])
        assert status == EXIT_OK
        assert json.loads(out)["x0"] == 0.4

    def test_size(self, capsys, tmp_path):
        argv = ["simulate", "h0-uniform", "--n", "20", "--reps", "10", "--m", "8", "--pillow-reps", "50", "--cache-dir", str(tmp_path), "--alpha", "0.1"]
        status, out = run(capsys, argv)
        assert status == EXIT_OK
        result = json.loads(out)
        assert result["alpha"] == 0.1
        assert len(result["statistics"]) == 10

    def test_size_csv_output(self, capsys, tmp_path):
        output = tmp_path / "rate.csv"
        argv = ["simulate", "h0-uniform", "--n", "20", "--reps", "10", "--m", "8", "--pillow-reps", "50", "--cache-dir", str(tmp_path), "--format", "csv", "--output", str(output)]
        status, out = run(capsys, argv)
        assert status == EXIT_OK
        summary = json.loads(out)
        frame = pd.read_csv(output)
        assert list(frame.columns) == ["rep", "statistic", "rejected"]
        assert list(frame["rep"]) == list(range(10))
        assert int(frame["rejected"].sum()) == summary["rejections"]

    def test_clt_csv_output(self, capsys, tmp_path):
        output = tmp_path / "clt.csv"
        argv = ["simulate", "clt", "--n", "30", "--reps", "5", "--format", "csv", "--output", str(output)]
        status, _ = run(capsys, argv)
        assert status == EXIT_OK
        frame = pd.read_csv(output)
        assert len(frame) == 1
        assert {"x0", "n", "reps", "var_lower", "var_upper"} <= set(frame.columns)

    def test_zero_alpha_writes_strict_json(self, capsys, tmp_path):
        argv = ["simulate", "h0-uniform", "--n", "20", "--reps", "10", "--m", "8", "--pillow-reps", "50", "--cache-dir", str(tmp_path), "--alpha", "0"]
        status, out = run(capsys, argv)
        assert status == EXIT_OK
        result = strict_loads(out)
        assert result["threshold"] is None
        assert result["rejection_rate"] == 0.0

    def test_clt_without_separation_writes_strict_json(self, capsys):
        status, out = run(capsys, ["simulate", "clt", "--n", "30", "--reps", "5", "--x0", "1.0"])
        assert status == EXIT_OK
        result = strict_loads(out)
        assert result["asymptotic_var_lower"] is None
        assert result["asymptotic_var_upper"] is None

    def test_unknown_scenario(self, capsys):
        assert run(capsys, ["simulate", "no-such-scenario"])[0] == EXIT_INPUT


class TestHelp:
    @pytest.mark.parametrize(
        "command, flags",
        [
            ("estimate", ["--grid", "--isotonic", "--format", "--seed", "--threads"]),
            ("test", ["--m", "--reps", "--alpha-list", "--alpha", "--cache-dir"]),
            ("pillow-quantiles", ["--m", "--reps", "--alpha"]),
            ("simulate", ["--n", "--reps", "--pillow-reps", "--c", "--delta", "--x0"]),
        ],
    )
    def test_flags_listed(self, capsys, command, flags):
        with pytest.raises(SystemExit) as excinfo:
            main([command, "--help"])
        assert excinfo.value.code == 0
        out = capsys.readouterr().out
        for flag in flags:
            assert flag in out

    def test_scenarios_listed(self):
        help_text = build_parser().format_help()
        assert "simulate" in help_text
