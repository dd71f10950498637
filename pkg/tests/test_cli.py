import csv
import json
import math
import subprocess
import sys

import pytest

from dna_necklace import cli
from dna_necklace.cycle_index import IntegralityError


def run_cli(capsys, *args):
    code = cli.main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    rows = [line for line in text.splitlines() if not line.startswith("#")]
    return list(csv.DictReader(rows))


class TestCount:
    def test_worked_example_quiet(self, capsys):
        code, out, _ = run_cli(capsys, "--quiet", "count", "--alpha", "10", "--at", "8", "--gc", "6")
        assert code == 0
        assert out == "19\n"

    def test_parameter_echo_by_default(self, capsys):
        code, out, _ = run_cli(capsys, "count", "--alpha", "2", "--at", "1", "--gc", "1")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "# command: count"
        assert lines[-1] == "1"

    def test_odd_alpha_rejected(self, capsys):
        code, _, err = run_cli(capsys, "count", "--alpha", "3", "--at", "5", "--gc", "5")
        assert code == 2
        assert "must be even" in err

    def test_empty_spec_rejected(self, capsys):
        code, _, err = run_cli(capsys, "count", "--alpha", "0", "--at", "0", "--gc", "0")
        assert code == 2
        assert "empty necklace" in err


class TestPdf:
    def test_small_table_exact(self, capsys):
        code, out, _ = run_cli(capsys, "--quiet", "pdf", "--at", "2", "--gc", "2")
        assert code == 0
        assert out == "alpha,count,probability\n0,0,0\n2,1,0.5\n4,1,0.5\n"

    def test_homogeneous_single_row(self, capsys):
        code, out, _ = run_cli(capsys, "--quiet", "pdf", "--at", "0", "--gc", "4")
        assert code == 0
        assert out == "alpha,count,probability\n0,1,1\n"

    def test_balanced_hundred_bead_support(self, capsys):
        code, out, _ = run_cli(capsys, "--quiet", "pdf", "--at", "50", "--gc", "50")
        assert code == 0
        rows = parse_csv(out)
        assert [int(r["alpha"]) for r in rows] == list(range(0, 101, 2))
        # counts must be plain decimal strings, never float-rendered
        for row in rows:
            assert set(row["count"]) <= set("0123456789")
        assert abs(sum(float(r["probability"]) for r in rows) - 1.0) < 1e-12

    def test_json_mirrors_csv(self, capsys):
        code, out, _ = run_cli(capsys, "pdf", "--at", "2", "--gc", "2", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["command"] == "pdf"
        assert doc["parameters"] == {"at": 2, "gc": 2}
        assert doc["rows"][1] == {"alpha": 2, "count": "1", "probability": 0.5}

    def test_quiet_json_drops_parameters(self, capsys):
        _, out, _ = run_cli(capsys, "--quiet", "pdf", "--at", "2", "--gc", "2", "--format", "json")
        assert "parameters" not in json.loads(out)

    def test_out_file_matches_stdout(self, capsys, tmp_path):
        path = tmp_path / "pdf.csv"
        run_cli(capsys, "--quiet", "pdf", "--at", "5", "--gc", "7", "--out", str(path))
        _, out, _ = run_cli(capsys, "--quiet", "pdf", "--at", "5", "--gc", "7")
        assert path.read_text() == out


class TestMc:
    def test_forced_distribution(self, capsys):
        code, out, _ = run_cli(
            capsys, "--quiet", "mc", "--at", "1", "--gc", "1",
            "--runs", "100", "--seed", "7", "--sets", "2",
        )
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 2
        for row in rows:
            assert int(row["alpha"]) == 2
            assert float(row["frequency"]) == 1.0
            assert float(row["d"]) == 0.0

    def test_byte_identical_reruns(self, capsys, tmp_path):
        args = ("mc", "--at", "20", "--gc", "30", "--runs", "500", "--seed", "11")
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        run_cli(capsys, *args, "--out", str(first))
        run_cli(capsys, *args, "--out", str(second))
        assert first.read_bytes() == second.read_bytes()

    def test_subseeds_rederive_rows(self, capsys):
        _, out, _ = run_cli(
            capsys, "--quiet", "mc", "--at", "10", "--gc", "10",
            "--runs", "200", "--seed", "5", "--sets", "2",
        )
        rows = parse_csv(out)
        from dna_necklace.montecarlo import derive_subseed

        subseeds = sorted({row["sub_seed"] for row in rows})
        assert subseeds == sorted(str(derive_subseed(5, i)) for i in range(2))

    def test_zero_runs_rejected(self, capsys):
        code, _, err = run_cli(capsys, "mc", "--at", "2", "--gc", "2", "--runs", "0")
        assert code == 2
        assert "runs" in err


class TestFit:
    def test_balanced_hundred_bead_fit(self, capsys):
        code, out, _ = run_cli(capsys, "--quiet", "fit", "--at", "50", "--gc", "50")
        assert code == 0
        row = parse_csv(out)[0]
        assert 50.3 <= float(row["alpha0"]) <= 50.7
        assert 4.9 <= float(row["sigma"]) <= 5.3

    def test_tiny_support_rejected(self, capsys):
        code, _, err = run_cli(capsys, "fit", "--at", "1", "--gc", "1")
        assert code == 2
        assert "support too small" in err

    def test_missing_inputs_rejected(self, capsys):
        code, _, err = run_cli(capsys, "fit")
        assert code == 2
        assert "--pdf-file" in err

    def test_fit_from_synthetic_file(self, capsys, tmp_path):
        path = tmp_path / "gauss.csv"
        lines = ["alpha,probability"]
        for alpha in range(30, 71, 2):
            p = 0.08 * math.exp(-((alpha - 50.0) ** 2) / (2 * 5.0**2))
            lines.append(f"{alpha},{p!r}")
        path.write_text("\n".join(lines) + "\n")
        code, out, _ = run_cli(capsys, "--quiet", "fit", "--pdf-file", str(path))
        assert code == 0
        row = parse_csv(out)[0]
        assert abs(float(row["alpha0"]) - 50.0) < 1e-6 * 50.0
        assert abs(float(row["sigma"]) - 5.0) < 1e-6 * 5.0
        assert abs(float(row["amplitude"]) - 0.08) < 1e-6 * 0.08

    def test_fit_from_pdf_command_output(self, capsys, tmp_path):
        path = tmp_path / "pdf.csv"
        run_cli(capsys, "pdf", "--at", "50", "--gc", "50", "--out", str(path))
        code, out, _ = run_cli(capsys, "--quiet", "fit", "--pdf-file", str(path))
        assert code == 0
        _, direct, _ = run_cli(capsys, "--quiet", "fit", "--at", "50", "--gc", "50")
        file_row, direct_row = parse_csv(out)[0], parse_csv(direct)[0]
        assert abs(float(file_row["alpha0"]) - float(direct_row["alpha0"])) < 1e-9


class TestSweep:
    def test_fixed_at_rows(self, capsys):
        code, out, _ = run_cli(
            capsys, "--quiet", "sweep", "--mode", "fixed-at",
            "--at", "100", "--gc-values", "25,100,2500",
        )
        assert code == 0
        rows = parse_csv(out)
        assert [int(r["n_gc"]) for r in rows] == [25, 100, 2500]
        assert all(r["error"] == "" for r in rows)
        centers = [float(r["alpha0"]) for r in rows]
        assert centers == sorted(centers)

    def test_fixed_ratio_slope_column(self, capsys):
        code, out, _ = run_cli(
            capsys, "--quiet", "sweep", "--mode", "fixed-ratio",
            "--ratio", "1:1", "--n-values", "80,120,160",
        )
        assert code == 0
        rows = parse_csv(out)
        slopes = {r["slope"] for r in rows}
        assert len(slopes) == 1
        assert abs(float(slopes.pop()) - 0.5) < 0.02

    def test_missing_mode_arguments_rejected(self, capsys):
        code, _, err = run_cli(capsys, "sweep", "--mode", "fixed-at")
        assert code == 2
        assert "--gc-values" in err
        code, _, err = run_cli(capsys, "sweep", "--mode", "fixed-ratio", "--ratio", "2:1")
        assert code == 2
        code, _, err = run_cli(capsys, "sweep", "--mode", "fixed-ratio", "--ratio", "2", "--n-values", "80")
        assert code == 2
        assert "GC:AT" in err


class TestOracleCommand:
    def test_length_four_buckets(self, capsys):
        code, out, _ = run_cli(capsys, "--quiet", "oracle", "--n", "4")
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 6
        assert sum(int(r["count"]) for r in rows) == 6

    def test_out_of_range_rejected(self, capsys):
        assert run_cli(capsys, "oracle", "--n", "19")[0] == 2
        assert run_cli(capsys, "oracle", "--n", "0")[0] == 2


class TestExitCodes:
    def test_integrality_failure_maps_to_three(self, capsys, monkeypatch):
        def boom(spec, alpha):
            raise IntegralityError("rigged")

        monkeypatch.setattr(cli, "count_necklaces", boom)
        code, _, err = run_cli(capsys, "count", "--alpha", "2", "--at", "1", "--gc", "1")
        assert code == 3
        assert "integrality failure" in err


class TestProcessBoundaryRoundTrip:
    def test_pdf_counts_match_oracle_buckets(self, capsys):
        # The oracle side runs in a real subprocess; the pdf side in-process.
        for n in range(1, 15):
            proc = subprocess.run(
                [sys.executable, "-m", "dna_necklace", "--quiet", "oracle", "--n", str(n)],
                capture_output=True,
                text=True,
                check=True,
            )
            buckets = {
                (int(r["n_at"]), int(r["alpha"])): int(r["count"])
                for r in parse_csv(proc.stdout)
            }
            for n_at in range(n + 1):
                _, out, _ = run_cli(
                    capsys, "--quiet", "pdf", "--at", str(n_at), "--gc", str(n - n_at)
                )
                for row in parse_csv(out):
                    expected = buckets.get((n_at, int(row["alpha"])), 0)
                    assert int(row["count"]) == expected, (n, n_at, row)
