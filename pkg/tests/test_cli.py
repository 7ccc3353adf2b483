import csv
import json
import subprocess
import sys
from fractions import Fraction

import pytest

GVGRAPH = [sys.executable, "-m", "gvgraph"]


def run_cli(*args, **kwargs):
    return subprocess.run(GVGRAPH + list(args), capture_output=True, text=True, **kwargs)


class TestBoundsCommand:
    def test_json_flagship(self):
        r = run_cli("bounds", "-q", "2", "-n", "7", "-d", "3", "--json")
        assert r.returncode == 0
        obj = json.loads(r.stdout)
        assert obj["gv"] == "128/29"
        assert obj["wilf_cor27"] == "128/27"
        assert obj["hoffman_upper"] == "16"
        assert obj["hoffman_paper_literal"] == "64/3"
        assert obj["descent_bounds"] == ["128/27", "128/21", "128/9"]
        assert obj["constructed_code_size"] == 16
        assert obj["s"] == 3
        assert obj["degenerate"] is False

    def test_rationals_reparse_exactly(self):
        r = run_cli("bounds", "-q", "3", "-n", "5", "-d", "3", "--json")
        obj = json.loads(r.stdout)
        assert Fraction(obj["gv"]) == Fraction(3**5, 1 + 5 * 2 + 10 * 4)
        assert Fraction(obj["wilf_cor27"]) >= Fraction(obj["gv"])
        for text in obj["descent_bounds"]:
            Fraction(text)

    def test_composite_q_exits_2(self):
        r = run_cli("bounds", "-q", "4", "-n", "7", "-d", "3")
        assert r.returncode == 2
        assert "q must be prime" in r.stderr

    def test_degenerate_d1(self):
        r = run_cli("bounds", "-q", "2", "-n", "7", "-d", "1", "--json")
        assert r.returncode == 0
        obj = json.loads(r.stdout)
        assert Fraction(obj["gv"]) == 128
        assert obj["degenerate"] is True
        assert obj["hoffman_upper"] is None

    def test_csv_output(self):
        r = run_cli("bounds", "-q", "2", "-n", "7", "-d", "3")
        assert r.returncode == 0
        rows = list(csv.DictReader(r.stdout.splitlines()))
        assert len(rows) == 1
        assert rows[0]["gv"] == "128/29"
        assert rows[0]["gv_ceil"] == "5"
        assert rows[0]["hoffman_upper_floor"] == "16"


class TestSpectrumCommand:
    def test_level0_shape_and_values(self):
        r = run_cli("spectrum", "-q", "2", "-n", "7", "-d", "3")
        assert r.returncode == 0
        rows = list(csv.DictReader(r.stdout.splitlines()))
        assert len(rows) == 8
        assert [int(x["eigenvalue"]) for x in rows] == [28, 14, 4, -2, -4, -2, 4, 14]
        assert [int(x["multiplicity"]) for x in rows] == [1, 7, 21, 35, 35, 21, 7, 1]

    def test_d1_all_zero_column(self):
        r = run_cli("spectrum", "-q", "3", "-n", "4", "-d", "1")
        rows = list(csv.DictReader(r.stdout.splitlines()))
        assert all(int(x["eigenvalue"]) == 0 for x in rows)

    def test_level1_dense_rows(self):
        r = run_cli("spectrum", "-q", "2", "-n", "7", "-d", "3", "--level", "1")
        assert r.returncode == 0
        rows = list(csv.DictReader(r.stdout.splitlines()))
        assert len(rows) == 64
        assert rows[0]["vector"] == "0000000"
        assert int(rows[0]["eigenvalue"]) == 12
        assert min(int(x["eigenvalue"]) for x in rows) == -4

    def test_level_beyond_termination_exits_2(self):
        r = run_cli("spectrum", "-q", "2", "-n", "4", "-d", "2", "--level", "2")
        assert r.returncode == 2
        assert "beyond termination" in r.stderr

    def test_budget_exits_3(self):
        r = run_cli("spectrum", "-q", "2", "-n", "10", "-d", "3", "--level", "1", "--budget", "64")
        assert r.returncode == 3


class TestConstructCommand:
    def test_writes_file_and_trace(self, tmp_path):
        out = tmp_path / "h.pchk"
        r = run_cli("construct", "-q", "2", "-n", "7", "-d", "3", "-o", str(out))
        assert r.returncode == 0
        trace = json.loads(r.stdout)
        assert [rec["lambda_min"] for rec in trace] == [-4, -4, -4]
        assert trace[0]["pivot"] == "0001111"
        assert trace[0]["degree"] == 28
        assert (trace[-1]["bound_numerator"], trace[-1]["bound_denominator"]) == (128, 9)
        assert out.read_text().startswith("# gvpchk v1\nq 2\nn 7\ns 3\n")

    def test_d1_header_only(self, tmp_path):
        out = tmp_path / "e.pchk"
        r = run_cli("construct", "-q", "2", "-n", "3", "-d", "1", "-o", str(out))
        assert r.returncode == 0
        assert json.loads(r.stdout) == []
        assert out.read_text() == "# gvpchk v1\nq 2\nn 3\ns 0\n"

    def test_rerun_byte_identical(self, tmp_path):
        a, b = tmp_path / "a.pchk", tmp_path / "b.pchk"
        ra = run_cli("construct", "-q", "3", "-n", "4", "-d", "3", "-o", str(a))
        rb = run_cli("construct", "-q", "3", "-n", "4", "-d", "3", "-o", str(b))
        assert ra.stdout == rb.stdout
        assert a.read_bytes() == b.read_bytes()

    def test_budget_refusal_leaves_no_partial_file(self, tmp_path):
        out = tmp_path / "big.pchk"
        r = run_cli("construct", "-q", "2", "-n", "10", "-d", "3", "-o", str(out), "--budget", "64")
        assert r.returncode == 3
        assert list(tmp_path.iterdir()) == []


class TestVerifyCommand:
    @pytest.fixture()
    def hamming_file(self, tmp_path):
        out = tmp_path / "h.pchk"
        run_cli("construct", "-q", "2", "-n", "7", "-d", "3", "-o", str(out))
        return out

    def test_verify_passes_at_3(self, hamming_file):
        r = run_cli("verify", str(hamming_file), "-d", "3")
        assert r.returncode == 0
        assert "dimension: 4" in r.stdout
        assert "codewords: 16" in r.stdout
        assert "min_distance: 3" in r.stdout

    def test_verify_fails_at_4(self, hamming_file):
        r = run_cli("verify", str(hamming_file), "-d", "4")
        assert r.returncode == 1

    def test_corrupted_magic_exits_2(self, tmp_path, hamming_file):
        bad = tmp_path / "bad.pchk"
        bad.write_text(hamming_file.read_text().replace("gvpchk v1", "gvpchk v9"))
        r = run_cli("verify", str(bad), "-d", "3")
        assert r.returncode == 2

    def test_budget_exits_3(self, hamming_file):
        r = run_cli("verify", str(hamming_file), "-d", "3", "--budget", "8")
        assert r.returncode == 3

    def test_trivial_code_infinite_distance(self, tmp_path):
        out = tmp_path / "c.pchk"
        run_cli("construct", "-q", "2", "-n", "3", "-d", "4", "-o", str(out))
        r = run_cli("verify", str(out), "-d", "4")
        assert r.returncode == 0
        assert "min_distance: infinity" in r.stdout


class TestSweepCommand:
    def test_small_grid_csv(self, tmp_path):
        out = tmp_path / "sweep.csv"
        r = run_cli("sweep", "-q", "2", "-n", "4:7", "-d", "3:3", "-o", str(out))
        assert r.returncode == 0
        rows = list(csv.DictReader(out.read_text().splitlines()))
        assert [(x["q"], x["n"], x["d"]) for x in rows] == [("2", str(n), "3") for n in (4, 5, 6, 7)]
        assert all(x["status"] == "ok" for x in rows)
        for row in rows:
            assert Fraction(row["gv"]) <= Fraction(row["wilf_cor27"])
            final = Fraction(row["descent_final"])
            assert final >= Fraction(row["wilf_cor27"])
            assert int(row["constructed_code_size"]) == 2 ** int(row["n"]) // 2 ** int(row["s"])

    def test_invalid_cells_skipped_with_warning(self, tmp_path):
        out = tmp_path / "sweep.csv"
        r = run_cli("sweep", "-q", "2,4", "-n", "2:3", "-d", "4:4", "-o", str(out))
        assert r.returncode == 0
        rows = list(csv.DictReader(out.read_text().splitlines()))
        # only (2,3,4) is valid: d <= n+1 fails for n=2, q=4 is composite
        assert [(x["q"], x["n"], x["d"]) for x in rows] == [("2", "3", "4")]
        assert "skipping invalid cell" in r.stderr

    def test_empty_range_header_only(self, tmp_path):
        out = tmp_path / "empty.csv"
        r = run_cli("sweep", "-q", "2", "-n", "5:4", "-d", "3:3", "-o", str(out))
        assert r.returncode == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 1
        assert lines[0].startswith("q,n,d,status")

    def test_budget_cells_marked_skipped(self, tmp_path):
        out = tmp_path / "sweep.csv"
        r = run_cli("sweep", "-q", "2", "-n", "4:8", "-d", "3:3", "-o", str(out), "--budget", "32")
        assert r.returncode == 0
        rows = list(csv.DictReader(out.read_text().splitlines()))
        assert [x["status"] for x in rows] == ["ok", "ok", "skipped", "skipped", "skipped"]
        skipped = [x for x in rows if x["status"] == "skipped"]
        assert all(x["descent_final"] == "" and x["gv"] != "" for x in skipped)

    def test_json_format_valid_and_exact(self, tmp_path):
        out = tmp_path / "sweep.json"
        r = run_cli("sweep", "-q", "2,3", "-n", "3:4", "-d", "2:3", "-o", str(out), "--format", "json")
        assert r.returncode == 0
        rows = json.loads(out.read_text())
        assert all(Fraction(x["gv"]) > 0 for x in rows)
        cells = [(x["q"], x["n"], x["d"]) for x in rows]
        assert cells == sorted(cells)

    def test_parallel_jobs_deterministic(self, tmp_path):
        seq, par = tmp_path / "seq.csv", tmp_path / "par.csv"
        run_cli("sweep", "-q", "2", "-n", "4:6", "-d", "2:3", "-o", str(seq))
        run_cli("sweep", "-q", "2", "-n", "4:6", "-d", "2:3", "-o", str(par), "--jobs", "2")

        def strip_runtime(path):
            rows = list(csv.DictReader(path.read_text().splitlines()))
            for row in rows:
                row.pop("runtime_seconds")
            return rows

        assert strip_runtime(seq) == strip_runtime(par)


def test_usage_error_exits_2():
    r = run_cli("bounds", "-q", "2", "-n", "7")
    assert r.returncode == 2
