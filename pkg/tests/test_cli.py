import pytest

from straus.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSolve:
    def test_17(self, capsys):
        code, out, _ = run(capsys, "solve", "17")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "# p=17: 4 solutions"
        assert lines[1:] == [
            "5 30 510 I(b)",
            "5 34 170 I(b)",
            "6 15 510 I(a)+I(b)",
            "6 17 102 I(b)",
        ]

    def test_csv_dump(self, capsys, tmp_path):
        dest = tmp_path / "sols.csv"
        code, _, _ = run(capsys, "solve", "2", "--out", str(dest))
        assert code == 0
        assert dest.read_text() == "p,x,y,z\n2,1,2,2\n"

    def test_composite_is_usage_error(self, capsys):
        code, _, err = run(capsys, "solve", "16")
        assert code == 2
        assert "not prime" in err


class TestClassify:
    def test_known_solution(self, capsys):
        code, out, _ = run(capsys, "classify", "71", "20", "284", "355")
        assert code == 0
        assert "type=II" in out
        assert "offset_x=2" in out

    def test_non_solution(self, capsys):
        code, _, err = run(capsys, "classify", "17", "5", "34", "171")
        assert code == 2
        assert "not a solution" in err


class TestVerify:
    def test_conj1_reports_193(self, capsys):
        code, out, _ = run(capsys, "verify", "conj1", "--to", "1000")
        assert code == 0
        assert "exceptions=193" in out

    def test_strict_exit_code(self, capsys):
        code, _, _ = run(capsys, "verify", "conj1", "--to", "1000", "--strict")
        assert code == 1

    def test_strict_passes_when_clean(self, capsys):
        code, _, _ = run(capsys, "verify", "conj2", "--to", "200", "--strict")
        assert code == 0

    def test_ledger_csv(self, capsys, tmp_path):
        dest = tmp_path / "ledger.csv"
        code, _, _ = run(capsys, "verify", "conj1", "--to", "500", "--out", str(dest))
        assert code == 0
        assert "conj1,193,exception,," in dest.read_text()

    def test_unknown_claim_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "conj9"])
        assert exc.value.code == 2


class TestStats:
    def test_writes_distribution(self, capsys, tmp_path):
        dest = tmp_path / "dist.csv"
        code, _, _ = run(capsys, "stats", "--to", "100", "--out", str(dest),
                         "--workers", "1")
        assert code == 0
        lines = dest.read_text().splitlines()
        assert lines[0] == "i,count,proportion"
        assert len(lines) == 7

    def test_stdout_and_series(self, capsys, tmp_path):
        series = tmp_path / "series.csv"
        code, out, _ = run(capsys, "stats", "--from", "17", "--to", "17",
                           "--series-out", str(series), "--workers", "1")
        assert code == 0
        assert "1,4,1.0000" in out
        assert series.read_text().splitlines()[1] == "17,4,0,0.0000"


class TestConstructAndWitness:
    def test_construct_13(self, capsys):
        code, out, _ = run(capsys, "construct", "13")
        assert code == 0
        assert "rule: 5 mod 8" in out
        assert "4 26 52 I(b)" in out

    def test_construct_unmatched(self, capsys):
        code, out, _ = run(capsys, "construct", "2521")
        assert code == 0
        assert "no theorem5 rule matches" in out

    def test_construct_witness_table(self, capsys):
        code, out, _ = run(capsys, "construct", "13", "--ruleset", "conjecture3-table")
        assert code == 0
        assert "rule: 5 mod 8" in out

    def test_witness_conj3(self, capsys):
        code, out, _ = run(capsys, "witness", "conj3", "17")
        assert code == 0
        assert "witness=15" in out
        assert "triple=(6,15,510)" in out

    def test_witness_absent(self, capsys):
        code, out, _ = run(capsys, "witness", "conj5", "47")
        assert code == 0
        assert "no conj5 witness" in out


class TestGrid:
    def test_ascii_stdout(self, capsys):
        code = main(["grid", "17", "--xmax", "10", "--ymax", "40"])
        out = capsys.readouterr().out
        assert code == 0
        assert out.count("P") == 4

    def test_ppm_file(self, capsys, tmp_path):
        dest = tmp_path / "grid.ppm"
        code, _, _ = run(capsys, "grid", "17", "--xmax", "8", "--ymax", "8",
                         "--format", "ppm", "--out", str(dest))
        assert code == 0
        assert dest.read_bytes().startswith(b"P6\n8 8\n255\n")


class TestDeterminism:
    def test_repeated_runs_identical(self, capsys):
        _, out1, _ = run(capsys, "solve", "193")
        _, out2, _ = run(capsys, "solve", "193")
        assert out1 == out2
