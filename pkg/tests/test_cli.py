"""Command line interface: exit codes, JSON output, determinism."""

import json

import pytest

from qtangle.cli import (EXIT_OK, EXIT_PARSE, EXIT_USAGE, EXIT_VALIDATE,
                         EXIT_VERIFY, PRECISION_ENV, main)

UNKNOT = "bottom\ncup 1 1 u\ncap 1\n"


@pytest.fixture()
def unknot_file(tmp_path):
    f = tmp_path / "unknot.tangle"
    f.write_text(UNKNOT)
    return str(f)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestEval:
    def test_unknot_text(self, capsys, unknot_file):
        code, out, _ = run(capsys, ["eval", unknot_file, "--precision", "16"])
        assert code == EXIT_OK
        assert "value:" in out and "-q" in out

    def test_unknot_json(self, capsys, unknot_file):
        code, out, _ = run(capsys, ["eval", unknot_file, "--json",
                                    "--precision", "16"])
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["command"] == "eval"
        assert report["series"]["coeffs"] == ["-1", "0", "-1"]
        assert report["series"]["min_deg"] == -1

    def test_modes_agree(self, capsys, unknot_file):
        _, a, _ = run(capsys, ["eval", unknot_file, "--json",
                               "--precision", "16", "--mode", "global"])
        _, b, _ = run(capsys, ["eval", unknot_file, "--json",
                               "--precision", "16", "--mode", "sliced"])
        sa, sb = json.loads(a)["series"], json.loads(b)["series"]
        # the validity window may differ between modes; the values must not
        assert (sa["min_deg"], sa["coeffs"]) == (sb["min_deg"], sb["coeffs"])

    def test_open_tangle_reports_intertwiner(self, capsys, tmp_path):
        f = tmp_path / "strand.tangle"
        f.write_text("bottom +1\npos 1\nneg 1\n" .replace("pos 1\nneg 1\n", ""))
        code, out, _ = run(capsys, ["eval", str(f), "--json",
                                    "--precision", "16"])
        assert code == EXIT_OK
        assert "value" in json.loads(out)

    def test_parse_error_exit_2(self, capsys, tmp_path):
        f = tmp_path / "bad.tangle"
        f.write_text("cup 1 1 u\n")
        code, _, err = run(capsys, ["eval", str(f)])
        assert code == EXIT_PARSE
        assert "parse error" in err

    def test_validation_error_exit_3(self, capsys, tmp_path):
        f = tmp_path / "bad.tangle"
        f.write_text("bottom +1 +1\ncap 1\n")
        code, _, err = run(capsys, ["eval", str(f)])
        assert code == EXIT_VALIDATE
        assert "validation error" in err

    def test_missing_file_exit_3(self, capsys, tmp_path):
        code, _, _ = run(capsys, ["eval", str(tmp_path / "nope.tangle")])
        assert code == EXIT_VALIDATE


class TestUsageAndPrecision:
    def test_unknown_flag_exits_64(self, unknot_file):
        with pytest.raises(SystemExit) as exc:
            main(["eval", unknot_file, "--frobnicate"])
        assert exc.value.code == EXIT_USAGE

    def test_unknown_subcommand_exits_64(self):
        with pytest.raises(SystemExit) as exc:
            main(["no-such-command"])
        assert exc.value.code == EXIT_USAGE

    def test_no_subcommand_exits_64(self, capsys):
        assert main([]) == EXIT_USAGE

    def test_precision_below_minimum_exit_3(self, capsys, unknot_file):
        code, _, err = run(capsys, ["eval", unknot_file, "--precision", "4"])
        assert code == EXIT_VALIDATE
        assert "precision" in err

    def test_env_override(self, capsys, unknot_file, monkeypatch):
        monkeypatch.setenv(PRECISION_ENV, "16")
        code, out, _ = run(capsys, ["eval", unknot_file, "--json"])
        assert code == EXIT_OK
        assert json.loads(out)["precision"] == 16

    def test_env_override_garbage_falls_back(self, capsys, unknot_file,
                                             monkeypatch):
        monkeypatch.setenv(PRECISION_ENV, "not-a-number")
        code, out, _ = run(capsys, ["eval", unknot_file, "--json"])
        assert code == EXIT_OK
        assert json.loads(out)["precision"] == 64


class TestVerify:
    def test_invariance_pass(self, capsys):
        code, out, _ = run(capsys, [
            "verify", "invariance", "--moves", "r2", "--trials", "5",
            "--seed", "1", "--precision", "16", "--n-slices", "4"])
        assert code == EXIT_OK
        assert out.startswith("PASS")

    def test_invariance_negative_control_fails(self, capsys):
        code, out, _ = run(capsys, [
            "verify", "invariance", "--moves", "uncoloured-r1",
            "--trials", "10", "--seed", "3", "--precision", "16",
            "--n-slices", "4", "--flip-gamma"])
        assert code == EXIT_VERIFY
        assert "FAIL" in out
        assert "reproduce: qtangle verify invariance" in out

    def test_invariance_unknown_move_exit_3(self, capsys):
        code, _, err = run(capsys, ["verify", "invariance",
                                    "--moves", "r9"])
        assert code == EXIT_VALIDATE
        assert "unknown move" in err

    def test_jones_wenzl(self, capsys):
        code, out, _ = run(capsys, ["verify", "jones-wenzl", "--n", "3",
                                    "--precision", "24"])
        assert code == EXIT_OK
        assert out.count("PASS") == 6 and "FAIL" not in out

    def test_slides(self, capsys):
        code, out, _ = run(capsys, ["verify", "slides", "--n", "2",
                                    "--precision", "24"])
        assert code == EXIT_OK
        assert out.count("PASS") == 3


class TestReports:
    def test_grassmann(self, capsys):
        code, out, _ = run(capsys, ["grassmann", "--k", "1", "--n", "2",
                                    "--check-complex", "--hbound", "-3",
                                    "--json"])
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["dimension"] == 2 and report["ok"]

    def test_grassmann_bad_kn_exit_3(self, capsys):
        code, _, _ = run(capsys, ["grassmann", "--k", "3", "--n", "2"])
        assert code == EXIT_VALIDATE

    def test_quiver_check_gl2(self, capsys):
        code, out, _ = run(capsys, ["quiver-check", "--which", "gl2"])
        assert code == EXIT_OK and "FAIL" not in out

    def test_gor(self, capsys):
        code, out, _ = run(capsys, ["gor", "--hbound", "4",
                                    "--qbound", "16", "--json"])
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["homology"]["0,0"] == "1"
        assert "knot_homology_series" in report


class TestDeterminism:
    def test_identical_argv_identical_output(self, capsys):
        argv = ["verify", "invariance", "--moves", "r2,zigzag",
                "--trials", "6", "--seed", "9", "--precision", "16",
                "--n-slices", "4", "--json"]
        code1, out1, _ = run(capsys, argv)
        code2, out2, _ = run(capsys, argv)
        assert (code1, out1) == (code2, out2)

    def test_json_is_sorted(self, capsys, unknot_file):
        _, out, _ = run(capsys, ["eval", unknot_file, "--json",
                                 "--precision", "16"])
        report = json.loads(out)
        assert list(report) == sorted(report)
