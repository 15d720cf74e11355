import json
import subprocess
import sys

import pytest

from helpers import CONFIG_DIR, config_path
from quadpencil.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def machine(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--machine")
    return code, json.loads(out)


class TestReport:
    def test_three_odd_circles(self, capsys):
        code, rec = machine(capsys, "report", "--input", str(config_path((3, 3))))
        assert code == 0 and rec["status"] == "ok"
        assert rec["gl_invariant"]["partition"] == "2+2+2"
        assert rec["diffeo"] == {"cover": "T³", "base": "T³"}
        assert rec["numeric"]["components"]["components"] == 1

    def test_no_real_points(self, capsys):
        code, rec = machine(capsys, "report", "--input", str(config_path((0, 1))), "--skip-numeric")
        assert code == 0
        assert rec["diffeo"] == {"cover": "ℝP³", "base": "L(4,1)"}
        assert rec["gl_invariant"] == {"s": 3, "l": 0, "partition": "0"}
        assert "numeric" not in rec

    def test_pretty_output(self, capsys):
        code, out, _ = run(capsys, "report", "--input", str(config_path((2, 1))), "--skip-numeric")
        assert code == 0
        assert "partition: 1+1+2" in out
        assert "#₂(S¹×S²)" in out

    def test_machine_output_is_stable(self, capsys):
        args = ("report", "--input", str(config_path((3, 1))), "--samples", "150")
        first = run(capsys, *args, "--machine")[1]
        second = run(capsys, *args, "--machine")[1]
        assert first == second


class TestInputErrors:
    def test_odd_mass_in_tau_iota_locus(self, tmp_path, capsys):
        bad = {"genus": 2, "weierstrass": ["0", "1", "2", "3", "4", "5"],
               "divisor": [{"point": "1/2", "mult": -5}]}
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(bad))
        code, _, err = run(capsys, "report", "--input", str(path))
        assert code == 1
        assert "tau-iota" in err

    def test_wrong_degree(self, tmp_path, capsys):
        bad = {"genus": 2, "weierstrass": ["0", "1", "2", "3", "4", "5"],
               "divisor": [{"point": "6", "mult": -3}]}
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(bad))
        assert run(capsys, "classify", "--input", str(path))[0] == 1

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "curve-info", "--input", "/nonexistent.json")
        assert code == 1 and "cannot read" in err

    def test_malformed_json(self, tmp_path, capsys):
        path = tmp_path / "x.json"
        path.write_text("{")
        assert run(capsys, "normal-form", "--input", str(path))[0] == 1

    def test_quadrics_only_for_verify(self, capsys):
        path = CONFIG_DIR / "identity_quadrics.json"
        assert run(capsys, "classify", "--input", str(path))[0] == 1

    def test_sw_needs_genus(self, capsys):
        assert run(capsys, "sw")[0] == 1
        assert run(capsys, "sw", "--genus", "1")[0] == 1


class TestSubcommands:
    def test_curve_info(self, capsys):
        code, rec = machine(capsys, "curve-info", "--input", str(config_path((3, 3))))
        assert code == 0
        assert rec["intervals"]["k"] == 3
        assert rec["topology"]["n"] == 3

    def test_normal_form(self, capsys):
        code, rec = machine(capsys, "normal-form", "--input", str(config_path((3, 3))))
        assert code == 0
        assert rec["eps"] == [1, -1, 1]
        assert rec["check"]["residual_q0"] < 1e-9
        assert rec["q0"] == "x1^2 - x2^2 - x3^2 + x4^2 + x5^2 - x6^2"

    def test_classify(self, capsys):
        code, rec = machine(capsys, "classify", "--input", str(config_path((1, 1))))
        assert code == 0
        assert (rec["n"], rec["k"], rec["s"], rec["partition"]) == (1, 1, 2, "2")

    @pytest.mark.parametrize("g, spin", [(2, False), (3, True), (5, True)])
    def test_sw(self, capsys, g, spin):
        code, rec = machine(capsys, "sw", "--genus", str(g))
        assert code == 0
        assert rec["spin"] is spin and rec["relatively_spin"] is True
        assert rec["w1"] == "0"

    def test_sw_dmax(self, capsys):
        code, rec = machine(capsys, "sw", "--genus", "4", "--dmax", "4")
        assert code == 0 and rec["dmax"] == 4

    def test_verify_ok(self, capsys):
        code, rec = machine(capsys, "verify", "--input", str(config_path((2, 1))), "--samples", "200")
        assert code == 0 and rec["status"] == "ok"

    def test_verify_empty(self, capsys):
        code, rec = machine(capsys, "verify", "--input", str(CONFIG_DIR / "identity_quadrics.json"),
                            "--samples", "50")
        assert code == 2
        assert rec["message"] == "no points found"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "quadpencil", "sw", "--genus", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "relatively_spin: True" in proc.stdout
