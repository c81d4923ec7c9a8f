"""Command-line behavior: determinism, exit codes, file workflows."""

import subprocess
import sys

import pytest

from bicliquelab.cli import RunConfig, cmd_demo, cmd_suite


def run_cli(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "bicliquelab", *argv],
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


class TestDemo:
    def test_n1_trivial_pass(self):
        text, ok = cmd_demo(1, RunConfig())
        assert ok
        assert "vertex-count 1" in text
        assert text.endswith("status pass\n")

    def test_n2_numbers(self):
        text, ok = cmd_demo(2, RunConfig())
        assert ok
        assert "vertex-count 128" in text
        assert "edge-count 7680" in text
        assert "independence-number 4" in text
        assert "chromatic-lower-bound 32" in text
        assert "partition-size 480" in text
        assert "partition-size-bound 930" in text

    def test_deterministic(self):
        a, _ = cmd_demo(2, RunConfig())
        b, _ = cmd_demo(2, RunConfig())
        assert a == b


class TestSuites:
    @pytest.mark.parametrize("name", ["cube", "peck"])
    def test_suite_passes(self, name):
        text, ok = cmd_suite(name, RunConfig())
        assert ok
        assert text.endswith("status pass\n")

    def test_suite_deterministic_across_processes(self):
        _, a, _ = run_cli("suite", "peck")
        _, b, _ = run_cli("suite", "peck")
        assert a == b


class TestExitCodes:
    def test_demo_ok(self):
        code, out, _ = run_cli("demo", "--n", "1")
        assert code == 0
        assert "status pass" in out

    def test_unknown_suite_usage_error(self):
        code, _, _ = run_cli("suite", "bogus")
        assert code == 2

    def test_missing_suite_name(self):
        code, _, _ = run_cli("suite")
        assert code == 2

    def test_resource_limit_exit(self):
        code, _, err = run_cli("demo", "--n", "4")
        assert code == 3
        assert "resource limit" in err

    def test_vertex_limit_flag(self):
        code, _, _ = run_cli("--vertex-limit", "10", "demo", "--n", "2")
        assert code == 3

    def test_invalid_n_usage_error(self):
        code, _, err = run_cli("demo", "--n", "0")
        assert code == 2
        assert "invalid input" in err

    def test_missing_file_usage_error(self, tmp_path):
        code, _, _ = run_cli(
            "verify", "--graph", str(tmp_path / "nope"), "--partition", str(tmp_path / "nope2")
        )
        assert code == 2


class TestFileWorkflows:
    def test_build_verify_round_trip(self, tmp_path):
        gpath = tmp_path / "g.dimacs"
        ppath = tmp_path / "p.system"
        code, out, _ = run_cli("--out", str(gpath), "build", "--what", "graph", "--n", "2")
        assert code == 0
        code, out, _ = run_cli("--out", str(ppath), "build", "--what", "partition", "--n", "2")
        assert code == 0
        code, out, _ = run_cli(
            "verify", "--graph", str(gpath), "--partition", str(ppath)
        )
        assert code == 0
        assert '"verdict": "pass"' in out

    def test_verify_failure_exit_1(self, tmp_path):
        gpath = tmp_path / "g.dimacs"
        ppath = tmp_path / "p.system"
        gpath.write_text("p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n", encoding="ascii")
        ppath.write_text("bicliquesystem 3 1 1\npart 0 : 1\n", encoding="ascii")
        code, out, _ = run_cli("verify", "--graph", str(gpath), "--partition", str(ppath))
        assert code == 1
        assert '"verdict": "fail"' in out

    def test_parse_error_exit_2(self, tmp_path):
        gpath = tmp_path / "bad.dimacs"
        gpath.write_text("p edge 3 5\ne 1 2\n", encoding="ascii")
        ppath = tmp_path / "p.system"
        ppath.write_text("bicliquesystem 3 0 1\n", encoding="ascii")
        code, _, err = run_cli("verify", "--graph", str(gpath), "--partition", str(ppath))
        assert code == 2
        assert "parse error" in err

    def test_oracle_alpha(self, tmp_path):
        gpath = tmp_path / "g.dimacs"
        gpath.write_text("p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n", encoding="ascii")
        code, out, _ = run_cli("oracle", "--graph", str(gpath), "--what", "alpha")
        assert code == 0
        assert out.startswith("alpha 2\n")

    def test_oracle_bp(self, tmp_path):
        gpath = tmp_path / "g.dimacs"
        gpath.write_text(
            "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n", encoding="ascii"
        )
        code, out, _ = run_cli("oracle", "--graph", str(gpath), "--what", "bp", "--t", "2")
        assert code == 0
        assert out.startswith("bp_2 2\n")

    def test_out_file_byte_identical_to_stdout(self, tmp_path):
        out_path = tmp_path / "report.txt"
        code, stdout, _ = run_cli("--out", str(out_path), "demo", "--n", "1")
        assert code == 0
        assert out_path.read_text(encoding="ascii") == stdout
