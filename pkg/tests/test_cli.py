from __future__ import annotations

import numpy as np
import pytest

from dfsgates.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerify:
    def test_u1_passes(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--gate", "u1", "--n", "4", "--j", "1",
            "--angle", str(np.pi / 4),
        )
        assert code == 0
        assert "gate_fidelity" in out
        assert "FAIL" not in out

    def test_u2_n6_passes(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--gate", "u2", "--n", "6", "--j", "3", "--angle", "1.0",
        )
        assert code == 0
        assert out.strip().endswith("result: PASS")

    def test_u3_includes_swap_check(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--gate", "u3")
        assert code == 0
        assert "subspace_swap" in out

    def test_bad_index_pair_is_config_error(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--gate", "u3", "--n", "4", "--k", "2", "--l", "1",
        )
        assert code == 2
        assert "error:" in err

    def test_odd_n_is_config_error(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--gate", "u1", "--n", "5")
        assert code == 2


class TestSweep:
    def test_default_grid_and_golden_rows(self, capsys, tmp_path):
        out_path = tmp_path / "sweep.csv"
        code, _, _ = run_cli(
            capsys, "sweep", "--cycles", "2", "--out", str(out_path),
        )
        assert code == 0
        lines = out_path.read_text().splitlines()
        header, rows = lines[0], lines[1:]
        assert header == "error_kind,error_value,fidelity,seed,plan_cycles,gate,theta_or_phi"
        assert len(rows) == 2 * 41
        kinds = [row.split(",")[0] for row in rows]
        assert kinds == sorted(kinds)  # detuning block, then flip block
        by_key = {(r.split(",")[0], float(r.split(",")[1])): float(r.split(",")[2]) for r in rows}
        assert by_key[("flip", 0.0)] >= 1 - 1e-9
        assert by_key[("detuning", 0.0)] >= 1 - 1e-9

    def test_monotone_near_zero(self, capsys, tmp_path):
        out_path = tmp_path / "sweep.csv"
        code, _, _ = run_cli(
            capsys, "sweep", "--cycles", "2", "--eps-range", "0:0.02",
            "--delta-range", "0:0.02", "--step", "0.005", "--out", str(out_path),
        )
        assert code == 0
        rows = out_path.read_text().splitlines()[1:]
        flip = [float(r.split(",")[2]) for r in rows if r.startswith("flip,")]
        assert all(a >= b - 1e-6 for a, b in zip(flip, flip[1:]))

    def test_byte_identical_reruns(self, capsys, tmp_path):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for path in paths:
            code, _, _ = run_cli(
                capsys, "sweep", "--cycles", "1", "--step", "0.05", "--out", str(path),
            )
            assert code == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_bad_step_rejected(self, capsys, tmp_path):
        code, _, err = run_cli(
            capsys, "sweep", "--step", "-0.1", "--out", str(tmp_path / "x.csv"),
        )
        assert code == 2
        assert "error:" in err


class TestDecouple:
    def test_scalar_bath_order(self, capsys):
        code, out, _ = run_cli(
            capsys, "decouple", "--bath", "scalar", "--seed", "7",
        )
        assert code == 0
        assert "fitted order" in out
        assert "PASS" in out

    def test_zero_bath_exact(self, capsys):
        code, out, _ = run_cli(capsys, "decouple", "--bath", "none")
        assert code == 0
        assert "exact" in out

    def test_bad_ladder_is_config_error(self, capsys):
        code, _, _ = run_cli(
            capsys, "decouple", "--bath", "scalar", "--dt-ladder", "0.3",
        )
        assert code == 2


class TestConfigFile:
    def test_config_applies_and_flags_win(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("gate = u1\nn = 4\nj = 2\nangle = 0.5\n# comment\n")
        code, out, _ = run_cli(capsys, "verify", "--config", str(cfg))
        assert code == 0
        assert "verify u1 n=4 j=2" in out

        code, out, _ = run_cli(capsys, "verify", "--config", str(cfg), "--j", "1")
        assert code == 0
        assert "verify u1 n=4 j=1" in out

    def test_unknown_key_rejected(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("gait = u1\n")
        code, _, err = run_cli(capsys, "verify", "--config", str(cfg))
        assert code == 2
        assert "unknown config key" in err
