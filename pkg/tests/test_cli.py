from __future__ import annotations

import numpy as np
import pytest

import sympcliff as sc
from conftest import FIXTURES
from sympcliff.cli import entry, main

CODE642 = str(FIXTURES / "sixfourtwo.code")
CODE513 = str(FIXTURES / "fivequbit.code")


def test_info_published_code(capsys):
    assert main(["info", "--code", CODE642]) == 0
    assert capsys.readouterr().out == \
        "m=6 k=2 logical=4 solutions-per-operator=8\n"


def test_info_five_qubit_code(capsys):
    assert main(["info", "--code", CODE513]) == 0
    assert capsys.readouterr().out == \
        "m=5 k=4 logical=1 solutions-per-operator=1024\n"


def test_synth_min_depth_writes_one_file(tmp_path, capsys):
    rc = main(["synth", "--code", CODE642,
               "--spec", str(FIXTURES / "phase1.spec"), "--out", str(tmp_path)])
    assert rc == 0
    out = capsys.readouterr().out
    assert out.startswith("1 solution\n")
    assert "depth 2, gates 3, correction IIIIII" in out
    path = tmp_path / "phase1_min_depth.circ"
    circ = sc.parse(path.read_text())
    assert sorted(str(g) for g in circ.gates) == ["CZ 2 6", "P 2", "P 6"]


def test_synth_all_writes_every_solution(tmp_path, capsys, code642):
    rc = main(["synth", "--code", CODE642,
               "--spec", str(FIXTURES / "phase1.spec"),
               "--all", "--out", str(tmp_path)])
    assert rc == 0
    assert capsys.readouterr().out.startswith("8 solutions\n")
    spec = sc.load_spec((FIXTURES / "phase1.spec").read_text())
    for i in range(1, 9):
        circ = sc.parse((tmp_path / ("phase1_%d.circ" % i)).read_text())
        assert sc.verify_solution(code642, spec, circ).passed


def test_synth_policy_override(tmp_path, capsys):
    rc = main(["synth", "--code", CODE642,
               "--spec", str(FIXTURES / "phase1.spec"),
               "--all", "--normalize", "--out", str(tmp_path)])
    assert rc == 0
    assert capsys.readouterr().out.startswith("8 solutions\n")
    # forcing centralize onto a spec that rewrites stabilizers cannot work
    rc = main(["synth", "--code", CODE642,
               "--spec", str(FIXTURES / "swapxz.spec"),
               "--centralize", "--out", str(tmp_path)])
    assert rc == 2
    assert capsys.readouterr().err.startswith("error:")


def test_synth_unreadable_spec(tmp_path, capsys):
    out = tmp_path / "results"
    rc = main(["synth", "--code", CODE642,
               "--spec", str(tmp_path / "missing.spec"), "--out", str(out)])
    assert rc == 2
    assert capsys.readouterr().err.startswith("error:")
    assert not out.exists()


def test_synth_solution_cap(tmp_path, capsys):
    rc = main(["synth", "--code", CODE642,
               "--spec", str(FIXTURES / "phase1.spec"),
               "--all", "--max-solutions", "4", "--out", str(tmp_path)])
    assert rc == 2
    assert "error:" in capsys.readouterr().err


def test_verify_pass_and_fail(tmp_path, capsys):
    good = tmp_path / "good.circ"
    good.write_text("qubits 6\nZ 6\nCZ 2 3\nCZ 2 6\nCZ 3 6\n")
    rc = main(["verify", "--code", CODE642,
               "--spec", str(FIXTURES / "cz12.spec"),
               "--circuit", str(good), "--dense"])
    assert rc == 0
    assert "result: pass" in capsys.readouterr().out
    bad = tmp_path / "bad.circ"
    bad.write_text("qubits 6\nCZ 2 3\nCZ 2 6\nCZ 3 6\n")
    rc = main(["verify", "--code", CODE642,
               "--spec", str(FIXTURES / "cz12.spec"), "--circuit", str(bad)])
    assert rc == 1
    out = capsys.readouterr().out
    assert "FAIL S1" in out and "result: fail" in out


def test_decompose_identity_to_stdout(tmp_path, capsys):
    mat = tmp_path / "eye.mat"
    mat.write_text(sc.save_matrix_text(np.eye(12, dtype=np.uint8)))
    assert main(["decompose", "--matrix", str(mat)]) == 0
    out = capsys.readouterr().out
    assert out == "factors: (identity)\nqubits 6\n"


def test_decompose_omega_to_file(tmp_path, capsys):
    out_path = tmp_path / "omega.circ"
    rc = main(["decompose", "--matrix", str(FIXTURES / "omega6.mat"),
               "--out", str(out_path)])
    assert rc == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "factors: OMEGA"
    assert "wrote %s" % out_path in out
    circ = sc.parse(out_path.read_text())
    assert [str(g) for g in circ.gates] == ["H 1", "H 2", "H 3"]


def test_decompose_rejects_nonsymplectic(tmp_path, capsys):
    mat = tmp_path / "bad.mat"
    mat.write_text(sc.save_matrix_text(np.ones((12, 12), np.uint8)))
    assert main(["decompose", "--matrix", str(mat)]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_css_pair_form_matches_fixture(tmp_path, capsys, code642):
    g1 = tmp_path / "g1.mat"
    g2 = tmp_path / "g2.mat"
    g1.write_text("1 1 1 1 1 1\n1 1 0 0 0 0\n1 0 1 0 0 0\n"
                  "1 0 0 1 0 0\n1 0 0 0 1 0\n")
    g2.write_text("1 1 1 1 1 1\n")
    out_path = tmp_path / "built.code"
    rc = main(["css", "--g1", str(g1), "--g2", str(g2), "--out", str(out_path)])
    assert rc == 0
    assert capsys.readouterr().out == \
        "m=6 k=2 logical=4 file %s\n" % out_path
    assert out_path.read_text() == sc.save_code(code642)


def test_css_conflicting_forms(tmp_path, capsys):
    rc = main(["css", "--hc", str(FIXTURES / "hc_642.mat"),
               "--g1", str(FIXTURES / "hc_642.mat"), "--out",
               str(tmp_path / "x.code")])
    assert rc == 2
    rc = main(["css", "--g1", str(FIXTURES / "hc_642.mat"), "--out",
               str(tmp_path / "x.code")])
    assert rc == 2


def test_bad_arguments_exit_2(capsys):
    assert main([]) == 2
    assert main(["synth", "--code", CODE642]) == 2
    assert main(["synth", "--code", CODE642,
                 "--spec", str(FIXTURES / "phase1.spec"),
                 "--all", "--min-depth"]) == 2
    capsys.readouterr()


def test_entry_point_exits_with_status(capsys, monkeypatch):
    monkeypatch.setattr("sys.argv", ["sympcliff", "info", "--code", CODE642])
    with pytest.raises(SystemExit) as exc:
        entry()
    assert exc.value.code == 0
    capsys.readouterr()
