"""End-to-end command-line behavior: output shapes and exit codes."""

from __future__ import annotations

import json

import pytest

from cubeloops.cli import main


def test_check_text_report(capsys):
    assert main(["check", "--dim", "4", "--word", "12321434"]) == 0
    out = capsys.readouterr().out
    assert "embedded:   yes" in out
    assert "genus: 9" in out
    assert "12321434" in out


def test_check_json_report(capsys):
    assert main(["check", "--dim", "4", "--word", "123214123214", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == 1
    assert doc["embedded"] is True
    assert doc["genus"] == 17
    assert doc["lattice_order"] == 4


def test_check_verify_mode(capsys):
    code = main(["check", "--dim", "3", "--word", "123123", "--mode", "verify", "--json"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    checks = doc["oracle_checks"]
    assert checks["closure_order"] == 32
    assert checks["closure_agrees"] is True
    assert checks["geometric_agrees"] is True


def test_check_invalid_word_exit_code(capsys):
    assert main(["check", "--dim", "3", "--word", "32123121"]) == 2
    err = capsys.readouterr().err
    assert err.startswith("NotClosed:")


def test_check_bad_label_exit_code(capsys):
    assert main(["check", "--dim", "3", "--word", "129123"]) == 2
    assert capsys.readouterr().err.startswith("BadLabel:")


def test_check_separated_word_above_nine_directions(capsys):
    word = "1 2 3 4 5 6 7 8 9 10 1 2 10 9 8 7 6 5 4 3"
    assert main(["check", "--dim", "10", "--word", *word.split()]) == 0
    out = capsys.readouterr().out
    assert "dim:        10" in out
    assert "embedded:   yes" in out


def test_enumerate_text_listing(capsys):
    assert main(["enumerate", "--dim", "3"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[-1] == "3 classes"
    assert len(lines) == 4
    assert all(line.startswith("m=") for line in lines[:-1])
    assert all("embedded" in line for line in lines[:-1])


def test_enumerate_json_listing(capsys):
    assert main(["enumerate", "--dim", "3", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == 1
    assert doc["dim"] == 3
    assert doc["count"] == 3
    assert doc["query"]["min_length"] == 6
    assert doc["query"]["max_length"] == 8
    assert len(doc["classes"]) == 3
    assert all(c["embedded"] for c in doc["classes"])


def test_enumerate_embedded_only(capsys):
    assert main(["enumerate", "--dim", "4", "--embedded-only"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[-1] == "5 classes"
    assert any("genus=17" in line for line in lines)


def test_enumerate_limit_singular(capsys):
    assert main(["enumerate", "--dim", "3", "--limit", "1"]) == 0
    assert capsys.readouterr().out.strip().splitlines()[-1] == "1 class"


def test_enumerate_jobs_agree(capsys):
    assert main(["enumerate", "--dim", "4", "--length", "10"]) == 0
    single = capsys.readouterr().out
    assert main(["enumerate", "--dim", "4", "--length", "10", "--jobs", "2"]) == 0
    assert capsys.readouterr().out == single


def test_enumerate_bad_window(capsys):
    assert main(["enumerate", "--dim", "3", "--length", "7"]) == 2
    assert "invalid request" in capsys.readouterr().err


def test_family_text(capsys):
    assert main(["family", "--name", "d-series", "--dim", "5"]) == 0
    out = capsys.readouterr().out
    assert "1234512543" in out
    assert "embedded:   yes" in out


def test_family_json_carries_spec(capsys):
    code = main(["family", "--name", "gamma-b", "--dim", "4", "--alpha", "1", "--beta", "3", "--json"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["family"] == {"name": "gamma-b", "dim": 4, "alpha": 1, "beta": 3}
    assert doc["word"] == "12341324"


def test_family_bad_parameters_exit_code(capsys):
    assert main(["family", "--name", "gamma-a", "--dim", "4", "--beta", "4"]) == 2
    assert capsys.readouterr().err.startswith("BadParameters:")


def test_export_obj_to_file(tmp_path, capsys):
    target = tmp_path / "mesh.obj"
    code = main(["export", "--dim", "3", "--word", "123123", "-o", str(target)])
    assert code == 0
    out = capsys.readouterr().out
    assert "32 patches, 192 triangles, embedded" in out
    data = target.read_text()
    assert data.startswith("# periodic reflection surface mesh")
    assert data.count("\nf ") == 192


def test_export_obj_stdout_and_stderr_summary(capsys):
    assert main(["export", "--dim", "3", "--word", "121323"]) == 0
    captured = capsys.readouterr()
    assert captured.out.startswith("# periodic reflection surface mesh")
    assert "patches" in captured.err


def test_export_json_stdout(capsys):
    assert main(["export", "--dim", "3", "--word", "123123", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["dim"] == 3
    assert len(doc["triangles"]) == 192


def test_export_default_projection_dimension_four(capsys):
    assert main(["export", "--dim", "4", "--word", "12314234"]) == 0
    out = capsys.readouterr().out
    assert "# projection: dropped axes [4]" in out


def test_export_needs_projection_above_dimension_four(capsys):
    assert main(["export", "--dim", "5", "--word", "145231425232"]) == 2
    assert capsys.readouterr().err.startswith("BadProjection:")
    code = main(["export", "--dim", "5", "--word", "145231425232", "--project", "1,2"])
    assert code == 0
    out = capsys.readouterr().out
    assert "# projection: dropped axes [1, 2]" in out
    assert "# warning: surface has self-intersections" in out


def test_export_garbled_projection(capsys):
    code = main(["export", "--dim", "4", "--word", "12314234", "--project", "x"])
    assert code == 2
    assert "invalid request" in capsys.readouterr().err


def test_export_io_error(tmp_path, capsys):
    target = tmp_path / "missing" / "mesh.obj"
    code = main(["export", "--dim", "3", "--word", "123123", "-o", str(target)])
    assert code == 3
    assert capsys.readouterr().err.startswith("i/o error:")


def test_unknown_subcommand_exits_via_argparse():
    with pytest.raises(SystemExit):
        main(["frobnicate"])
