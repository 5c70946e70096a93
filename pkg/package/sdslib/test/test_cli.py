# Copyright SDSLIB CONTRIBUTORS 2024

import json

from sdslib.catalog.cli import main
from sdslib.catalog.registry import registry
from sdslib.catalog.witness_io import read_witnesses, write_witnesses
from sdslib.params import SdsParams


def _registry_file(tmp_path, params=None):
    filename = str(tmp_path / "registry.jsonl")
    write_witnesses(filename, registry(params))
    return filename


def test_params_command(capsys):
    """
    Counting and listing feasible parameters.
    """
    assert main(["params", "--vmax", "50", "--count"]) == 0
    assert capsys.readouterr().out.strip() == "227"
    assert main(["params", "--vmax", "50", "--status", "open"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == 1
    assert out[0].startswith("(49;21,4;9)\tn=16\tOPEN")


def test_verify_command(tmp_path, capsys):
    """
    Exit 0 when every witness verifies, 1 otherwise.
    """
    assert main(["verify", _registry_file(tmp_path)]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 8
    assert all(line.endswith("\tOK") for line in lines)

    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"v": 7, "k": [3], "lambda": 1, "blocks": [[0, 1, 2]]}\n', encoding="utf-8")
    assert main(["verify", str(bad)]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_compress_command(tmp_path, capsys):
    """
    Compressed constants of the published witnesses.
    """
    filename = _registry_file(tmp_path, SdsParams.from_str("50;22,21;18"))
    assert main(["compress", filename, "--m", "2"]) == 0
    out = capsys.readouterr().out
    assert out.count("constants=(100, 0)\texpected=(100, 0)") == 4
    assert main(["compress", filename, "--m", "3"]) == 3
    assert "does not divide" in capsys.readouterr().err


def test_enumerate_command(capsys):
    """
    Listing and counting classes.
    """
    assert main(["enumerate", "--length", "6", "--content=-1:3,1:3"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == ["[-1,-1,-1,1,1,1]", "[-1,-1,1,-1,1,1]", "[-1,-1,1,1,-1,1]", "[-1,1,-1,1,-1,1]"]
    assert main(["enumerate", "--length", "6", "--content=-1:3,1:3", "--mode", "bracelet", "--count-only"]) == 0
    assert capsys.readouterr().out.strip() == "3"
    assert main(["enumerate", "--length", "23", "--content=-2:2,0:17,2:4", "--mode", "charmed", "--count-only"]) == 0
    assert capsys.readouterr().out.strip() == "3015"
    assert main(["enumerate", "--length", "7", "--content=-1:3,1:3"]) == 3
    assert main(["enumerate", "--length", "6", "--content=-1:3,1:3", "--mode", "rope"]) == 3


def test_search_command(tmp_path, capsys):
    """
    Exit codes follow the decision; witnesses and report are written on request.
    """
    out = str(tmp_path / "found.jsonl")
    report = str(tmp_path / "report.json")
    assert main(["search", "--params", "10;4,3;2", "--out", out, "--report", report]) == 0
    assert "status: EXISTS" in capsys.readouterr().out
    found = read_witnesses(out)
    assert found and all(rec.verified for rec in found)
    with open(report, "r", encoding="utf-8") as f:
        data = json.load(f)
    assert data["params"] == "(10;4,3;2)"
    assert data["strategy"] == "compress2"
    assert len(data["rows"]) > 0

    assert main(["search", "--params", "14;5,3;2", "--strategy", "direct"]) == 1
    assert "status: NOT_EXISTS" in capsys.readouterr().out
    assert main(["search", "--params", "13;4,4;2", "--strategy", "direct", "--max-classes", "1"]) == 2
    assert main(["search", "--params", "46;21,6"]) == 3
    assert main(["search", "--params", "13;4,4;2"]) == 3


def test_seeded_search_command(tmp_path, capsys):
    """
    A seeded search over the published (50;22,21;18) witnesses finds them again.
    """
    seeds = _registry_file(tmp_path, SdsParams.from_str("50;22,21;18"))
    assert main(["search", "--params", "50;22,21;18", "--seeds", seeds]) == 0
    assert "status: EXISTS" in capsys.readouterr().out


def test_registry_command(capsys):
    """
    Listing and re-verifying the registry.
    """
    assert main(["registry"]) == 0
    out = capsys.readouterr().out
    assert "(58;27,24;22)#4" in out
    assert main(["registry", "--verify"]) == 0
    assert capsys.readouterr().out.count("\tOK") == 8


def test_input_errors(tmp_path, capsys):
    """
    Usage errors and unreadable files exit with 3.
    """
    assert main([]) == 3
    assert main(["params"]) == 3
    assert main(["verify", str(tmp_path / "missing.jsonl")]) == 3
    assert main(["--config", str(tmp_path / "missing.toml"), "registry"]) == 3
    assert main(["search", "--params", "10;4,3;2", "--tol=-1"]) == 3
    assert "error:" in capsys.readouterr().err
