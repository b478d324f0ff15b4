import json
from pathlib import Path

import pytest

from qdp.cli import run

MANIFEST_DIR = Path(__file__).resolve().parents[1] / "src/qdp/manifests"


def test_list(capsys):
    assert run(["list"]) == 0
    out = capsys.readouterr().out.split()
    assert "borel2" in out and "heisenberg3" in out


def test_show_manifest_matches_shipped(capsys):
    assert run(["show", "borel2", "--manifest"]) == 0
    out = capsys.readouterr().out
    shipped = (MANIFEST_DIR / "borel2.json").read_text(encoding="utf-8")
    assert out == shipped


def test_show_unknown_is_usage_error(capsys):
    assert run(["show", "nope"]) == 2


def test_member_nonmember_exits_1(capsys):
    assert run(["member", "borel2", "--element", "y"]) == 1
    out = capsys.readouterr().out
    assert "NotMember" in out


def test_member_both_routes_agree(capsys):
    assert run(["member", "borel2", "--element", "h*x", "--via", "both"]) == 0
    out = capsys.readouterr().out
    assert "routes-agree" in out


def test_member_bad_expression_is_usage_error(capsys):
    assert run(["member", "borel2", "--element", "h*q"]) == 2


def test_check_hopf_json_schema(capsys):
    jsonschema = pytest.importorskip("jsonschema")
    assert run(["check-hopf", "borel2", "--bound", "2",
                "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    schema = json.loads(
        (Path(__file__).resolve().parents[1] / "src/qdp/report_schema.json")
        .read_text(encoding="utf-8"))
    jsonschema.validate(payload, schema)
    assert payload["passed"] is True


def test_transform_roundtrip_via_files(tmp_path, capsys):
    prime_path = tmp_path / "prime.json"
    assert run(["prime", "borel2", "-o", str(prime_path)]) == 0
    capsys.readouterr()
    assert run(["roundtrip", str(prime_path), "--direction",
                "vee-prime"]) == 0
    capsys.readouterr()
    assert run(["vee", str(prime_path)]) == 0
    out = capsys.readouterr().out
    assert '"model": "POLY"' in out


def test_vee_of_poly_is_usage_error(capsys):
    assert run(["vee", "borel2"]) == 2


def test_dual_check(capsys):
    assert run(["dual-check", "borel2"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out


def test_limit_series_input(tmp_path, capsys):
    prime_path = tmp_path / "prime.json"
    run(["prime", "heisenberg3", "-o", str(prime_path)])
    capsys.readouterr()
    assert run(["limit", str(prime_path), "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["structure"]["cobracket"] == [[2, 0, 1, "1"]]
    assert payload["structure"]["bracket"] == []


def test_pair_command(tmp_path, capsys):
    prime_path = tmp_path / "prime.json"
    run(["prime", "borel2", "-o", str(prime_path)])
    seed_path = tmp_path / "seed.json"
    seed_path.write_text(json.dumps({
        "left": "borel2", "right": "borel2_prime",
        "values": [{"lgen": "x", "rgen": "x", "value": "1"},
                   {"lgen": "y", "rgen": "y", "value": "1"}]}),
        encoding="utf-8")
    capsys.readouterr()
    assert run(["pair", "borel2", str(prime_path),
                "--seed-file", str(seed_path),
                "--left-elem", "h*x", "--right-elem", "x"]) == 0
    assert "= h" in capsys.readouterr().out


def test_env_default_order(capsys, monkeypatch):
    monkeypatch.setenv("QDP_DEFAULT_ORDER", "5")
    assert run(["show", "borel2", "--manifest"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["h_order"] == 5


def test_no_command_prints_help(capsys):
    assert run([]) == 2
