import json
import subprocess
import sys

import pytest

from straightlaw import Minor, WordCombination, format_expression, parse_expression
from straightlaw.cli import ParseError, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_single_factor():
    combo = parse_expression("[1 2|1 3]")
    assert combo == WordCombination({(Minor([1, 2], [1, 3]),): 1})


def test_parse_two_factor_word():
    combo = parse_expression("[1|2][2|1]")
    assert combo == WordCombination({(Minor([1], [2]), Minor([2], [1])): 1})


def test_parse_coefficients_and_signs():
    combo = parse_expression("2[1|1] - [2|2]")
    assert combo.coefficient((Minor([1], [1]),)) == 2
    assert combo.coefficient((Minor([2], [2]),)) == -1
    assert parse_expression("-3[1|1]").coefficient((Minor([1], [1]),)) == -3


def test_parse_unit_and_zero():
    assert parse_expression("[|]") == WordCombination({(): 1})
    assert parse_expression("0") == WordCombination()
    # like terms collect across the expression
    assert parse_expression("[1|1] - [1|1]") == WordCombination()


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as exc:
        parse_expression("[0|1]")
    assert exc.value.pos == 1
    with pytest.raises(ParseError):
        parse_expression("")
    with pytest.raises(ParseError):
        parse_expression("[1|1] <- note")
    with pytest.raises(ParseError):
        parse_expression("2 + 3")
    with pytest.raises(ParseError):
        parse_expression("[1 1|2]")


def test_printer_round_trip():
    for text in ("[1 2|1 3]", "2[1|1] - [2|2]", "[1|2][2|1]", "[|]", "0",
                 "-[1|1] + 4[1 2|1 2][2|2]"):
        combo = parse_expression(text)
        assert parse_expression(format_expression(combo)) == combo


def test_straighten_emits_verified_certificate(capsys):
    code, out, _ = run_cli(capsys, "straighten", "[1|2][2|1]", "--m", "2", "--n", "2")
    assert code == 0
    cert = json.loads(out)
    assert cert["schema"] == "straightlaw-cert/1"
    assert cert["dims"] == {"m": 2, "n": 2}
    assert cert["standard"] and cert["oracleVerified"] and cert["contentPreserved"]
    assert cert["terms"] == [
        {"coeff": 1, "factors": [{"rows": [1], "cols": [1]}, {"rows": [2], "cols": [2]}]},
        {"coeff": -1, "factors": [{"rows": [1, 2], "cols": [1, 2]}]},
    ]


def test_straighten_identity_and_zero(capsys):
    code, out, _ = run_cli(capsys, "straighten", "[1|1]")
    assert code == 0
    assert json.loads(out)["terms"] == [{"coeff": 1, "factors": [{"rows": [1], "cols": [1]}]}]

    code, out, _ = run_cli(capsys, "straighten", "[1|1 2]")
    assert code == 0
    cert = json.loads(out)
    assert cert["terms"] == []
    assert cert["dims"] == {"m": 1, "n": 2}


def test_straighten_output_is_byte_deterministic(capsys):
    _, first, _ = run_cli(capsys, "straighten", "[2|1][1|2] + 2[1|1][2|2]")
    _, second, _ = run_cli(capsys, "straighten", "[2|1][1|2] + 2[1|1][2|2]")
    assert first == second


def test_straighten_error_exits(capsys):
    code, _, err = run_cli(capsys, "straighten", "[1|")
    assert code == 1 and "parse error" in err
    code, _, err = run_cli(capsys, "straighten", "[1|3]", "--n", "2")
    assert code == 1 and "exceeds" in err


def test_verify_round_trip(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "straighten", "[2|1][1|2]")
    cert = json.loads(out)
    path = tmp_path / "cert.json"
    path.write_text(out)
    code, out, _ = run_cli(capsys, "verify", str(path))
    assert code == 0
    assert json.loads(out)["verified"] is True

    cert["terms"][0]["coeff"] += 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(cert))
    code, out, _ = run_cli(capsys, "verify", str(bad))
    assert code == 2
    assert json.loads(out)["verified"] is False

    junk = tmp_path / "junk.json"
    junk.write_text("{}")
    code, _, err = run_cli(capsys, "verify", str(junk))
    assert code == 1


def test_relations_command(capsys):
    code, out, _ = run_cli(capsys, "relations", "--n", "3", "--family", "theorem1")
    assert code == 0
    assert "all 64 relations verified (sigma + oracle)" in out

    code, out, _ = run_cli(capsys, "relations", "--n", "2", "--family", "laplace", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["verified"] and payload["oracleChecked"]
    assert payload["families"][0]["instances"] == 8

    code, _, err = run_cli(capsys, "relations", "--n", "9")
    assert code == 1 and "exceeds" in err


def test_independence_command(capsys):
    code, out, _ = run_cli(capsys, "independence", "--m", "2", "--n", "2", "--max-factors", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["standardMonomials"] == payload["rank"] == 19
    assert payload["independent"]

    code, out, _ = run_cli(capsys, "independence", "--m", "1", "--n", "1", "--max-factors", "1")
    assert code == 0
    assert "1" in out

    code, _, err = run_cli(capsys, "independence", "--m", "5", "--n", "5", "--max-factors", "2")
    assert code == 1


def test_leading_command(capsys):
    code, out, _ = run_cli(capsys, "leading", "[1 2|1 2][2|2]", "--text")
    assert code == 0
    assert "y[1,1]*y[2,1]*z[1,1]*z[2,1]*y[2,2]*z[2,2]" in out

    code, out, _ = run_cli(capsys, "leading", "[1|1]", "--json")
    assert code == 0
    assert json.loads(out)["terms"][0]["witness"] == "y[1,1]*z[1,1]"


def test_usage_errors_exit_1(capsys):
    assert run_cli(capsys, "relations")[0] == 1  # missing --n
    assert run_cli(capsys, "nonsense")[0] == 1


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "straightlaw.cli", "straighten", "[1|1]"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["oracleVerified"] is True
