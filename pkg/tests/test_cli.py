import json

import pytest

from scripts.run import CommandRequest, OutputMode, Subcommand, parse_request
from combinatorics.errors import ParseError, ValidityError


def test_decompose_a31b_text(run_cli):
    code, out, _ = run_cli("decompose", "a31b", "--a", "14", "--b", "9")
    assert code == 0
    assert out.strip() == "Sp(14,3,1^8) = Y(18,5,2) + Y(14,11) + Y(14,9,2)"


def test_core(run_cli):
    code, out, _ = run_cli("core", "--lambda", "2,2", "--l", "2")
    assert code == 0
    assert out.strip() == "()"
    assert run_cli("core", "--lambda", "5,1,1")[1].strip() == "(1)"


def test_special(run_cli):
    code, out, _ = run_cli("special", "--r", "3", "--b", "1", "--p", "2")
    assert code == 0
    assert out.strip() == "true"
    assert run_cli("special", "--r", "2", "--b", "0")[1].strip() == "false"
    assert run_cli("special", "--lp", "--r", "3", "--b", "1", "--l", "2", "--p", "2")[1].strip() == "true"


def test_special_enumeration(run_cli):
    code, out, _ = run_cli("special", "--u", "2", "--v", "1", "--p", "2")
    assert code == 0
    assert out.strip() == "(3,0) (2,1)"


def test_decompose_json_round_trips(run_cli):
    code, out, _ = run_cli("decompose", "staircase", "--m", "2", "--a", "6", "--b", "3", "--json")
    assert code == 0
    data = json.loads(out)
    assert list(data) == ["theorem", "parameters", "specht", "summands"]
    assert {tuple(s["young"]) for s in data["summands"]} == {(8, 1), (6, 3)}
    assert json.dumps(data, indent=2, ensure_ascii=False) == out.strip()


@pytest.mark.parametrize("alias", ["powers", "example63"])
def test_power_hook_aliases(run_cli, alias):
    code, out, _ = run_cli("decompose", alias, "--k", "3")
    assert code == 0
    assert out.strip() == "Sp(10,1^7) = Y(16,1) + Y(12,5) + Y(10,7)"


def test_dual_and_hook(run_cli):
    assert run_cli("decompose", "dual-a31b", "--a", "6", "--b", "3")[1].strip() == "Sp(4,2^2,1^3) = Y(6,3,2)"
    assert run_cli("decompose", "hook", "--a", "1", "--b", "2", "--p", "0")[1].strip() == "Sp(1^3) = Y(3)"


def test_blockcomp(run_cli):
    code, out, _ = run_cli("blockcomp", "--m", "2", "--a", "6", "--b", "3")
    assert code == 0
    assert out.strip() == "M(6,3) [core (2,1)] = Y(8,1) + Y(6,3)"


def test_schur_commands(run_cli):
    assert run_cli("schur", "prod", "--rows", "1", "--cols", "1")[1].strip() == "1*s(2) + 1*s(1^2)"
    code, out, _ = run_cli("schur", "corefilter", "--rows", "2", "--cols", "1", "--core", "2,1", "--l", "2")
    assert code == 0
    assert out.strip() == "1*s(2,1)"
    assert run_cli("schur", "adaptfilter", "--rows", "2", "--cols", "1", "--m", "3")[1].strip() == "1*s(3)"


def test_schur_json(run_cli):
    code, out, _ = run_cli("schur", "prod", "--rows", "2", "--cols", "1", "--json")
    assert code == 0
    assert json.loads(out) == [{"partition": [3], "coeff": 1}, {"partition": [2, 1], "coeff": 1}]


def test_char_commands(run_cli):
    assert run_cli("char", "sl2", "--r", "3")[1].strip() == "1*e(3) + 1*e(1) + 1*e(-1) + 1*e(-3)"
    assert run_cli("char", "a31b-weight", "--a", "14", "--b", "9", "--lambda", "6,5")[1].strip() == "1"
    assert run_cli("char", "gl2", "--lambda", "3,2", "--a", "3", "--b", "2")[1].strip() == "1"
    assert run_cli("char", "staircase", "--m", "2", "--a", "6", "--b", "3", "--lambda", "2,1")[1].strip() == "1"
    code, out, _ = run_cli("char", "gl3-oracle", "--lambda", "1^3", "--p", "2")
    assert code == 0
    assert out.strip() == "1*e(1,1,1)"


def test_verify_single_cases(run_cli):
    code, out, _ = run_cli("verify", "cor5-7", "--m", "2", "--a", "3", "--b", "2")
    assert code == 0
    assert "case 1" in out
    code, out, _ = run_cli("verify", "prop7-2-2", "--a", "6", "--b", "3", "--json")
    assert code == 0
    assert json.loads(out)["consistent"] is True


def test_verify_grids(run_cli):
    code, out, _ = run_cli("verify", "powers")
    assert code == 0
    assert out.startswith("power-hook: 10/10 passed (ok")
    code, out, _ = run_cli("verify", "examples", "--json")
    assert code == 0
    assert json.loads(out)["ok"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ("core", "--lambda", "2,x"),
        ("core", "--lambda", "1,2"),
        ("decompose", "a31b", "--a", "14"),
        ("decompose", "a31b", "--a", "fourteen", "--b", "9"),
        ("frobnicate",),
        ("decompose",),
        ("decompose", "a31b", "--a", "14", "--b", "9", "--bogus", "1"),
        ("verify", "cor5-7", "--m", "2", "--a", "4"),
        ("verify", "core-identity", "--b", "3"),
        ("verify", "prop7-2-2", "--a", "14"),
    ],
)
def test_usage_errors_exit_1(run_cli, argv):
    code, out, err = run_cli(*argv)
    assert code == 1
    assert out == ""
    assert err.startswith("error:")


@pytest.mark.parametrize(
    "argv",
    [
        ("decompose", "a31b", "--a", "8", "--b", "9"),
        ("decompose", "a31b", "--a", "14", "--b", "9", "--p", "3"),
        ("decompose", "staircase", "--m", "2", "--a", "6", "--b", "3", "--p", "4"),
        ("char", "gl3-oracle", "--lambda", "3,1", "--p", "3"),
        ("blockcomp", "--m", "2", "--a", "6", "--b", "3", "--l", "1"),
        ("special", "--r", "-1", "--b", "1"),
    ],
)
def test_precondition_errors_exit_2(run_cli, argv):
    code, _, err = run_cli(*argv)
    assert code == 2
    assert err.startswith("error:")


def test_help_exits_cleanly(run_cli):
    code, out, _ = run_cli("--help")
    assert code == 0
    assert "decompose" in out


def test_request_validation():
    request, verbose = parse_request(["core", "--lambda", "2,2", "--json", "--verbose"])
    assert request.subcommand == Subcommand.CORE
    assert request.output_mode == OutputMode.JSON
    assert verbose
    assert request.partition_flag("lambda").parts == (2, 2)
    assert request.int_flag("l", 2) == 2

    with pytest.raises(ValidityError):
        CommandRequest(subcommand=Subcommand.CORE, flags={"lambda": "1,3"}).validate_flags()
    with pytest.raises(ParseError):
        CommandRequest(subcommand=Subcommand.SPECIAL, flags={"r": "3.5"}).validate_flags()
