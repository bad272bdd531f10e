import json

import pytest

from grassgw.cli import main, parse_partition


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_parse_partition():
    assert parse_partition("3,2,1") == (3, 2, 1)
    assert parse_partition("") == ()
    with pytest.raises(Exception):
        parse_partition("1,2")


def test_decompose_json_schema(capsys):
    code, out = run_cli(capsys, "decompose", "--k", "2", "--n", "4",
                        "--twist", "2", "--theory", "gw")
    assert code == 0
    payload = json.loads(out)
    assert payload["grassmannian"] == {"k": 2, "n": 4}
    assert payload["twist"] == 2
    assert payload["twist_convention"] == "exact"
    assert payload["summands"] == [
        {"theory": "GW", "shift": 0, "multiplicity": 2},
        {"theory": "K", "shift": 0, "multiplicity": 2},
    ]


def test_decompose_zero_spectrum(capsys):
    code, out = run_cli(capsys, "decompose", "--k", "1", "--n", "2",
                        "--twist", "1", "--theory", "l")
    assert code == 0
    assert json.loads(out)["summands"] == []


def test_decompose_k_theory_rank(capsys):
    code, out = run_cli(capsys, "decompose", "--k", "2", "--n", "4",
                        "--twist", "2", "--theory", "k")
    assert json.loads(out)["summands"] == [
        {"theory": "K", "shift": 0, "multiplicity": 6}]


def test_decompose_deterministic(capsys):
    _, first = run_cli(capsys, "decompose", "--k", "3", "--n", "7",
                       "--twist", "3", "--theory", "w", "--shift", "2")
    _, second = run_cli(capsys, "decompose", "--k", "3", "--n", "7",
                        "--twist", "3", "--theory", "w", "--shift", "2")
    assert first == second


def test_enumerate_text(capsys):
    code, out = run_cli(capsys, "enumerate", "--k", "2", "--l", "2")
    assert code == 0
    assert "6 diagrams, 2 symmetric" in out


def test_lr_coefficient(capsys):
    code, out = run_cli(capsys, "lr", "--lambda", "1", "--mu", "1", "--nu", "2")
    assert code == 0 and out.strip() == "1"


def test_lr_tensor(capsys):
    code, out = run_cli(capsys, "lr", "--lambda", "1,0", "--mu", "1,1",
                        "--rows", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["terms"] == [
        {"weight": [2, 1], "multiplicity": 1}]


def test_bott_raw_weight(capsys):
    code, out = run_cli(capsys, "bott", "--n", "2", "--weight", "0,2")
    assert code == 0
    assert out.strip() == "degree 1, nu 1,1, dimension 1"


def test_bott_vanishing(capsys):
    code, out = run_cli(capsys, "bott", "--n", "2", "--weight", "0,1",
                        "--k", "1")
    assert code == 0 and out.strip() == "vanishes"


def test_verify_suite_pass(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "recurrences",
                        "--max-n", "5", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["failures"] == [] and payload["checked"] > 0


def test_verify_unknown_suite_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nonsense"])
    assert exc.value.code == 2


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["decompose", "--k", "2"])
    assert exc.value.code == 2


def test_bott_weight_length_mismatch(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bott", "--n", "3", "--weight", "0,2"])
    assert exc.value.code == 2


def test_table_csv(capsys):
    code, out = run_cli(capsys, "table", "--max-n", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,n,case,summands"
    assert any(line.startswith("2,4,") for line in lines)


def test_out_file(tmp_path, capsys):
    target = tmp_path / "dec.json"
    code, out = run_cli(capsys, "decompose", "--k", "1", "--n", "3",
                        "--twist", "2", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["grassmannian"] == {"k": 1, "n": 3}
