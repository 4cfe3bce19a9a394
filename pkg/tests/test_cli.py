import json

import pytest

from vbfcodes import cli, config
from vbfcodes.codes import parse_weight_enumerator
from vbfcodes.verify import REMARK2_ENUMERATORS


@pytest.fixture
def run(capsys, monkeypatch):
    """Run the CLI, returning (exit status, stdout, stderr); restores MAX_ENUM_DIM afterwards."""
    monkeypatch.setattr(config, "MAX_ENUM_DIM", config.MAX_ENUM_DIM)

    def _run(*argv: str) -> tuple[int, str, str]:
        status = cli.main(list(argv))
        captured = capsys.readouterr()
        return status, captured.out, captured.err

    return _run


def test_parse_degrees():
    assert cli.parse_degrees("7") == [7]
    assert cli.parse_degrees("5,7,9") == [5, 7, 9]
    assert cli.parse_degrees("1..4,9") == [1, 2, 3, 4, 9]


def test_field_show(run):
    status, out, _ = run("field", "show", "--m", "5", "--format", "json")
    assert status == cli.EXIT_OK
    [field] = json.loads(out)
    assert field["modulus"] == "0x25"
    assert field["trace_of_one"] == 1


def test_fn_props_gold(run):
    status, out, _ = run("fn", "props", "gold:5:1")
    assert status == cli.EXIT_OK
    lines = out.splitlines()
    assert "nonlinearity: 12" in lines
    assert "AB: true" in lines
    assert "PN: false" in lines


def test_fn_props_bare_kind(run):
    status, out, _ = run("fn", "props", "gold", "--m", "7", "--i", "1", "--format", "json")
    assert status == cli.EXIT_OK
    assert json.loads(out)["name"] == "power:7:3"


def test_fn_props_product_function(run):
    status, out, _ = run("fn", "props", "mm:3", "--format", "json")
    assert status == cli.EXIT_OK
    props = json.loads(out)
    assert props["pn"] is True
    assert props["ab"] is False
    assert props["nonlinearity"] == 28


def test_fn_props_inverse_function(run):
    _, out, _ = run("fn", "props", "power:5:30")
    assert "AB: false" in out.splitlines()


def test_fn_walsh_counts(run):
    status, out, _ = run("fn", "walsh", "gold:5:1")
    assert status == cli.EXIT_OK
    assert out.splitlines() == ["-8: 6", "0: 16", "8: 10"]


def test_code_build_with_selector_offset(run):
    status, out, _ = run("code", "build", "gold:5:1", "--a", "a^3")
    assert status == cli.EXIT_OK
    parameters, enumerator, all_one = out.splitlines()
    assert parameters == "[12,10,2]"
    assert parse_weight_enumerator(enumerator) == parse_weight_enumerator(REMARK2_ENUMERATORS[(5, "a^3")])
    assert all_one == "all-one codeword: true"


def test_code_build_json(run):
    status, out, _ = run("code", "build", "mm:4", "--c", "1", "--format", "json")
    assert status == cli.EXIT_OK
    payload = json.loads(out)
    assert payload["parameters"] == "[136,12,60]"
    assert payload["header"]["offset_c"] == 1
    assert payload["all_one"] is True


def test_code_subcode(run):
    status, out, _ = run("code", "subcode", "gold:9:1", "--normal", "1")
    assert status == cli.EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "[256,17,112]"
    assert lines[2] == "all-one codeword: false"


def test_verify_kloosterman(run):
    status, out, _ = run("verify", "kloosterman", "--m", "1..15")
    assert status == cli.EXIT_OK
    assert out.startswith("kloosterman: pass (15 rows)")


def test_verify_json(run):
    status, out, _ = run("verify", "table2", "--m", "5", "--format", "json")
    assert status == cli.EXIT_OK
    report = json.loads(out)
    assert report["target"] == "table2"
    assert report["pass"] is True


def test_verify_mismatch_exit_status(run):
    status, out, _ = run("verify", "lemma11", "--m", "5", "--convention", "exclude_zero")
    assert status == cli.EXIT_MISMATCH
    assert "FAIL" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "theorem42"),
        ("code", "build", "gold:5:1", "--lambda", "0"),
        ("fn", "props", "gold:6:1"),
        ("code", "build", "gold:5:1", "--c", "2"),
        ("--max-enum-dim", "5", "code", "build", "gold:5:1"),
        ("fn", "props", "mm:3", "--modulus", "0x25"),
    ],
)
def test_usage_errors(run, argv):
    status, out, err = run(*argv)
    assert status == cli.EXIT_USAGE
    assert out == ""
    assert err


def test_exported_table_builds_the_same_code(run, tmp_path):
    path = tmp_path / "gold5.json"
    assert run("fn", "export", "gold:5:1", "--out", str(path))[0] == cli.EXIT_OK
    assert json.loads(path.read_text())["m"] == 5
    _, from_descriptor, _ = run("code", "build", "gold:5:1", "--lambda", "a^2")
    _, from_file, _ = run("code", "build", str(path), "--lambda", "a^2")
    assert from_file == from_descriptor


def test_export_generator_matrix(run, tmp_path):
    status, out, _ = run("export", "gm", "mm:3", "--format", "json")
    assert status == cli.EXIT_OK
    matrix = json.loads(out)
    assert len(matrix["rows"]) == 9
    assert {len(row) for row in matrix["rows"]} == {28}

    path = tmp_path / "gm.txt"
    run("export", "gm", "gold:5:1", "--normal", "1", "--out", str(path))
    lines = path.read_text().splitlines()
    assert "# hyperplane_normal: 1" in lines
    assert len([line for line in lines if not line.startswith("#")]) == 9


def test_hex_table_builds_the_same_code(run, tmp_path):
    path = tmp_path / "gold5.hex"
    assert run("fn", "export", "gold:5:1", "--format", "hex", "--out", str(path))[0] == cli.EXIT_OK
    _, from_descriptor, _ = run("code", "build", "gold:5:1", "--a", "a^3")
    status, from_file, _ = run("code", "build", str(path), "--m", "5", "--s", "5", "--a", "a^3")
    assert status == cli.EXIT_OK
    assert from_file == from_descriptor
    assert from_file.splitlines()[0] == "[12,10,2]"


def test_hex_table_needs_output_degree(run, tmp_path):
    path = tmp_path / "gold5.hex"
    run("fn", "export", "gold:5:1", "--format", "hex", "--out", str(path))
    status, out, err = run("code", "build", str(path), "--m", "5")
    assert status == cli.EXIT_USAGE
    assert out == ""
    assert "--s" in err
