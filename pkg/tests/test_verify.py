import json
from typing import Any

import pytest

from vbfcodes.errors import UnknownTargetError
from vbfcodes.verify import ALIASES, TARGETS, VerifyReport, ab_functions, target_names, verify


def validate_report(data: dict[str, Any]) -> list[str]:
    """Check a serialized report against the {target, params, rows, pass} layout."""
    errors: list[str] = []
    for field in ("target", "params", "rows", "pass"):
        if field not in data:
            errors.append(f"Required field is missing: '{field}'.")
    if not isinstance(data.get("rows"), list):
        errors.append("Field 'rows' must be an array.")
        return errors
    if not data["rows"]:
        errors.append("Report has no rows.")
    for i, row in enumerate(data["rows"]):
        missing = {"w", "predicted", "empirical", "match"} - set(row)
        if missing:
            errors.append(f"Row {i} is missing {sorted(missing)}.")
    if data.get("pass") != all(row.get("match") for row in data["rows"]):
        errors.append("Field 'pass' disagrees with the row matches.")
    return errors


def assert_passes(report: VerifyReport):
    errors = validate_report(json.loads(report.to_json()))
    assert not errors, "\n".join(errors)
    assert report.passed, "\n".join(f"{r.instance} {r.w}: {r.predicted} != {r.empirical}" for r in report.mismatches())


def test_registry_covers_every_result():
    expected = {
        "proposition1", "theorem2", "theorem3", "theorem4", "theorem5", "theorem6", "theorem9",
        "corollary1", "corollary2", "remark1", "remark2", "example1", "example2", "kloosterman",
        "lemma1", "lemma2", "lemma4", "lemma6", "lemma7", "lemma8", "lemma10", "lemma11",
    }
    assert set(TARGETS) == expected
    assert set(ALIASES.values()) <= expected
    assert "table2" in target_names()


def test_unknown_target():
    with pytest.raises(UnknownTargetError):
        verify("theorem42")


def test_ab_functions_are_distinct():
    names = [F.name for F in ab_functions(7)]
    assert len(names) == len(set(names))
    assert "power:7:3" in names


@pytest.mark.parametrize(
    "target,params",
    [
        ("kloosterman", {"m": list(range(1, 16))}),
        ("lemma10", {}),
        ("remark1", {"m": [6]}),
        ("corollary1", {"m": [6, 8]}),
        ("corollary2", {"m": [5, 7]}),
        ("theorem2", {}),
        ("theorem2", {"descriptor": "mm:3"}),
        ("proposition1", {}),
        ("theorem5", {}),
        ("theorem3", {"m": [6]}),
        ("theorem4", {"m": [5]}),
        ("theorem6", {"m": [6]}),
        ("theorem9", {"m": [5, 7], "exhaustive": True}),
        ("example1", {}),
        ("lemma2", {}),
        ("lemma4", {}),
        ("lemma6", {}),
        ("lemma7", {"count": 20}),
        ("lemma11", {}),
    ],
)
def test_targets_pass(target, params):
    assert_passes(verify(target, **params))


@pytest.mark.slow
@pytest.mark.parametrize(
    "target,params",
    [
        ("remark2", {}),
        ("example2", {}),
        ("theorem3", {"m": [8]}),
        ("theorem4", {"m": [7, 9]}),
        ("theorem6", {"m": [8]}),
        ("theorem9", {"m": [9]}),
        ("lemma1", {}),
        ("lemma7", {}),
        ("lemma8", {}),
        ("remark1", {"m": [8]}),
    ],
)
def test_slow_targets_pass(target, params):
    assert_passes(verify(target, **params))


def test_alias_keeps_requested_name():
    report = verify("table2", m=[5])
    assert report.target == "table2"
    assert report.passed


def test_report_serializes_pass_alias():
    data = json.loads(verify("kloosterman", m=[3, 5]).to_json())
    assert data["pass"] is True
    assert [row["predicted"] for row in data["rows"]] == [-4, 12]


def test_lemma11_exclude_zero_convention_reports_mismatch():
    report = verify("lemma11", m=[5], mu=[1], convention="exclude_zero")
    assert not report.passed
    assert report.notes == ["ratio convention: exclude_zero"]


def test_theorem5_reports_dimension_m_plus_s_minus_1():
    report = verify("theorem5")
    dimension_rows = [r for r in report.rows if r.w == "k = m + s - 1"]
    assert dimension_rows
    assert len(dimension_rows) == len([r for r in report.rows if r.w == "dimension"])
    assert all(r.match for r in dimension_rows)
    assert {r.predicted for r in dimension_rows if r.instance.startswith("gold:5:1")} <= {9}


def test_lemma7_reports_sum_identity_reading(caplog):
    with caplog.at_level("WARNING", logger="vbf_verify"):
        report = verify("lemma7", count=2)
    assert report.passed
    assert "(W_l + W_m)^2" in report.notes[0]
    assert any(r.name == "vbf_verify" for r in caplog.records)
