"""Report serialization and status semantics."""

import json

from nilregular.reports import EXHAUSTED, FAIL, PASS, VerificationReport


def make(status, witness=None):
    return VerificationReport(check="demo", parameters={"seed": 0},
                              status=status, witness=witness,
                              candidates_examined=5, elapsed_ms=1.25)


def test_status_constants():
    assert (PASS, FAIL, EXHAUSTED) == ("pass", "fail", "exhausted")


def test_passed_semantics():
    assert make(PASS).passed
    assert make(EXHAUSTED).passed  # exhausted-no-witness counts as success
    assert not make(FAIL, witness={"w": 1}).passed


def test_dict_omits_missing_witness():
    data = make(PASS).to_dict()
    assert "witness" not in data
    assert data["check"] == "demo"
    data = make(FAIL, witness={"pair": "(q, x)"}).to_dict()
    assert data["witness"] == {"pair": "(q, x)"}


def test_json_is_stable_and_sorted():
    payload = json.loads(make(PASS).to_json())
    assert payload["candidates_examined"] == 5
    assert list(json.loads(make(PASS).to_json())) == sorted(payload)


def test_summary_line():
    line = make(PASS).summary()
    assert line.startswith("[pass] demo:")
    assert "5 candidates" in line
