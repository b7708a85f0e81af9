import json
import subprocess
import sys
from pathlib import Path

import pytest

from padichg.cli import main

SCHEMA = Path(__file__).resolve().parents[1] / "docs" / "output-schema.json"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_polylog_json(capsys):
    doc = run_json(capsys, "polylog", "--p", "5", "--prec", "4", "--r", "2", "--x", "1/2")
    assert doc["command"] == "polylog"
    assert doc["result"]["p"] == 5 and doc["result"]["prec"] == 4


def test_json_is_byte_identical():
    cmd = [sys.executable, "-m", "padichg.cli", "lp", "--p", "7", "--prec", "4", "--r", "3"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b


def test_plain_digits(capsys):
    code, out, _ = run(capsys, "lp", "--p", "5", "--prec", "5", "--r", "-1", "--route", "B", "--format", "plain")
    assert code == 0
    # 1/3 in Z_5 = 2 + 3*5 + 1*25 + 3*125 + 1*625 + ...
    assert out.strip() == "2 3 1 3 1 (mod 5^5)"


def test_congruence_passes(capsys):
    doc = run_json(capsys, "congruence", "--p", "5", "--a", "1/2,1/2", "--c", "1", "--n", "2", "--degree", "50")
    records = doc["result"] if isinstance(doc["result"], list) else [doc["result"]]
    text = json.dumps(records)
    assert '"pass": true' in text and '"pass": false' not in text


def test_unitroot_legendre_match(capsys):
    doc = run_json(capsys, "unitroot-legendre", "--p", "7", "--a", "3", "--prec", "5")
    assert doc["result"]["verdict"] == "match"


def test_unitroot_legendre_batch_is_ordered(capsys):
    doc = run_json(capsys, "unitroot-legendre", "--p", "11", "--a", "3,5,7", "--prec", "3")
    assert [r["a"] for r in doc["result"]] == [3, 5, 7]


def test_gauss1(capsys):
    code, out, err = run(capsys, "gauss1", "--p", "5", "--a", "1/2,1/2")
    assert code == 0, err
    assert json.loads(out)["result"]["agree"] is True


def test_domain_error_exit_code(capsys):
    code, out, err = run(capsys, "logtype", "--p", "7", "--prec", "6", "--a", "1/2,1/2", "--c", "4^{1-p}", "--at", "4")
    assert code == 1
    assert "OutsideDomain" in err
    assert out == ""


def test_usage_error_exit_code(capsys):
    code, out, err = run(capsys, "polylog", "--p", "5", "--bogus")
    assert code == 2
    assert "usage" in err and out == ""


def test_non_prime_is_a_usage_error(capsys):
    code, _, err = run(capsys, "eulergamma", "--p", "6")
    assert code == 2
    assert "usage" in err


def test_output_matches_schema(capsys):
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(SCHEMA.read_text())
    for argv in (
        ["eulergamma", "--p", "3"],
        ["digamma", "--p", "5", "--z", "1/3"],
        ["dwork", "--p", "5", "--a", "1,1", "--at", "2"],
        ["congruence", "--p", "3", "--a", "1/2,1/2", "--n", "1"],
        ["nonvanishing", "--p", "7", "--N", "3", "--M", "3", "--n", "2"],
        ["unitroot-hg", "--p", "7", "--N", "2", "--M", "3", "--t0", "3", "--prec", "3"],
    ):
        doc = run_json(capsys, *argv)
        jsonschema.validate(doc, schema)
