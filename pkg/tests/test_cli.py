import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from copart.cli import main
from copart.cyclo import CycloNum, RootOfUnity
from copart.quasipoly import binet_decompose, coprime_combination
from copart.serialize import (
    OutputRecord,
    decomposition_from_json,
    decomposition_to_json,
    dumps,
    format_value,
    parse_root,
    parse_value,
)
from copart.errors import DomainError


def run(*argv):
    out = io.StringIO()
    try:
        code = main(list(argv), out=out)
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    return code, out.getvalue()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["jordan", "--k", "2", "--n", "6"], "24"),
        (["coprime-partitions", "--k", "3", "--n", "6"], "2"),
        (["jordan-root", "--k", "0", "--omega", "2/1", "--n", "2"], "2"),
        (["jordan-mod", "--k", "0", "--j", "1", "--m", "3", "--n", "22"], "2"),
        (["partitions", "--k", "4", "--n", "10"], "9"),
        (["compositions", "--k", "4", "--n", "10"], "84"),
        (["coprime-compositions", "--k", "4", "--n", "6"], "10"),
    ],
)
def test_compute_examples(argv, expected):
    code, text = run(*argv)
    assert code == 0
    assert text.strip() == expected


def test_compute_json_record():
    code, text = run("partitions", "--k", "4", "--n", "10", "--format", "json")
    assert code == 0
    record = OutputRecord.from_json(json.loads(text))
    assert record.variant == "partitions" and record.parsed() == 9
    assert dict(record.query) == {"k": 4, "n": 10}


def test_dirichlet_value():
    code, text = run("jordan-dirichlet", "--k", "0", "--m", "3", "--chi-index", "1", "--n", "2")
    assert code == 0 and text.strip() == "-2"


def test_cyclotomic_value_round_trips():
    code, text = run("jordan-root", "--k", "0", "--omega", "3/1", "--n", "2", "--format", "json")
    assert code == 0
    value = OutputRecord.from_json(json.loads(text)).parsed()
    w = CycloNum.zeta(3)
    assert value == w * w - w


@pytest.mark.parametrize(
    "argv, code",
    [
        (["partitions", "--k", "0", "--n", "3"], 1),
        (["jordan", "--k", "1", "--n", "0"], 1),
        (["jordan-mod", "--k", "1", "--j", "3", "--m", "3", "--n", "5"], 1),
        (["jordan-dirichlet", "--k", "1", "--m", "3", "--chi-index", "7", "--n", "5"], 1),
        (["partitions", "--k", "3"], 2),
        (["jordan-root", "--k", "1", "--n", "5"], 2),
        (["jordan-root", "--k", "1", "--omega", "0/1", "--n", "5"], 2),
        (["decompose", "--k", "1"], 2),
        (["decompose", "--k", "11"], 2),
        (["tabulate", "--what", "partitions", "--k", "3", "--n-from", "5", "--n-to", "4"], 2),
        (["verify", "--suite", "all", "--k-max", "0"], 2),
        (["bogus"], 2),
    ],
)
def test_exit_codes(argv, code):
    assert run(*argv)[0] == code


def test_domain_error_goes_to_stderr(capsys):
    code, text = run("partitions", "--k", "0", "--n", "3")
    assert code == 1 and text == ""
    assert capsys.readouterr().err.startswith("copart: error:")


@pytest.mark.parametrize(
    "what, k, lo, hi, values",
    [
        ("coprime-partitions", 3, 4, 8, [1, 2, 2, 4, 4]),
        ("partitions", 2, 1, 4, [0, 1, 1, 2]),
        ("jordan", 1, 1, 3, [1, 1, 2]),
    ],
)
def test_tabulate_examples(what, k, lo, hi, values):
    code, text = run("tabulate", "--what", what, "--k", str(k), "--n-from", str(lo), "--n-to", str(hi))
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "n,value"
    assert lines[1:] == [f"{n},{v}" for n, v in zip(range(lo, hi + 1), values)]
    code, text = run("tabulate", "--what", what, "--k", str(k), "--n-from", str(lo), "--n-to", str(hi),
                     "--format", "json")
    rows = json.loads(text)["rows"]
    assert [(r["n"], parse_value(r["value"])) for r in rows] == list(zip(range(lo, hi + 1), values))


def _combination(obj):
    out = {}
    for e in obj["coprime_combination"]:
        key = (e["degree"], e["omega"]["m"], e["omega"]["j"])
        out[key] = [Fraction(c) for c in e["coeff"]["coeffs"]]
    return out


def test_decompose_schema_and_values():
    code, text = run("decompose", "--k", "2")
    obj = json.loads(text)
    assert code == 0 and set(obj) == {"k", "level", "binet", "coprime_combination"}
    assert obj["k"] == 2 and obj["level"] == 2
    assert _combination(obj)[(1, 1, 0)] == [Fraction(1, 2)]
    code, text = run("decompose", "--k", "4")
    comb = _combination(json.loads(text))
    rational = {key: v[0] for key, v in comb.items() if all(c == 0 for c in v[1:])}
    assert rational[(3, 1, 0)] == Fraction(1, 144)
    assert rational[(2, 1, 0)] == Fraction(1, 48)
    assert rational[(1, 1, 0)] == Fraction(-1, 32)
    assert rational[(0, 1, 0)] == Fraction(-13, 288)
    assert rational[(1, 2, 1)] == Fraction(1, 32)
    for entry in json.loads(text)["binet"]:
        for c in entry["coeffs"]:
            assert c["level"] == 12 and len(c["coeffs"]) == 4


def test_decompose_text_starts_with_polynomial_part():
    code, text = run("decompose", "--k", "3", "--format", "text")
    assert code == 0
    lines = text.splitlines()
    assert lines[1].strip() == "polynomial part: 1/12*n^2 - 7/72"


@pytest.mark.parametrize("k", [2, 3, 4, 6])
def test_decomposition_json_round_trip(k):
    decomp, comb = binet_decompose(k), coprime_combination(k)
    obj = decomposition_to_json(decomp, comb)
    back_decomp, back_comb = decomposition_from_json(json.loads(dumps(obj)))
    assert back_decomp == decomp and back_comb == comb
    assert decomposition_to_json(back_decomp, back_comb) == obj


def test_value_strings():
    assert format_value(7) == "7"
    assert format_value(Fraction(-3, 4)) == "-3/4"
    assert parse_value("-3/4") == Fraction(-3, 4)
    w = CycloNum.zeta(3)
    assert parse_value(format_value(w)) == w
    assert parse_root("4/2") == RootOfUnity(2, 1)
    with pytest.raises(DomainError):
        parse_root("x/1")


def test_determinism():
    first = [run("decompose", "--k", "5")[1], run("tabulate", "--what", "coprime-partitions", "--k", "4",
                                                 "--n-from", "1", "--n-to", "50", "--format", "json")[1]]
    second = [run("decompose", "--k", "5")[1], run("tabulate", "--what", "coprime-partitions", "--k", "4",
                                                  "--n-from", "1", "--n-to", "50", "--format", "json")[1]]
    assert first == second


def test_verify_command():
    code, text = run("verify", "--suite", "golden", "--k-max", "4", "--n-max", "500")
    assert code == 0
    assert "golden" in text and "PASS" in text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "copart", "jordan", "--k", "2", "--n", "6"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "24"
