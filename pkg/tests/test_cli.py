import csv
import io
import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from cochar.cli import main
from cochar.constants import CATALOG
from cochar.exactalg import parse_rational

GOLDEN = Path(__file__).parent / "golden"
ASYM_24_8_BOUND = Fraction(1, 25000)


def run(capsys, *argv, catalog=CATALOG):
    code = main([str(a) for a in argv], catalog=catalog)
    out, err = capsys.readouterr()
    return code, out, err


def test_mult_examples(capsys):
    assert run(capsys, "mult", 0, 0, "--method", "closed")[:2] == (0, "1\n")
    assert run(capsys, "mult", 1, 0, "--method", "oracle")[:2] == (0, "2\n")
    values = {m: run(capsys, "mult", 12, 5, "--method", m)[1] for m in ("closed", "oracle", "series")}
    assert len(set(values.values())) == 1


def test_mult_json_record(capsys):
    code, out, _ = run(capsys, "mult", 4, 2, "--format", "json")
    assert code == 0
    assert json.loads(out) == {"lambda1": 4, "lambda2": 2, "multiplicity": 43, "method": "closed"}


def test_mult_rejects_non_partition(capsys):
    code, out, err = run(capsys, "mult", 2, 3)
    assert code == 2 and out == "" and "lambda1 >= lambda2" in err
    assert run(capsys, "mult", 1, -1)[0] == 2


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "mult", "x", 1)[0] == 2
    assert run(capsys, "mult", 1, 0, "--method", "guess")[0] == 2
    assert run(capsys, "table", "--degree", -1)[0] == 2


def test_table_small(capsys):
    code, out, _ = run(capsys, "table", "--degree", 0)
    assert code == 0 and out == "lambda1,lambda2,multiplicity\n0,0,1\n"
    code, out, _ = run(capsys, "table", "--degree", 1)
    assert out.splitlines()[1:] == ["0,0,1", "1,0,2"]


def test_table_methods_agree(capsys):
    outs = {m: run(capsys, "table", "--degree", 10, "--method", m)[1] for m in ("closed", "oracle", "series")}
    assert outs["closed"] == outs["oracle"] == outs["series"]
    assert outs["closed"] == (GOLDEN / "table_10.csv").read_text()


def test_table_csv_and_json_agree(capsys):
    csv_rows = list(csv.DictReader(io.StringIO(run(capsys, "table", "--degree", 12)[1])))
    json_rows = json.loads(run(capsys, "table", "--degree", 12, "--format", "json")[1])
    as_triples = lambda rows: [(int(r["lambda1"]), int(r["lambda2"]), int(r["multiplicity"])) for r in rows]  # noqa: E731
    assert as_triples(csv_rows) == as_triples(json_rows)
    keys = [(a + b, a) for a, b, _ in as_triples(json_rows)]
    assert keys == sorted(keys)


def test_table_parallel_matches_serial(capsys):
    serial = run(capsys, "table", "--degree", 15)[1]
    assert run(capsys, "table", "--degree", 15, "--jobs", 3)[1] == serial


def test_table_to_file(capsys, tmp_path):
    target = tmp_path / "t.json"
    code, out, _ = run(capsys, "table", "--degree", 3, "--format", "json", "--out", target)
    assert code == 0 and out == ""
    assert len(json.loads(target.read_text())) == 6


def test_table_unwritable(capsys, tmp_path):
    code, _, err = run(capsys, "table", "--degree", 2, "--out", tmp_path / "missing" / "t.csv")
    assert code == 3 and "cannot write" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--degree", 2)
    assert code == 0
    assert len(out.splitlines()) == 7 and all(line.startswith("PASS") for line in out.splitlines())
    assert run(capsys, "verify", "--degree", 1)[0] == 2


def test_verify_degree_40(capsys):
    code, out, _ = run(capsys, "verify", "--degree", 40)
    assert code == 0, out


def test_verify_detects_corrupted_h_coefficient(capsys):
    bad = CATALOG.perturbed(("closed_form", "h1", "coeffs", 2), 1)
    code, out, err = run(capsys, "verify", "--degree", 10, catalog=bad)
    assert code == 1
    failed = [line for line in out.splitlines() if line.startswith("FAIL")]
    assert failed and failed[0].startswith(("FAIL (a)", "FAIL (g)"))
    assert "first failing check" in err


def test_asym_examples(capsys):
    code, out, _ = run(capsys, "asym", 0, 0)
    assert code == 0
    assert out.splitlines()[:3] == ["multiplicity: 1", "main_term: 0", "difference: 1"]
    rec = json.loads(run(capsys, "asym", 10, 10, "--format", "json")[1])
    assert rec["main_term"] == "0" and rec["difference"] == rec["multiplicity"]


def test_asym_golden(capsys):
    rec = json.loads(run(capsys, "asym", 24, 8, "--format", "json")[1])
    assert rec == json.loads((GOLDEN / "asym_24_8.json").read_text())
    assert abs(parse_rational(rec["ratio"])) < ASYM_24_8_BOUND


def test_ordinary(capsys):
    assert run(capsys, "ordinary", *[2] * 9)[1] == "1\n"
    assert run(capsys, "ordinary", 7, 5, *[3] * 7)[1] == run(capsys, "mult", 4, 2)[1]
    code, out, err = run(capsys, "ordinary", 5, 4, 3, 3, 3, 3, 3, 3, 1)
    assert code == 2 and out == "" and "mu_3 = mu_4 = ... = mu_9 >= 2" in err


def test_forms(capsys):
    code, out, _ = run(capsys, "forms")
    assert code == 0
    assert "b_plus(q) = (q + 4)/256" in out
    data = json.loads(run(capsys, "forms", "--format", "json")[1])
    assert set(data) >= {"hilbert_series", "multiplicity_series", "elementary_fractions", "coefficients"}
    assert data["odd_correction"] == "-1/64"


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cochar", "mult", "2", "1"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "7\n"
