import json
import re
import subprocess
import sys

import pytest

from hibi import cli, multidegree
from hibi.polyring import IntPolynomial, parse_polynomial

N_POSET = {"n": 4, "covers": [[1, 3], [2, 3], [2, 4]]}


def write_job(tmp_path, name="job.json", **job):
    path = tmp_path / name
    path.write_text(json.dumps(job))
    return str(path)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lattice_n_poset(tmp_path, capsys):
    path = write_job(tmp_path, poset=N_POSET)
    code, out, _ = run(capsys, "lattice", "--input", path)
    assert code == 0
    data = json.loads(out)
    assert data["size"] == 8 and data["maximal_chains"] == 5
    assert data["ideals"][4] == [2, 4]
    assert data["incomparable_pairs"] == 5 and data["codim"] == 3
    assert sorted(data["join_irreducibles"]) == [[1], [1, 2, 3], [2], [2, 4]]


def test_bare_poset_file(tmp_path, capsys):
    path = write_job(tmp_path, n=3, covers=[[1, 2], [2, 3]])
    code, out, _ = run(capsys, "lattice", "--input", path)
    data = json.loads(out)
    assert code == 0 and data["size"] == 4 and data["maximal_chains"] == 1


def test_hilbert_n_poset(tmp_path, capsys):
    path = write_job(tmp_path, poset=N_POSET, chain=[2, 3])
    code, out, _ = run(capsys, "hilbert", "--input", path, "--k-polynomial", "--specialize", "--oracle-check", "3")
    assert code == 0
    data = json.loads(out)
    assert data["numerator"] == "1 + t1 - 2*t0*t1 - 2*t1*t2 + t0*t1*t2 + t0*t1^2*t2"
    assert data["denominator_exponents"] == [2, 3, 2]
    assert data["specialized"]["numerator"] == "1 + 3*t0 + t0^2"
    assert data["specialized"]["denominator_exponents"] == [5]
    assert data["oracle_check"]["agree"] and "sigma" in data["oracle_check"]["oracles"]
    # pretty text and JSON terms denote the same polynomial
    num = re.match(r"HS = \((.*)\) / ", data["pretty"]).group(1)
    assert parse_polynomial(num, 3) == IntPolynomial.from_json(3, data["numerator_terms"])
    assert parse_polynomial(data["k_polynomial"], 3) == IntPolynomial.from_json(3, data["k_polynomial_terms"])


def test_hilbert_with_f(tmp_path, capsys):
    path = write_job(tmp_path, poset=N_POSET, chain=[2, 3], f=[0, 0, 0], m=0)
    code, out, _ = run(capsys, "hilbert", "--input", path, "--oracle-check", "3")
    data = json.loads(out)
    assert code == 0 and data["numerator"] == "1 + 3*t0 + t0^2"
    assert data["oracle_check"]["oracles"] == ["taylor", "multichain"]


def test_multidegree_both(tmp_path, capsys):
    path = write_job(tmp_path, poset=N_POSET, chain=[2, 4])
    code, out, _ = run(capsys, "multidegree", "--input", path, "--route", "both")
    data = json.loads(out)
    assert code == 0
    assert data["routes"]["k"] == data["routes"]["chains"]
    assert parse_polynomial(data["polynomial"], 3) == parse_polynomial(
        "t1*t2^2 + t1^2*t2 + t0*t2^2 + t0*t1*t2 + t0*t1^2", 3)
    assert data["specialized"] == {"coefficient": "5", "exponent": 3}


def test_cs_outputs(tmp_path, capsys):
    path = write_job(tmp_path, poset=N_POSET, chain=[2, 3])
    code, out, _ = run(capsys, "cs", "--input", path)
    data = json.loads(out)
    assert code == 0 and data["cs"] is False
    w = data["witness"]
    assert w["pair"] == [1, 4] and w["monomial"] == ["{1,2}", "{2,4}"] and w["degree"] == "2*e1"
    path = write_job(tmp_path, "b.json", poset=N_POSET, chain=[2, 4])
    code, out, _ = run(capsys, "cs", "--input", path)
    data = json.loads(out)
    assert data["cs"] is True and data["witness"]["type"] == "elimination"
    assert data["witness"]["ambient_size"] == 9 and data["witness"]["missing"] == ["{1,3}"]


def test_grading_recover(tmp_path, capsys):
    groups = {0: [[], [1]], 1: [[2], [1, 2], [2, 4], [1, 2, 4]], 2: [[1, 2, 3], [1, 2, 3, 4]]}
    degrees = [{"ideal": a, "degree": d} for d, ideals in groups.items() for a in ideals]
    path = write_job(tmp_path, poset=N_POSET, degrees=degrees)
    code, out, _ = run(capsys, "grading-recover", "--input", path)
    assert code == 0
    data = json.loads(out)
    assert data["chain"] == [2, 3] and data["f"] == [0, 1, 2]


def test_grading_recover_not_homogeneous(tmp_path, capsys):
    ideals = [[], [1], [2], [1, 2], [2, 4], [1, 2, 3], [1, 2, 4], [1, 2, 3, 4]]
    degrees = [{"ideal": a, "degree": int(a == [1, 2])} for a in ideals]
    path = write_job(tmp_path, poset=N_POSET, degrees=degrees)
    code, out, err = run(capsys, "grading-recover", "--input", path)
    assert code == 5 and out == ""
    assert len(json.loads(err)["pair"]) == 2


def test_ideal(tmp_path, capsys):
    path = write_job(tmp_path, poset=N_POSET)
    code, out, _ = run(capsys, "ideal", "--input", path, "--verify-groebner")
    data = json.loads(out)
    assert code == 0 and data["groebner_verified"] is True
    assert len(data["generators"]) == 5 and len(data["primary_components"]) == 5


@pytest.mark.parametrize("job,code", [
    ({"poset": {"n": 2, "covers": [[1, 2], [2, 1]]}}, 2),
    ({"poset": {"n": 2, "covers": [[1, 3]]}}, 2),
    ({"poset": N_POSET, "chain": [1, 4]}, 4),
    ({"poset": N_POSET, "chain": [2, 3], "f": [0, 1]}, 2),
])
def test_error_codes(tmp_path, capsys, job, code):
    path = write_job(tmp_path, **job)
    got, out, err = run(capsys, "hilbert", "--input", path)
    assert got == code and out == "" and "error" in json.loads(err)


def test_unreadable_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "lattice", "--input", str(bad))[0] == 2
    assert run(capsys, "lattice", "--input", str(tmp_path / "missing.json"))[0] == 2


def test_lattice_cap(tmp_path, capsys, monkeypatch):
    path = write_job(tmp_path, poset={"n": 25, "covers": []})
    assert run(capsys, "lattice", "--input", path)[0] == 3
    monkeypatch.setenv("HIBI_LATTICE_CAP", "7")
    assert run(capsys, "lattice", "--input", write_job(tmp_path, "n.json", poset=N_POSET))[0] == 3
    monkeypatch.setenv("HIBI_LATTICE_CAP", "8")
    assert run(capsys, "lattice", "--input", write_job(tmp_path, "n.json", poset=N_POSET))[0] == 0


def test_internal_error_code(tmp_path, capsys, monkeypatch):
    # a corrupted K-polynomial leaves low-degree residue
    monkeypatch.setattr(multidegree, "k_polynomial", lambda P, spec, L: IntPolynomial.one(spec.m + 1))
    path = write_job(tmp_path, poset=N_POSET, chain=[2, 3])
    assert run(capsys, "multidegree", "--input", path)[0] == 6


def test_deterministic_bytes(tmp_path):
    path = write_job(tmp_path, poset=N_POSET, chain=[2, 4])
    cmd = [sys.executable, "-m", "hibi.cli", "hilbert", "--input", path, "--k-polynomial"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
