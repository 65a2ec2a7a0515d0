import json

import pytest

from chartab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_text(capsys):
    code, out, _ = run(capsys, "table", "C(4)")
    assert code == 0
    assert "|G| = 4" in out and "z^1" in out


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "A(5)", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["degrees"] == [1, 3, 3, 4, 5]
    assert doc["order"] == 60 and doc["q"] == 31


def test_acd(capsys):
    code, out, _ = run(capsys, "acd", "A(5)", "--prime", "5")
    assert code == 0 and out.strip() == "11/4"
    code, out, _ = run(capsys, "acd", "Aff(7,3)", "--prime", "7", "--field", "Qp")
    assert code == 0 and out.strip() == "7/3"
    code, out, _ = run(capsys, "acd", "S(4)", "--prime", "2", "--field", "Q")
    assert code == 0 and out.strip() == "2/1"


def test_check(capsys):
    code, out, _ = run(capsys, "check", "A(4)")
    assert code == 0
    assert "*sharp*" in out and "VIOLATION" not in out
    code, out, _ = run(capsys, "check", "S(3)", "--json", "--prime", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["violations"] == 0
    assert doc["primes"][0]["p"] == 3


def test_verify_small_corpus(capsys, tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("# tiny corpus\nC(6)\nS(3)\nA(4)\n")
    out_file = tmp_path / "report.json"
    code, _, err = run(capsys, "verify", "--corpus", str(corpus),
                       "--out", str(out_file))
    assert code == 0
    doc = json.loads(out_file.read_text())
    assert doc["violations"] == 0 and doc["num_groups"] == 3
    assert "violations: 0" in err


def test_verify_reports_parse_warnings(capsys, tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("C(3)\nNotAGroup(2)\n")
    code, _, err = run(capsys, "verify", "--corpus", str(corpus))
    assert code == 0  # warnings do not flip the exit status
    assert "warning" in err and "line 2" in err


def test_verify_byte_identical(capsys, tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("C(4)\nD(5)\nS(3)\n")
    out_a = tmp_path / "a.json"
    out_b = tmp_path / "b.json"
    assert run(capsys, "verify", "--corpus", str(corpus), "--seed", "5",
               "--out", str(out_a))[0] == 0
    assert run(capsys, "verify", "--corpus", str(corpus), "--seed", "5",
               "--out", str(out_b), "--jobs", "2")[0] == 0
    assert out_a.read_bytes() == out_b.read_bytes()


def test_fuzz(capsys):
    code, out, _ = run(capsys, "fuzz", "S(4)", "--trials", "20", "--seed", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["violations"] == [] and doc["trials"] == 20


def test_centralproduct(capsys):
    code, out, _ = run(capsys, "centralproduct")
    assert code == 0
    doc = json.loads(out)
    assert doc["violations"] == 0
    assert doc["instances"][0]["order"] == 240


def test_sharpness(capsys, tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("A(5)\nS(5)\nSL(2,5)\nS(4)\n")
    code, out, _ = run(capsys, "sharpness", "--corpus", str(corpus),
                       "--prime", "2", "--mode", "solvability")
    assert code == 0
    assert out.splitlines()[0] == "3/1"
    assert "  A(5)" in out


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "acd", "B(5)", "--prime", "2")
    assert code == 2 and "error" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["acd", "C(3)"])  # missing --prime
    assert exc.value.code == 2


def test_dense_cap_error(capsys):
    code, _, err = run(capsys, "table", "S(9)")
    assert code == 2 and "too large" in err
