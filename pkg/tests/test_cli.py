import csv
import io
import json

import pytest

from altdist.cli import INVARIANT_COLUMNS, build_parser, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def diagrams(tmp_path):
    p = tmp_path / "d.txt"
    p.write_text("# two trefoils\n3_1.a: BR(2): 1 1 1\n3_1.b: X(1,5,2,4) X(5,3,6,2) X(3,1,4,6)\n")
    return str(p)


def test_invariants_csv(diagrams):
    code, out = run("invariants", diagrams, "--format", "csv", "--jobs", "1")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert tuple(rows[0]) == INVARIANT_COLUMNS
    assert rows[1][0] == "3_1.a" and rows[1][1] == "3"


def test_invariants_json_deterministic(diagrams):
    a = run("invariants", diagrams, "--format", "json")
    b = run("invariants", diagrams, "--format", "json")
    assert a == b
    assert json.loads(a[1])[0]["dalt"] == 0


def test_report_json(diagrams):
    code, out = run("report", diagrams, "--facts", "torus:2,3")
    assert code == 0
    obj = json.loads(out)
    assert obj["distances"]["alt"] == {"lower": 0, "upper": 0, "provenance": ["lower:nonnegative", "upper:alt<=dalt"]}


def test_report_facts_only():
    code, out = run("report", "--facts", "whitehead:2", "--format", "csv")
    assert code == 0
    assert "turaev_genus,2,," in out


def test_family_and_reproduce():
    code, out = run("family", "torus", "3", "7")
    assert code == 0 and json.loads(out)["facts"]["alt"]["interval"] == [2, 2]
    code, out = run("family", "whitehead", "2", "--twists", "0", "--format", "text")
    assert code == 0 and "not generated" in out
    code, out = run("reproduce", "pretzel10_125")
    assert code == 0
    assert out.count("PASS [") == 4


def test_signature_and_warp(diagrams):
    code, out = run("signature", diagrams, "--format", "csv")
    assert code == 0 and out.splitlines()[1].startswith("3_1.a,-2")
    code, out = run("warp", diagrams, "--format", "csv")
    assert code == 0 and out.splitlines()[1] == "3_1.a,0,1,0"


def test_exit_codes(tmp_path, capsys):
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    assert run("invariants", str(empty))[0] == 1
    assert "no diagrams" in capsys.readouterr().err
    assert run("invariants", str(tmp_path / "missing.txt"))[0] == 1
    assert run("frobnicate")[0] == 2
    assert run("report", "--facts", "torus")[0] == 2
    assert run("report")[0] == 2
    assert run("invariants", str(empty), "--jobs", "0")[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("BR(2): 1 1 1\nX(1,2\n")
    assert run("invariants", str(bad))[0] == 1
    assert "line 2" in capsys.readouterr().err
    assert run("family", "torus", "3")[0] == 1


def test_cap_exceeded(tmp_path, capsys):
    p = tmp_path / "big.txt"
    p.write_text("BR(3): " + "1 2 " * 4 + "\n")
    code, _ = run("report", str(p), "--kh-cap", "4", "--bracket-cap", "4")
    assert code == 0
    err = capsys.readouterr().err
    assert "Jones polynomial skipped" in err and "Khovanov homology skipped" in err
    code, _ = run("signature", str(p))
    assert code == 0


def test_help_documents_csv_columns(capsys):
    with pytest.raises(SystemExit):
        build_parser().parse_args(["--help"])
    assert ",".join(INVARIANT_COLUMNS) in capsys.readouterr().out
