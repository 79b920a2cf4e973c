import io
import json
import subprocess
import sys

import pytest

from tsscpp.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_gf_both_methods():
    code, text = run("gf", "--weight", "refined", "--n", "3", "--m", "0", "--method", "both")
    assert code == 0
    assert text.splitlines() == ["2 + 3*t + 2*t^2", "2 + 3*t + 2*t^2", "MATCH"]


def test_pfaffian_inline_and_file(tmp_path):
    assert run("pfaffian", "--matrix", '[[0,"5"],["-5",0]]') == (0, "5\n")
    f = tmp_path / "m.json"
    f.write_text('[[0, "t"], ["-t", 0]]')
    assert run("pfaffian", str(f)) == (0, "t\n")


def test_pfaffian_bad_input(capsys):
    assert run("pfaffian", "--matrix", "[[0,1],[1,0]]")[0] == 2
    assert run("pfaffian", "--matrix", "not json")[0] == 2
    assert "error" in capsys.readouterr().err


def test_enumerate_json():
    code, text = run("enumerate", "--class", "cspp", "--n", "1", "--m", "2")
    assert code == 0
    assert json.loads(text) == [[], [[1]], [[2]], [[2], [1]]]


def test_enumerate_filters_and_stats():
    code, text = run("enumerate", "--class", "cspp", "--n", "3", "--filter", "rows:1")
    assert len(json.loads(text)) == 5
    code, text = run("enumerate", "--class", "cspp", "--n", "3", "--stats", "--format", "csv")
    lines = text.splitlines()
    assert lines[0] == "object,Ubar1,Ubar2,Ubar3,VR,VC,profile,size"
    assert len(lines) == 8
    code, text = run("enumerate", "--class", "mt", "--n", "3", "--filter", "k:1")
    assert len(json.loads(text)) == 5
    assert run("enumerate", "--class", "tspp", "--n", "3", "--filter", "rows:1")[0] == 2


def test_enumerate_cubes():
    code, text = run("enumerate", "--class", "tsscpp", "--n", "1", "--m", "2", "--format", "pretty")
    assert code == 0 and len(text.splitlines()) == 4


def test_matrix():
    code, text = run("matrix", "--kind", "B_tu", "--n", "3", "--m", "0")
    assert json.loads(text) == [["1", "0", "0", "0", "0"], ["0", "1", "t*u", "0", "0"],
                                ["0", "0", "1", "t + u", "t*u"]]
    code, text = run("matrix", "--kind", "Lbar", "--n", "6", "--m", "2", "--k", "1")
    assert json.loads(text)[0] == ["0", "eps", "-eps", "1", "-1", "1"]
    code, text = run("matrix", "--kind", "Sbar", "--n", "3", "--t", "0")
    assert code == 0


def test_constterm_compare():
    code, text = run("constterm", "--weight", "mt", "--n", "3", "--k", "1", "--compare", "pfaffian")
    assert code == 0
    assert text.splitlines() == ["2 + 2*t + t^2", "2 + 2*t + t^2", "MATCH"]
    assert run("constterm", "--weight", "refined", "--n", "3", "--D", "1")[0] == 2


def test_tables():
    code, text = run("tables", "--family", "avs", "--max", "4")
    assert text.splitlines()[-1] == "9,646"
    code, text = run("tables", "--family", "asm", "--max", "3", "--format", "json")
    assert json.loads(text)[-1] == {"n": 3, "A_n": 7, "refined": "2 3 2"}


def test_verify_conjecture_case():
    code, text = run("verify", "conjectures", "--id", "conj-mt", "--n", "3", "--k", "1")
    rows = json.loads(text)
    assert code == 0
    assert len(rows) == 1
    assert rows[0]["lhs"] == rows[0]["rhs"] == "2 + 2*t + t^2"
    code, text = run("verify", "conjectures", "--id", "conj-refined", "--n", "3")
    assert json.loads(text)[0]["rhs"] == "2 + 3*t + 2*t^2"


def test_verify_gating_suite():
    code, text = run("verify", "pfaffian-core", "--format", "csv")
    assert code == 0
    assert text.splitlines()[0] == "case,kind,params,lhs,rhs,match,method_lhs,method_rhs"


def test_usage_errors():
    with pytest.raises(SystemExit):
        main(["gf", "--weight", "bogus", "--n", "3"], io.StringIO())
    assert run("gf", "--weight", "mt", "--n", "3")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tsscpp", "pfaffian", "--matrix", "[[0,2],[-2,0]]"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "2\n"
