import json
import subprocess
import sys

import pytest

from matroid_blowup.cli import main, parse_monomial, parse_range


@pytest.fixture
def files(tmp_path):
    k3 = tmp_path / "k3.json"
    k3.write_text(json.dumps({"vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]}))
    l4 = tmp_path / "l4.json"
    l4.write_text(json.dumps({"field": "Q", "ambient_dim": 3,
                              "points": [["1", "0", "0", "0"], ["0", "1", "0", "0"],
                                         ["1", "1", "0", "0"], ["1", "2", "0", "0"]]}))
    loop = tmp_path / "loop.json"
    loop.write_text(json.dumps({"vertices": 2, "edges": [[0, 0]]}))
    fano = tmp_path / "fano.json"
    pts = [[str(a), str(b), str(c)] for a in (0, 1) for b in (0, 1) for c in (0, 1)
           if (a, b, c) != (0, 0, 0)]
    fano.write_text(json.dumps({"field": "GF(2)", "points": pts}))
    return {"k3": str(k3), "l4": str(l4), "loop": str(loop), "fano": str(fano)}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_chromatic(capsys, files):
    code, out = run(capsys, "chromatic", "--graph", files["k3"], "--m", "3", "--format", "text")
    assert code == 0 and out.strip() == "6"
    code, out = run(capsys, "chromatic", "--graph", files["k3"], "--m", "3")
    assert json.loads(out)["result"]["value"] == "6"


def test_charpoly(capsys, files):
    code, out = run(capsys, "charpoly", "--config", files["l4"])
    data = json.loads(out)
    assert code == 0
    assert data["result"] == {"coeffs": ["3", "-4", "1"]}
    assert data["meta"]["field"] == "Q" and data["meta"]["fingerprint"]
    code, out = run(capsys, "charpoly", "--config", files["fano"])
    assert json.loads(out)["result"] == {"coeffs": ["-8", "14", "-7", "1"]}


def test_dtable_and_s0table(capsys, files):
    code, out = run(capsys, "dtable", "--graph", files["k3"], "--m", "2..5", "--n", "3..7")
    rows = json.loads(out)["result"]["rows"]
    assert rows[0][0] == "42" and rows[4][3] == "6103281168"
    code, out = run(capsys, "s0table", "--graph", files["k3"], "--format", "text")
    assert "234282" in out.splitlines()[-1]
    code, out = run(capsys, "s0table", "--graph", files["k3"], "--m", "2", "--n", "3")
    assert json.loads(out)["result"]["components"][0][0][0] == "10"


def test_degree(capsys, files):
    code, out = run(capsys, "degree", "--graph", files["k3"], "--monomial", "1:3",
                    "--format", "text")
    assert code == 0 and out.strip() == "1"
    code, out = run(capsys, "degree", "--graph", files["k3"], "--m", "3", "--padding", "2")
    data = json.loads(out)
    assert data["result"]["d"] == "6312" and data["meta"]["n"] == 4


def test_other_commands(capsys, files):
    assert json.loads(run(capsys, "nice", "--config", files["l4"])[1])["result"]["nice"] is False
    assert json.loads(run(capsys, "minor", "--config", files["l4"], "--target", "L4")[1]
                      )["result"]["has_minor"] is True
    assert json.loads(run(capsys, "beta", "--graph", files["k3"])[1])["result"]["beta"] == "1"
    assert json.loads(run(capsys, "modular", "--graph", files["k3"])[1]
                      )["result"]["modular"] == [0, 1, 2, 3, 4]
    flats = json.loads(run(capsys, "flats", "--graph", files["k3"])[1])["result"]
    assert len(flats["elements"]) == 5
    sbar = json.loads(run(capsys, "sbar", "--graph", files["k3"], "--m", "2")[1])["result"]
    assert sbar["coeffs"]["H4"] == {"coeffs": ["1"]}


def test_exit_codes(capsys, files, tmp_path):
    assert main(["chromatic", "--graph", files["loop"]]) == 1
    assert main(["charpoly", "--graph", str(tmp_path / "missing.json")]) == 1
    assert main(["degree", "--graph", files["k3"], "--m", "2", "--n", "2"]) == 2
    assert main(["dtable", "--graph", files["k3"], "--n", "1..3"]) == 2
    assert main(["nosuch"]) == 1
    assert main([]) == 1
    assert main(["degree", "--graph", files["k3"], "--monomial", "0:2"]) == 1
    capsys.readouterr()


def test_congruence_command(capsys, files):
    code, out = run(capsys, "congruence", "--graph", files["k3"])
    assert code == 0 and json.loads(out)["result"]["passed"]


def test_verify_failure_exit_code(capsys, monkeypatch):
    from matroid_blowup.verifier import mutations

    with mutations.pushforward_index_error():
        code, out = run(capsys, "verify", "--suite", "congruences")
    assert code == 3 and not json.loads(out)["result"]["passed"]


def test_output_is_deterministic(files):
    cmd = [sys.executable, "-m", "matroid_blowup", "dtable", "--graph", files["k3"],
           "--m", "2..3", "--n", "3..4"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a


def test_parsers():
    assert parse_range("2..5") == [2, 3, 4, 5]
    assert parse_range("3") == [3]
    assert parse_range("2,4") == [2, 4]
    assert parse_monomial("0:2,5:1") == {0: 2, 5: 1}
