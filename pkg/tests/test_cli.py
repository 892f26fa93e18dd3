import json

import pytest

from tanakacr.cli import main

HEIS = {"chart": ["u1", "x1", "x2"], "heavy": ["u1"], "forms": ["d(u1) - x1*d(x2)"]}


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_growth_text(capsys):
    assert run(capsys, "growth", "--entry", "example-2.1") == (0, "[4, 7]\n")


def test_growth_json(capsys):
    code, out = run(capsys, "growth", "--entry", "example-2.1", "--json")
    assert code == 0 and json.loads(out) == {"growth": [4, 7]}


def test_file_input(tmp_path, capsys):
    p = tmp_path / "heis.json"
    p.write_text(json.dumps(HEIS))
    code, out = run(capsys, "growth", "--file", str(p))
    assert (code, out.strip()) == (0, "[2, 3]")
    code, out = run(capsys, "prolong", "--file", str(p), "--max-degree", "2", "--json")
    assert code == 0 and json.loads(out)["terminated"] is False


@pytest.mark.parametrize("body", ["{not json", "[]", json.dumps({"chart": ["x"]}), json.dumps({"chart": ["x"], "forms": ["d(y)"]})])
def test_malformed_files_exit_2(tmp_path, capsys, body):
    p = tmp_path / "bad.json"
    p.write_text(body)
    code, _ = run(capsys, "growth", "--file", str(p))
    assert code == 2


def test_usage_errors_exit_2(capsys):
    assert main(["growth"]) == 2
    assert main(["growth", "--entry", "no-such-entry"]) == 2
    assert main(["no-such-verb"]) == 2


def test_catalog_list_and_show(capsys):
    code, out = run(capsys, "catalog", "list")
    assert code == 0 and "e2" in out.split()
    code, out = run(capsys, "catalog", "show", "so", "--params", "l=4", "--json")
    assert code == 0 and json.loads(out)["expected"]["total"]["value"] == 28


def test_verify_passing_entry(capsys):
    code, out = run(capsys, "verify", "example-2.1")
    assert code == 0 and "✗" not in out


def test_verify_reports_a_mismatch(capsys):
    code, out = run(capsys, "verify", "sostar")
    assert code == 1 and "✗" in out


def test_symmetry_verbs(capsys):
    assert run(capsys, "check-symmetry", "--entry", "example-2.2", "--field", "Y12", "--cr")[0] == 0
    assert run(capsys, "check-symmetry", "--entry", "example-2.2", "--field", "nope")[0] == 2
    code, out = run(capsys, "check-integrable", "--entry", "example-2.2", "--json")
    assert code == 0 and json.loads(out)["ok"] is True


def test_classify_and_rigidity(capsys):
    code, out = run(capsys, "classify", "--max-rank", "7", "--json")
    assert code == 0 and len(json.loads(out)) == 19
    code, out = run(capsys, "rigidity", "--entry", "su", "--json")
    data = json.loads(out)
    assert code == 0 and data["rigid"] is False and data["weights"]["1"] == 28


def test_find_j(capsys):
    code, out = run(capsys, "find-j", "--entry", "e2", "--json")
    assert code == 0 and json.loads(out)["J"] is not None
