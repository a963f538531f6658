import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given

from dsehopf import jsonio
from dsehopf.algebra import AlgebraElement, coproduct
from dsehopf.cli import run
from dsehopf.dse import family_solution
from dsehopf.hopfcheck import is_hopf
from dsehopf.series import TruncatedSeries
from dsehopf.trees import COMMUTATIVE, PLANAR, canonicalize_forest, ladder
from strategies import forests, trees


@given(trees(PLANAR))
def test_tree_round_trip(t):
    assert jsonio.decode_tree(json.loads(jsonio.dumps(jsonio.encode_tree(t)))) == t


@given(forests(COMMUTATIVE))
def test_forest_round_trip(f):
    f = canonicalize_forest(tuple(f), COMMUTATIVE)
    assert jsonio.decode_forest(jsonio.encode_forest(f), mode=COMMUTATIVE) == f


def test_empty_forest_is_empty_list():
    assert jsonio.encode_forest(()) == []
    assert jsonio.decode_forest([]) == ()


def test_element_and_tensor_round_trip():
    x = family_solution(1, Fraction(1, 2), 3, PLANAR).a(3)
    enc = jsonio.encode_element(x)
    assert "3/4" in {t["coeff"] for t in enc["terms"]}
    assert jsonio.decode_element(json.loads(jsonio.dumps(enc))) == x
    d = coproduct(AlgebraElement.from_tree(ladder(4)))
    assert jsonio.decode_tensor(jsonio.encode_tensor(d)) == d


def test_verdict_round_trip():
    v = is_hopf(TruncatedSeries([1, 1, 2, 0, 0]), 4)
    back = jsonio.decode_verdict(jsonio.encode_verdict(v))
    assert back == v


@pytest.mark.parametrize("obj,path", [
    ({"mode": "planar", "terms": [{"forest": [{"d": None, "c": 3}], "coeff": "1"}]}, "$.terms[0].forest[0].c"),
    ({"mode": "planar", "terms": [{"forest": [], "coeff": "x"}]}, "$.terms[0].coeff"),
    ({"mode": "tropical", "terms": []}, "$.mode"),
    ({"mode": "planar", "terms": [{"forest": {}, "coeff": "1"}]}, "$.terms[0].forest"),
    ({"mode": "planar", "terms": [{"forest": [{"d": None, "c": [{"q": 1}]}], "coeff": "1"}]},
     "$.terms[0].forest[0].c[0]"),
])
def test_decode_errors_carry_paths(obj, path):
    with pytest.raises(jsonio.DecodeError) as info:
        jsonio.decode_element(obj)
    assert info.value.path == path


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cli_enumerate_count(capsys):
    assert _run(capsys, "enumerate", "--weight", "5", "--count") == (0, "14\n", "")
    code, out, _ = _run(capsys, "enumerate", "--weight", "5", "--count", "--mode", "commutative", "--json")
    assert code == 0 and json.loads(out)["count"] == 9


def test_cli_coproduct(capsys):
    code, out, _ = _run(capsys, "coproduct", "--json", "--tree", '{"d": null, "c": [{"d": null, "c": []}]}')
    assert code == 0
    assert jsonio.decode_tensor(json.loads(out)) == coproduct(AlgebraElement.from_tree(ladder(2)))


def test_cli_dse_solve(capsys):
    code, out, _ = _run(capsys, "dse", "solve", "--series", "family:alpha=1,beta=1/2", "--weight", "3", "--json")
    comps = json.loads(out)["components"]
    assert code == 0 and jsonio.decode_element(comps[2]) == family_solution(1, Fraction(1, 2), 3).a(3)


def test_cli_hopf_check_exit_codes(capsys):
    code, out, _ = _run(capsys, "hopf", "check", "--series", "family:alpha=2,beta=1/3", "--json")
    assert code == 0 and json.loads(out)["pass"] is True
    code, out, _ = _run(capsys, "hopf", "check", "--series", "1,1,2")
    witness = json.loads(out)
    assert code == 2 and witness["pass"] is False and witness["failing_weight"] == 4
    assert witness["residual"]["terms"]


def test_cli_equal_and_bracket(capsys):
    code, out, _ = _run(capsys, "hopf", "equal", "--a", "1,1", "--b", "2,1", "--weight", "4")
    assert (code, out) == (0, "equal\n")
    code, out, _ = _run(capsys, "equal", "--a", "1,1", "--b", "1,2", "--weight", "4", "--json")
    assert code == 0 and json.loads(out)["equal"] is False
    code, out, _ = _run(capsys, "bracket", "--beta", "1", "--max", "3", "--json")
    lam = {(b["i"], b["j"]): b["lambda"] for b in json.loads(out)["brackets"]}
    assert code == 0 and lam[(1, 2)] == "2"


def test_cli_fdb_multi(capsys):
    code, out, _ = _run(capsys, "fdb", "multi", "--d", "2", "--word", "1,2,1", "--i", "1", "--verify", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["coproduct_law"] is True and payload["word"] == [1, 2, 1]


@pytest.mark.parametrize("argv", [
    ["enumerate", "--weight", "0"],
    ["enumerate", "--weight", "x"],
    ["dse", "solve", "--series", "1,0.5"],
    ["dse", "solve", "--series", "2,1"],
    ["hopf", "bracket", "--beta", "1.5"],
    ["coproduct", "--tree", "{"],
    ["coproduct", "--tree", '{"c": 1}'],
    ["fdb", "multi", "--d", "2", "--word", "13", "--i", "1"],
    ["equal", "--a", "1", "--b", "1,1"],
    ["nonsense"],
])
def test_cli_usage_errors(capsys, argv):
    code, out, err = _run(capsys, *argv)
    assert code == 1 and out == "" and err.startswith("error:")


def test_cli_weight_cap(capsys, monkeypatch):
    monkeypatch.setenv("HOPF_FOREST_MAX_WEIGHT", "4")
    code, _, err = _run(capsys, "enumerate", "--weight", "5", "--count")
    assert code == 1 and "HOPF_FOREST_MAX_WEIGHT" in err
    assert _run(capsys, "enumerate", "--weight", "4", "--count")[0] == 0
    monkeypatch.setenv("HOPF_FOREST_MAX_WEIGHT", "many")
    assert _run(capsys, "enumerate", "--count")[0] == 1


def test_cli_output_is_deterministic(tmp_path):
    outs = []
    for k in range(2):
        target = tmp_path / f"out{k}.json"
        code = subprocess.run([sys.executable, "-m", "dsehopf", "dse", "solve", "--series", "1,1,1,1",
                               "--mode", "commutative", "--weight", "5", "--json",
                               "--output", str(target)]).returncode
        assert code == 0
        outs.append(target.read_bytes())
    assert outs[0] == outs[1] and outs[0]


def test_cli_selftest_reports_every_criterion(capsys):
    code, out, _ = _run(capsys, "selftest", "--weight", "4", "--json")
    rows = json.loads(out)
    assert [r["criterion"] for r in rows] == list(range(1, 13))
    assert code == (0 if all(r["pass"] for r in rows) else 2)
