import json

import pytest

from approxpoly.cli import run
from approxpoly.polyhedra import HPolyhedron, VPolyhedron, hrep_of
from approxpoly.serialization import dumps, encode, loads_set
from approxpoly.errors import InvalidInput

from fractions import Fraction as F

BOX = '{"hrep": {"A": [[1, 0], [-1, 0], [0, 1], [0, -1]], "b": ["1", "1", "2", "0"]}}'
CONE = '{"vrep": {"points": [[0, 0]], "rays": [[1, 1], [-1, 1]]}}'


def call(capsys, *argv):
    code = run(list(argv))
    return code, capsys.readouterr().out


def doc(capsys, *argv):
    code, out = call(capsys, *argv)
    assert code == 0, out
    return json.loads(out)["result"]


def test_classify_commands(capsys):
    res = doc(capsys, "classify", "--body", "parabola")
    assert res["verdict"] == "InfinitelyHiding"
    assert len(res["witness"]["certificates"]) == 10
    res = doc(capsys, "classify", "hyperbola", "--eps", "1/50")
    assert res["verdict"] == "ApproximativelyPolyhedral"
    lo, hi = F(res["dist_to_cone"]["lo"]), F(res["dist_to_cone"]["hi"])
    assert lo <= 1 <= hi
    assert doc(capsys, "classify", BOX)["dist_to_cone"] == {"finite": "2"}


def test_hausdorff(capsys, tmp_path):
    f = tmp_path / "box.json"
    f.write_text(BOX)
    assert doc(capsys, "hausdorff", str(f), str(f)) == {"finite": "0"}
    res = doc(capsys, "hausdorff", BOX, CONE)
    assert "infinite" in res


def test_recession_cone_of_box_is_trivial(capsys):
    res = doc(capsys, "recession-cone", '{"hrep": {"A": [[1, 0], [-1, 0]], "b": ["1", "1"]}}')
    assert res["generators"] == [["0", "1"], ["0", "-1"]] or len(res["lineality"]) == 1
    res = doc(capsys, "recession-cone", BOX)
    assert res["generators"] == [] and all(b == "0" for b in res["cone"]["hrep"]["b"])


def test_ray_search_and_truncate(capsys):
    res = doc(capsys, "ray-search", "parabola", "--start", "0,1", "--direction", "1,0", "--eps", "1")
    assert F(res["t"]) > 1
    res = doc(capsys, "truncate", CONE, "--eps", "1/2")
    assert F(res["radius"]) >= 0


def test_hidden_set_build_and_verify(capsys):
    res = doc(capsys, "hidden-set", "--body", "parabola", "--n", "4")
    assert len(res["points"]) == 4 and len(res["certificates"]) == 6
    res = doc(capsys, "hidden-set", "parabola", "--points", "[[-2, 2], [2, 2]]")
    assert res["certificates"][0]["pair"] == [0, 1]


def test_hull_commands(capsys):
    res = doc(capsys, "biorthogonal", "--ball", "3", "--k", "2")
    assert len(res) == 2
    res = doc(capsys, "approximant", "--ball", "3", "--k", "2")
    assert res["sandwich"] is True
    res = doc(capsys, "net", BOX, "--eps", "1/2")
    assert F(res["distance"]["finite"]) < 1


def test_exit_codes(capsys, tmp_path):
    code, out = call(capsys, "hidden-set", "parabola", "--points", "[[0, 2], [3, 2]]")
    assert code == 2 and json.loads(out)["error"] == "PointInsideBody"
    code, out = call(capsys, "classify", '{"hrep": {"A": [[1]], "b": ["1"], "extra": 1}}')
    assert code == 2 and json.loads(out)["error"] == "InvalidInput"
    code, out = call(capsys, "hausdorff", str(tmp_path / "missing.json"), BOX)
    assert code == 1 and json.loads(out)["error"] == "IOError"
    code, _ = call(capsys, "classify", BOX, "--out", str(tmp_path / "nodir" / "x.json"))
    assert code == 1
    code, out = call(capsys, "hidden-set", "hyperbola")
    assert code == 2 and json.loads(out)["error"] == "PreconditionUnsatisfied"


def test_output_is_deterministic(capsys, tmp_path):
    outs = []
    for i in range(2):
        target = tmp_path / f"o{i}.json"
        assert run(["approximant", "--ball", "2", "--k", "2", "--seed", "3", "--out", str(target)]) == 0
        outs.append(target.read_bytes())
    assert outs[0] == outs[1]
    a = call(capsys, "plot", "--body", "parabola", "--n", "3")[1]
    b = call(capsys, "plot", "--body", "parabola", "--n", "3")[1]
    assert a == b and a.startswith("<svg")


def test_round_trip():
    H = HPolyhedron.from_rows(2, [((1, F(1, 3)), F(-2, 7)), ((0, -1), 5)])
    assert loads_set(dumps(H)) == H
    V = VPolyhedron(2, ((F(1, 2), F(0)),), ((F(1), F(1)),))
    assert loads_set(dumps(V)) == V
    assert hrep_of(loads_set(dumps(V))).rows == hrep_of(V).rows
    assert encode(loads_set('{"body": {"kind": "hyperbola", "offset": ["1", "-2/3"]}}')) == \
        {"body": {"kind": "hyperbola", "offset": ["1", "-2/3"]}}


@pytest.mark.parametrize("text", [
    '{"hrep": {"A": [[1, 0]], "b": ["1"], "c": 0}}',
    '{"vrep": {"points": [], "rays": []}}',
    '{"hrep": {"A": [[1, 0]], "b": []}}',
    '{"hrep": {}, "vrep": {}}',
    '{"body": {"kind": "parabola", "colour": "red"}}',
    '{"hrep": {"A": [["x", 0]], "b": ["1"]}}',
    '[1, 2',
])
def test_malformed_documents_rejected(text):
    with pytest.raises(InvalidInput):
        loads_set(text)
