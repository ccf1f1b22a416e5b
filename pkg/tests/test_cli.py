import json

import pytest

from sparsetrop.cli import parse_document, run
from tests.families import CURVE, NOT_TAME, STRICT_CHAIN, SURFACE


def _doc(sups, **degs):
    return json.dumps({"dim": len(sups[0][0]), "supports": [[list(p) for p in A] for A in sups], **degs})


@pytest.fixture
def write(tmp_path):
    def _write(text, name="in.json"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def test_cones_json(write):
    code, out = run(["cones", "-i", write(_doc(SURFACE)), "--format", "json"])
    assert code == 0
    rep = json.loads(out)
    assert rep["command"] == "cones" and rep["status"] == []
    assert len(rep["result"]["maximal_cones"]) == 9
    assert rep["result"]["rays"] == [[-1, -1, -1], [0, 0, 1], [0, 1, 0], [1, 0, 0], [1, 1, 1]]


def test_output_is_deterministic(write):
    path = write(_doc(SURFACE))
    a = run(["cones", "-i", path, "--format", "json"])
    b = run(["cones", "-i", path, "--format", "json"])
    assert a == b
    assert run(["degree", "-i", path]) == run(["degree", "-i", path])


def test_degree_text(write):
    code, out = run(["degree", "-i", write(_doc(STRICT_CHAIN))])
    assert code == 0
    assert "chain: 5 < 6 < 10 < 11" in out


def test_degree_subset(write):
    code, out = run(["degree", "-i", write(_doc(STRICT_CHAIN)), "--subset", "0,3", "--format", "json"])
    assert code == 0
    assert json.loads(out)["result"]["d_I"] == [{"I": [0, 3], "value": 7}]
    code, out = run(["degree", "-i", write(_doc(STRICT_CHAIN)), "--subset", "0,3,1"])
    assert code == 2


def test_mult_table(write):
    path = write(_doc(CURVE, deg_f=2, deg_rho=2))
    code, out = run(["mult", "-i", path, "--format", "json"])
    assert code == 0
    res = json.loads(out)["result"]
    assert [e["m_w"] for e in res["points"]] == [2, 2, 2]
    assert res["weighted_ray_sum"] == [0, 0]
    code, out = run(["mult", "-i", path, "--point", "1/2,0", "--format", "json"])
    assert code == 0
    pre = json.loads(out)["result"]["points"][0]["preimages"]
    assert [(p["v"], p["m_v"], p["index"]) for p in pre] == [(["0", "1/2", "0"], 2, 1),
                                                            (["1/4", "3/4", "1/4"], 1, 2)]


def test_mult_bad_point(write):
    path = write(_doc(CURVE, deg_f=2, deg_rho=2))
    assert run(["mult", "-i", path, "--point", "1,1"])[0] == 2
    assert run(["mult", "-i", path, "--point", "x"])[0] == 2
    assert run(["mult", "-i", path, "--point", "1,0,0"])[0] == 2


def test_mult_integrality_exit(write):
    code, out = run(["mult", "-i", write(_doc(CURVE, deg_f=3, deg_rho=3))])
    assert code == 3 and "not an integer" in out


def test_order_and_strict(write):
    code, out = run(["order", "-i", write(_doc(SURFACE)), "--strict"])
    assert code == 0 and "ord = 4" in out
    path = write(_doc(NOT_TAME), "nt.json")
    code, out = run(["order", "-i", path, "--format", "json"])
    assert code == 0
    rep = json.loads(out)
    assert rep["status"] == ["NOT_TAME", "HYPOTHESIS_UNMET"]
    assert rep["result"]["ord_times_deg"] == 4
    assert run(["order", "-i", path, "--strict"])[0] == 4


def test_order_wrong_shape(write):
    assert run(["order", "-i", write(_doc([[(0, 0)], [(1, 0)], [(0, 1)]]))])[0] == 2


def test_verify(write):
    code, out = run(["verify", "-i", write(_doc(STRICT_CHAIN))])
    assert code == 0
    assert "FAIL" not in out


def test_output_file(write, tmp_path):
    target = tmp_path / "out.txt"
    code, out = run(["degree", "-i", write(_doc(SURFACE)), "-o", str(target)])
    assert code == 0 and out == ""
    assert "9 = 9 = 9 = 9" in target.read_text()


@pytest.mark.parametrize("text,msg", [
    ('{"dim": 2,', "line 1"),
    ('[]', "top level"),
    ('{"supports": [[[0]], [[1]]]}', "'dim'"),
    ('{"dim": 1, "supports": [[[0]]]}', "at least two"),
    ('{"dim": 1, "supports": [[[0]], []]}', "supports[1]"),
    ('{"dim": 2, "supports": [[[0, 0]], [[1]]]}', "supports[1][0]"),
    ('{"dim": 1, "supports": [[[0]], [[1.5]]]}', "supports[1][0]"),
    ('{"dim": 1, "supports": [[[0]], [[1]]], "deg_f": 0}', "deg_f"),
    ('{"dim": 1, "supports": [[[0]], [[1]]], "colour": 1}', "colour"),
])
def test_input_errors(write, text, msg):
    code, out = run(["cones", "-i", write(text)])
    assert code == 2
    assert msg in out


def test_missing_file():
    assert run(["cones", "-i", "/nonexistent/file.json"])[0] == 2


def test_negative_coordinates_translated_together():
    doc = parse_document('{"dim": 1, "supports": [[[-1], [1]], [[0], [2]]]}')
    assert [A.points for A in doc["supports"]] == [((0,), (2,)), ((1,), (3,))]
    assert doc["shift"] == (1,)


def test_threads_flag(write):
    path = write(_doc(STRICT_CHAIN))
    assert run(["degree", "-i", path, "--threads", "2"]) == run(["degree", "-i", path])
    assert run(["degree", "-i", path, "--threads", "0"])[0] == 2
