import pytest

import quivar


def test_types():
    labels = quivar.types()
    assert "A1" in labels and "E8" in labels and "D4" in labels
    assert "E9" not in labels


def test_roots_counts():
    assert quivar.roots("E8", count_only=True)["count"] == 240
    a2 = quivar.roots("A2")
    assert a2["count"] == 6
    assert a2["maximal"] == [1, 1]
    assert [1, 1] in a2["roots"]


def test_diagram_and_mckay():
    d4 = quivar.diagram("D4")
    assert d4["bonds"] == [[1, 2], [2, 3], [2, 4]]
    ext = quivar.extended_diagram("D4")
    assert ext["delta"] == [1, 1, 2, 1, 1]
    assert quivar.mckay("D4") == {"name": "binary dihedral", "order": 8}
    assert quivar.mckay("E8")["order"] == 120


def test_classify_two_points():
    out = quivar.classify("A3", tau="0,1,0")
    assert out["regular_nonempty"] is True
    assert [p["type"] for p in out["singular"]] == ["A1", "A1"]
    assert out["lambda"] == ["-1", "0", "1", "0"]
    # tau as a list of ints works too
    same = quivar.classify("A3", tau=[0, 1, 0])
    assert same == out


def test_classify_full_type():
    out = quivar.classify("E6", tau=[0, 0, 0, 0, 0, 0])
    assert len(out["singular"]) == 1
    point = out["singular"][0]
    assert point["type"] == "E6"
    assert point["mckay"]["order"] == 24
    assert point["slice_delta"] == quivar.extended_diagram("E6")["delta"]


def test_classify_rejects_bad_lambda():
    with pytest.raises(ValueError):
        quivar.classify("A3", **{"lambda": "1,0,0,0"})


def test_decompose():
    out = quivar.decompose("A3", "0,1,0")
    assert [c["type"] for c in out["components"]] == ["A1", "A1"]
    empty = quivar.decompose("A3", ["1", "1/2", "1/3"])
    assert empty["components"] == []


def test_dominant():
    out = quivar.make_dominant("A2", ["-1", "0"])
    assert out["word"] == [1, 2]
    assert out["tau"] == ["0", "1"]


def test_bordism():
    yes = quivar.bordism("D4", "A1,A1,A1")
    assert yes["realizable"] is True
    assert yes["witness_J"] == [1, 3, 4]
    no = quivar.bordism("A2", ["A1", "A1"])
    assert no == {"realizable": False}
    configs = quivar.enumerate_configurations("A2")
    assert sorted(configs) == [[], ["A1"], ["A2"]]


def test_simple_exists():
    assert quivar.simple_exists("A2", [1, 1, 1], "0,0,0") is True
    assert quivar.simple_exists("A2", [0, 1, 1], "0,0,0") is False
    assert quivar.simple_exists("A2", [0, 1, 0], "0,0,0") is True


def test_slice_quivers():
    out = quivar.slice_quivers("A3", tau=[0, 1, 0])
    assert len(out["slices"]) == 2
    # A1 slices carry the double bond and delta' = (1,1)
    assert out["slices"][0]["bonds"] == [[0, 1], [0, 1]]
    assert out["slices"][0]["delta"] == [1, 1]


def test_walls_and_genericity():
    assert quivar.r_plus("A1") == [[0, 1], [1, 0]]
    assert quivar.is_generic("A1", ["0,0", "1,-1", "0,0"]) is True
    assert quivar.is_generic("A1", ["0,0", "0,0", "0,0"]) is False


def test_verify_single_type():
    out = quivar.verify("A2")
    assert out["failed"] == 0
    assert out["passed"] > 5
