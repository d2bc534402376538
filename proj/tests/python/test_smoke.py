import pytest

import mckay


def test_build_c4():
    g = mckay.build("C4")
    assert g["order"] == 4
    assert g["ambient"] == "SU2"
    assert len(g["elements"]) == 4
    # pair coordinates; the second slot is the identity for an SU(2) group
    assert all(len(q) == 8 and q[4:] == [1.0, 0.0, 0.0, 0.0] for q in g["elements"])
    assert g["generators"] == [1]


def test_graph_and_classify_2t():
    g = mckay.graph("2T")
    assert g["dim_w"] == 2
    dims = sorted(v["dim"] for v in g["vertices"])
    assert dims == [1, 1, 1, 2, 2, 2, 3]
    assert sum(1 for v in g["vertices"] if v["trivial"]) == 1
    assert mckay.classify(mckay.graph_json("2T")) == [(0, 0, "ExtE(6)")]


def test_classify_product_colors():
    parts = mckay.classify(mckay.graph_json("prod(C2,C3)"))
    by_color = {}
    for color, _comp, kind in parts:
        by_color.setdefault(color, set()).add(kind)
    assert by_color[1] == {"ExtA(1)"}
    assert by_color[2] == {"ExtA(2)"}


def test_graph_dot():
    dot = mckay.graph_dot("2T")
    assert dot.startswith("graph mckay {")
    assert "doublecircle" in dot
    assert " -- " in dot


def test_verify_2i():
    passed, report = mckay.verify("2I", suite="su2")
    assert passed
    suites = {r["suite"] for r in report["reports"]}
    assert suites == {"su2"}
    assert report["passed"]


def test_dimension_rules():
    passed, report = mckay.check_dimension_multiset([1, 1, 4, 4, 5, 5, 6])
    assert not passed
    failed = [c["name"] for c in report["checks"] if c["status"] == "fail"]
    assert failed == ["odd > 1 without 3"]
    ok, _ = mckay.check_dimension_multiset([1, 2, 3])
    assert ok


def test_bad_spec_raises():
    with pytest.raises(ValueError):
        mckay.build("diag(prod(C2,C2))")
    with pytest.raises(ValueError):
        mckay.graph("C2x")


def test_small_survey():
    passed, report = mckay.survey(24)
    assert passed
    assert report["all_passed"]
    assert report["max_order"] == 24
    labels = [g["spec"] for g in report["groups"]]
    assert labels == sorted(labels)
    assert "2T" in labels and "goursat:c12-twist" in labels
    assert len(labels) > 30
