import pytest

import ela


def test_dimensions():
    assert ela.dim("C", 4)["overall"]
    assert ela.dim("D", 5)["values"]["dimension"] == "20"
    assert ela.table("A", 4)["dimension"] == 10


def test_bracket_relation():
    assert ela.bracket("A", 2, "e1", "[e1e2]") == "-2*e1"
    assert ela.bracket("C", 4, "[e1e2]", "[e1[e1[e2e3]]]") == "[e1[e1[e2e3]]]"


def test_certificate_shape():
    cert = ela.verify("center", "C", 4)
    assert cert["schema"] == 1
    assert cert["overall"]
    assert all(c["name"].startswith("c4.center.") for c in cert["checks"])
    assert ela.verify("center", "C", 4) == cert


def test_rep_triplets():
    r = ela.rep("A", 2)
    assert r["dim"] == 2
    assert r["images"][0]["triplets"] == [[0, 1, "1"]]
    assert r["images"][1]["triplets"] == [[1, 0, "1"]]


def test_errors():
    with pytest.raises(ValueError):
        ela.dim("E", 6)
    with pytest.raises(ValueError):
        ela.verify("weights", "A", 3)
    with pytest.raises(ValueError):
        ela.bracket("A", 2, "[e1", "e2")
    assert "radical" in ela.suites()
