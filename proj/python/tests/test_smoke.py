import pytest

import unisep


def test_version():
    assert unisep.__version__.count(".") == 2


def test_classify_pair():
    u = unisep.classify("sp10", "B4AB6AB5A")
    v = unisep.classify("sp10", "BAB2AB4AB3A")
    assert u["order"] == v["order"] == 8
    assert u["label"] == [[2, 1, 2], [6, 3, 1]]
    assert v["label"] == [[2, 0, 2], [6, 3, 1]]
    assert u["jordan_type"] == v["jordan_type"] == [[2, 2], [6, 1]]
    assert u["seed"] == 1 and u["preset"] == "sp10"


def test_label_and_jordan_helpers():
    assert unisep.hesselink_label("sp10", "B4AB6AB5A") == "(2_1^2, 6_3)"
    assert unisep.jordan_type([[1, 1, 0], [0, 1, 1], [0, 0, 1]]) == [(3, 1)]
    assert unisep.jordan_type([[1, 1], [0, 1]], 3) == [(2, 1)]


def test_chop():
    r = unisep.chop("sp10", "ext(nat,2)")
    assert r["dim"] == 45
    assert r["factors"] == [{"dim": 1, "mult": 1}, {"dim": 44, "mult": 1}]
    with pytest.raises(ValueError):
        unisep.chop("sp10", "ext(nat")
    with pytest.raises(unisep.BudgetExceeded):
        unisep.chop("sp10", "ext(nat,2)", budget=10)


def test_separate_sp4():
    r = unisep.separate("sp4", saturation=500)
    assert r.ok
    assert r["unseparated"] == []
    assert len(r["labels"]) == 5


def test_labels_sp6():
    r = unisep.labels("sp6", saturation=500)
    assert r.ok
    assert len(r["labels"]) == 9


def test_unknown_preset():
    with pytest.raises(RuntimeError):
        unisep.classify("sp12", "A")
