import pytest

import capelli


def test_verify_capelli():
    report = capelli.verify("cap", 2)
    assert report["equal"] is True
    assert report["residual_head"] == []
    assert report["lhs_terms"] == report["rhs_terms"]


def test_verify_reports_residual():
    report = capelli.verify("hu-ks", 1)
    assert report["equal"] is False
    assert report["residual_head"] == ["-1 h"]


def test_verify_resource_cap():
    with pytest.raises(RuntimeError):
        capelli.verify("cap", 5)
    report = capelli.verify("cap", 2, max_n=5, threads=2)
    assert report["equal"] is True


def test_expand_sides_agree():
    lhs = capelli.expand("cap", 2, "lhs")
    rhs = capelli.expand("cap", 2, "rhs")
    assert lhs == rhs
    assert lhs == (
        "x[1,1] x[2,2] p[1,1] p[2,2] + -1 x[1,1] x[2,2] p[1,2] p[2,1]"
        " + -1 x[1,2] x[2,1] p[1,1] p[2,2] + x[1,2] x[2,1] p[1,2] p[2,1]"
    )
    assert capelli.expand("tur", 1, "rhs") == "2 x[1,1] p[1,1]"


def test_counts_and_enumeration():
    assert capelli.count_objects("capelli", 2) == 10
    assert capelli.count_objects("turnbull", 3) == 488
    objects = capelli.enumerate_objects("turnbull", 1)
    assert objects == [
        {"n": 1, "a": [1], "b": [1], "d": [0]},
        {"n": 1, "a": [1], "b": [1], "d": [2]},
    ]


def test_links_and_weights():
    g = {"n": 2, "a": [2, 1], "b": [1, 1], "d": [0, 0]}
    assert capelli.links("capelli", g) == [(1, 2)]
    assert capelli.weight("capelli", g) == "-1 x[1,2] p[1,1] x[1,1] p[1,2]"
    weights = capelli.contraction_weights("capelli", g)
    assert weights == [
        {"k": [], "weight": "-1 x[1,1] x[1,2] p[1,1] p[1,2]"},
        {"k": [(1, 2)], "weight": "-1 h x[1,2] p[1,2]"},
    ]


def test_involution_roundtrip():
    g = {"n": 2, "a": [2, 1], "b": [1, 1], "d": [0, 0]}
    image = capelli.involution("capelli", g, [(1, 2)])
    assert image["case"] == "1"
    assert image["g"] == {"n": 2, "a": [1, 2], "b": [2, 1], "d": [1, 0]}
    assert image["k"] == []
    back = capelli.involution("capelli", image["g"], image["k"])
    assert back["g"] == g
    assert back["case"] == "2"


def test_check_involution():
    for family in ("capelli", "turnbull"):
        report = capelli.check_involution(family, 2)
        assert report["ok"] is True
        assert report["violations"] == []
        assert report["good_count"] + report["bad_count"] == report["pair_count"]


def test_good_guy_sum_matches_rhs():
    assert capelli.good_guy_sum("capelli", 2) == capelli.expand("cap", 2, "rhs")


def test_errors_are_pythonic():
    with pytest.raises(ValueError):
        capelli.verify("nonsense", 1)
    with pytest.raises(ValueError):
        capelli.weight("capelli", {"n": 1, "a": [1], "b": [1], "d": [1]})
