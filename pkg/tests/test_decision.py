import pytest

from addcomp.decision import (NO, UNKNOWN, YES, DecisionCertificate,
                              SearchBudget)
from addcomp.groups import Group
from addcomp.sumset import GroupSet


def test_verdict_witness_pairing():
    g = Group([6])
    w = GroupSet.from_elements(g, [0, 3])
    c = GroupSet.from_elements(g, [0, 1, 2])
    cert = DecisionCertificate("minimal-complement-for", YES, "exhaustive",
                               witness=w, detail={"base": c})
    assert cert.verify()
    with pytest.raises(ValueError):
        DecisionCertificate("minimal-complement-for", YES, "exhaustive")
    with pytest.raises(ValueError):
        DecisionCertificate("minimal-complement-for", NO, "bound-size-gap",
                            witness=w)
    with pytest.raises(ValueError):
        DecisionCertificate("minimal-complement-for", "maybe", "exhaustive")
    with pytest.raises(ValueError):
        DecisionCertificate("minimal-complement-for", NO, "vibes")


def test_verify_catches_bad_witness():
    g = Group([6])
    c = GroupSet.from_elements(g, [0, 1, 2])
    bad = DecisionCertificate("minimal-complement-for", YES, "exhaustive",
                              witness=GroupSet.from_elements(g, [0, 1]),
                              detail={"base": c})
    assert not bad.verify()


def test_verify_vacuous_for_no_and_unknown():
    no = DecisionCertificate("minimal-complement-for", NO, "bound-size-gap")
    unk = DecisionCertificate("minimal-complement-for", UNKNOWN, "budget")
    assert no.verify() and unk.verify()


def test_verify_supplement_problem():
    g = Group([8])
    c = GroupSet.from_elements(g, [0, 1])
    w = GroupSet.from_elements(g, [0, 2, 4])
    cert = DecisionCertificate("maximal-supplement-for", YES, "exhaustive",
                               witness=w, detail={"base": c})
    assert cert.verify()


def test_verify_unknown_problem_raises():
    g = Group([4])
    cert = DecisionCertificate("made-up", YES, "exhaustive",
                               witness=GroupSet.full(g), detail={})
    with pytest.raises(ValueError):
        cert.verify()


def test_summary_mentions_witness_size():
    g = Group([6])
    cert = DecisionCertificate(
        "minimal-complement-for", YES, "construction-ap",
        witness=GroupSet.from_elements(g, [0, 3]),
        detail={"base": GroupSet.from_elements(g, [0, 1, 2])})
    s = cert.summary()
    assert "yes" in s and "construction-ap" in s and "2" in s


def test_budget_validation():
    b = SearchBudget()
    assert b.max_candidates == 1 << 22
    with pytest.raises(ValueError):
        SearchBudget(max_candidates=0)
    with pytest.raises(ValueError):
        SearchBudget(max_nodes=-3)
