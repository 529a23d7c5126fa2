import random

import pytest

from addcomp.groups import Group
from addcomp.oracle import (oracle_diffset_table, oracle_exists_witness,
                            oracle_exists_witness_unnormalized,
                            oracle_is_complement,
                            oracle_is_maximal_supplement_for,
                            oracle_is_minimal_complement_for,
                            oracle_is_supplement, oracle_maximal_supplement,
                            oracle_solid)
from addcomp.sumset import GroupSet


def test_complement_checks():
    g = Group([6])
    w = GroupSet.from_elements(g, [0, 3])
    c = GroupSet.from_elements(g, [0, 1, 2])
    assert oracle_is_complement(w, c)
    assert oracle_is_minimal_complement_for(w, c)
    fat = GroupSet.from_elements(g, [0, 1, 2, 3])
    assert oracle_is_complement(w, fat)
    assert not oracle_is_minimal_complement_for(w, fat)
    assert not oracle_is_complement(GroupSet.empty(g), c)


def test_exists_witness_anchors():
    g = Group([6])
    c = GroupSet.from_elements(g, [0, 1, 2])
    w = oracle_exists_witness(c)
    assert w is not None and w.elements() == [0, 3]

    g9 = Group([9])
    c7 = GroupSet.from_elements(g9, range(7))
    assert oracle_exists_witness(c7) is None

    full = GroupSet.full(g)
    assert oracle_exists_witness(full).elements() == [0]

    g1 = Group([])
    assert oracle_exists_witness(GroupSet.full(g1)).elements() == [0]


def test_normalization_preserves_presence():
    # fixing 0 in W loses no witnesses: translation keeps both properties
    for n in (3, 4, 5, 6):
        g = Group([n])
        for cmask in range(1, 1 << n):
            c = GroupSet(g, cmask)
            a = oracle_exists_witness(c)
            b = oracle_exists_witness_unnormalized(c)
            assert (a is None) == (b is None)
    g8 = Group([8])
    rnd = random.Random(5)
    for _ in range(25):
        c = GroupSet(g8, rnd.randrange(1, 1 << 8))
        a = oracle_exists_witness(c)
        b = oracle_exists_witness_unnormalized(c)
        assert (a is None) == (b is None)


def test_supplement_checks():
    g = Group([8])
    c = GroupSet.from_elements(g, [0, 1])
    w = GroupSet.from_elements(g, [0, 2, 4])
    assert oracle_is_supplement(w, c)
    assert oracle_is_maximal_supplement_for(w, c)
    assert not oracle_is_supplement(GroupSet.from_elements(g, [0, 1]), c)
    small = GroupSet.from_elements(g, [0, 2])
    assert oracle_is_supplement(small, c)
    assert not oracle_is_maximal_supplement_for(small, c)
    with pytest.raises(ValueError):
        oracle_is_supplement(GroupSet.empty(g), c)
    assert not oracle_is_maximal_supplement_for(GroupSet.empty(g), c)


def test_maximal_supplement_scan():
    g = Group([8])
    c = GroupSet.from_elements(g, [0, 1])
    w = oracle_maximal_supplement(c)
    assert w is not None and w.elements() == [0, 2, 4]
    g3 = Group([3])
    assert oracle_maximal_supplement(GroupSet.from_elements(g3, [0, 1])) is None
    assert oracle_maximal_supplement(GroupSet.empty(g)) is None


def test_solid_anchors():
    g3 = Group([3])
    solid, d = oracle_solid(GroupSet.from_elements(g3, [0, 1]))
    assert not solid
    assert d == GroupSet.full(g3)

    g5 = Group([5])
    solid, d = oracle_solid(GroupSet.singleton(g5, 2))
    assert solid and d is None

    g8 = Group([8])
    solid, d = oracle_solid(GroupSet.from_elements(g8, [0, 1]))
    assert solid and d is None

    with pytest.raises(ValueError):
        oracle_solid(GroupSet.empty(g8))


def test_diffset_table_z5():
    table = oracle_diffset_table(Group([5]))
    assert len(table) == 4
    g = Group([5])
    v = GroupSet.from_elements(g, [0, 1, 4]).mask
    assert table[v] == GroupSet.from_elements(g, [0, 1]).mask


def test_diffset_table_z8():
    g = Group([8])
    table = oracle_diffset_table(g)
    assert len(table) == 11
    absent = GroupSet.from_elements(g, [0, 1, 4, 7]).mask
    assert absent not in table
    # every recorded realizer actually realizes its key
    from addcomp.oracle import naive_difference_set
    for v, a in table.items():
        assert naive_difference_set(GroupSet(g, a)).mask == v
