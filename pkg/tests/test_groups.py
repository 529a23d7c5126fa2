import pytest

from addcomp.groups import (Group, Homomorphism, Subgroup, abelian_groups_of_order,
                            all_subgroups, coset_representatives, cyclic_subgroups,
                            quotient_map, subgroup_generated, unit_multipliers)
from addcomp.sumset import GroupSet


def test_cyclic_arithmetic():
    g = Group([6])
    assert g.add(4, 5) == 3
    assert g.neg(2) == 4
    assert g.neg(0) == 0
    assert g.sub(1, 4) == 3


def test_product_arithmetic():
    g = Group([2, 4])
    # (1,3) + (1,2) = (0,1)
    a = g.index_of([1, 3])
    b = g.index_of([1, 2])
    assert g.coords_of(g.add(a, b)) == (0, 1)
    # -(1,3) = (1,1)
    assert g.coords_of(g.neg(a)) == (1, 1)


def test_index_coord_roundtrip():
    g = Group([3, 4, 5])
    for e in g.elements():
        assert g.index_of(g.coords_of(e)) == e


def test_group_axioms_sampled():
    import random
    rnd = random.Random(0)
    for factors in ([5], [2, 4], [2, 3, 4]):
        g = Group(factors)
        for _ in range(300):
            a, b, c = (rnd.randrange(g.order) for _ in range(3))
            assert g.add(a, b) == g.add(b, a)
            assert g.add(g.add(a, b), c) == g.add(a, g.add(b, c))
            assert g.add(a, g.neg(a)) == 0
            assert g.add(a, 0) == a


def test_element_order():
    g = Group([12])
    assert g.element_order(0) == 1
    assert g.element_order(2) == 6
    assert g.element_order(5) == 12
    h = Group([2, 4])
    assert h.element_order(h.index_of([1, 2])) == 2
    assert h.element_order(h.index_of([0, 1])) == 4


def test_invariant_factors():
    assert Group([12]).invariant_factors() == (12,)
    assert Group([2, 4]).invariant_factors() == (2, 4)
    assert Group([4, 2]).invariant_factors() == (2, 4)
    assert Group([2, 3]).invariant_factors() == (6,)
    assert Group([6, 4]).invariant_factors() == (2, 12)
    assert Group([]).invariant_factors() == ()


def test_trivial_group():
    g = Group([])
    assert g.order == 1
    assert g.is_trivial()
    assert g.add(0, 0) == 0
    assert g.spec_string() == "1"


def test_bad_factor_rejected():
    with pytest.raises(ValueError):
        Group([1, 4])
    with pytest.raises(ValueError):
        Group([0])


def test_subgroup_generated_cyclic():
    g = Group([12])
    h = subgroup_generated(GroupSet.singleton(g, 2))
    assert h.order == 6
    assert h.members.elements() == [0, 2, 4, 6, 8, 10]
    full = subgroup_generated(GroupSet.from_elements(g, [0, 1, 2]))
    assert full.order == 12


def test_subgroup_generated_product():
    g = Group([2, 4])
    e = g.index_of([0, 2])
    h = subgroup_generated(GroupSet.singleton(g, e))
    assert h.order == 2
    assert 0 in h and e in h


def test_subgroup_rejects_non_closed():
    g = Group([6])
    with pytest.raises(ValueError):
        Subgroup(g, GroupSet.from_elements(g, [0, 1]))
    with pytest.raises(ValueError):
        Subgroup(g, GroupSet.from_elements(g, [1, 3, 5]))


def test_coset_representatives_partition():
    g = Group([12])
    h = subgroup_generated(GroupSet.singleton(g, 2))
    reps = coset_representatives(h)
    assert reps.elements() == [0, 1]
    g6 = Group([6])
    h3 = subgroup_generated(GroupSet.singleton(g6, 3))
    assert coset_representatives(h3).elements() == [0, 1, 2]
    # every element is rep + member in exactly one way
    for grp, sub in ((g, h), (g6, h3)):
        reps = coset_representatives(sub)
        seen = set()
        for r in reps:
            for m in sub.members:
                x = grp.add(r, m)
                assert x not in seen
                seen.add(x)
        assert len(seen) == grp.order


def test_quotient_map_cyclic():
    g = Group([12])
    h = subgroup_generated(GroupSet.singleton(g, 4))
    q, pi = quotient_map(g, h)
    assert q.factors == (4,)
    for x in g.elements():
        assert pi.apply(x) == x % 4
    assert pi.kernel() == h


def test_quotient_map_general():
    g = Group([2, 4])
    h = subgroup_generated(GroupSet.singleton(g, g.index_of([0, 2])))
    q, pi = quotient_map(g, h)
    assert q.order == 4
    assert q.invariant_factors() == (2, 2)
    # additive and surjective with kernel h
    for a in g.elements():
        for b in g.elements():
            assert pi.apply(g.add(a, b)) == q.add(pi.apply(a), pi.apply(b))
    assert len({pi.apply(x) for x in g.elements()}) == q.order
    assert pi.kernel() == h


def test_quotient_by_full_and_trivial():
    g = Group([6])
    q, pi = quotient_map(g, Subgroup.full(g))
    assert q.order == 1
    q2, pi2 = quotient_map(g, Subgroup.trivial(g))
    assert q2.order == 6
    assert len({pi2.apply(x) for x in g.elements()}) == 6


def test_homomorphism_validates_images():
    g = Group([4])
    h = Group([8])
    with pytest.raises(ValueError):
        Homomorphism(g, h, [1])  # 1 has order 8, must divide 4
    ok = Homomorphism(g, h, [2])
    assert ok.apply(3) == 6


def test_preimage_and_image():
    g = Group([12])
    h = subgroup_generated(GroupSet.singleton(g, 4))
    q, pi = quotient_map(g, h)
    w = pi.preimage(GroupSet.from_elements(q, [0, 2]))
    assert w.elements() == [0, 2, 4, 6, 8, 10]
    back = pi.image_set(w)
    assert back.elements() == [0, 2]


def test_all_subgroups_counts():
    assert len(all_subgroups(Group([12]))) == 6
    assert len(all_subgroups(Group([2, 2]))) == 5
    assert len(cyclic_subgroups(Group([2, 2]))) == 4
    with pytest.raises(ValueError):
        all_subgroups(Group([100]))


def test_abelian_groups_of_order():
    assert [g.factors for g in abelian_groups_of_order(1)] == [()]
    assert len(abelian_groups_of_order(4)) == 2
    assert len(abelian_groups_of_order(8)) == 3
    assert len(abelian_groups_of_order(12)) == 2
    assert len(abelian_groups_of_order(36)) == 4
    for g in abelian_groups_of_order(36):
        assert g.order == 36


def test_unit_multipliers():
    g = Group([12])
    units = unit_multipliers(g)
    assert units == [1, 5, 7, 11]
