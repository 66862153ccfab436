import pytest

import normgraph.builders as B
from normgraph import structure
from normgraph.bitset import bits
from normgraph.group import Subgroup


def test_conjugacy_classes_partition():
    g = B.symmetric(4)
    classes = structure.conjugacy_classes(g)
    assert sorted(m.bit_count() for m in classes) == [1, 3, 6, 6, 8]
    seen = 0
    for m in classes:
        assert seen & m == 0
        seen |= m
    assert seen == g.full_mask()


def test_center_and_upper_series():
    d8 = B.dihedral(8)
    ucs = structure.upper_central_series(d8)
    assert [len(s) for s in ucs] == [2, 8]
    assert structure.nilpotency_class(d8) == 2
    mod16 = B.mod16()
    assert len(structure.center(mod16)) == 4
    assert structure.second_center(mod16).mask == mod16.full_mask()
    assert structure.nilpotency_class(mod16) == 2


def test_derived_and_lower_series():
    s4 = B.symmetric(4)
    ds = structure.derived_series(s4)
    assert [len(s) for s in ds] == [24, 12, 4, 1]
    assert structure.is_soluble(s4)
    assert not structure.is_nilpotent(s4)
    assert not structure.is_soluble(B.symmetric(5))
    lcs = structure.lower_central_series(s4)
    assert len(lcs[-1]) == 12  # stabilizes at A4


def test_normal_subgroups():
    s4 = B.symmetric(4)
    sizes = sorted(len(n) for n in structure.normal_subgroups(s4))
    assert sizes == [1, 4, 12, 24]
    q8 = B.quaternion(8)
    assert len(structure.normal_subgroups(q8)) == 6  # every subgroup is normal


def test_quotient():
    s4 = B.symmetric(4)
    v4 = next(n for n in structure.normal_subgroups(s4) if len(n) == 4)
    q, proj = structure.quotient_group(s4, v4)
    assert q.order == 6
    assert len(structure.center(q)) == 1  # S4/V4 is the nonabelian order-6 group
    for a in range(24):
        for b in (0, 5, 17):
            assert proj[s4.table[a, b]] == q.table[proj[a], proj[b]]


def test_sylow_and_fitting():
    s4 = B.symmetric(4)
    assert len(structure.sylow_subgroup(s4, 2)) == 8
    assert len(structure.sylow_subgroup(s4, 3)) == 3
    assert len(structure.p_core(s4, 2)) == 4
    assert len(structure.p_core(s4, 3)) == 1
    assert len(structure.fitting_subgroup(s4)) == 4
    g294 = B.two_frob_294()
    assert len(structure.fitting_subgroup(g294)) == 49
    d12 = B.dihedral(12)
    assert len(structure.fitting_subgroup(d12)) == 6


def test_supersolubility():
    assert structure.is_supersoluble(B.symmetric(3))
    assert structure.is_supersoluble(B.dihedral(16))
    assert structure.is_supersoluble(B.mod16())
    assert not structure.is_supersoluble(B.symmetric(4))
    assert not structure.is_supersoluble(B.symmetric(5))


def test_subgroup_predicates():
    s4 = B.symmetric(4)
    syl2 = structure.sylow_subgroup(s4, 2)
    assert structure.subgroup_nilpotent(s4, syl2.mask)
    a4 = next(n for n in structure.normal_subgroups(s4) if len(n) == 12)
    assert not structure.subgroup_supersoluble(s4, a4.mask)
    assert structure.subgroup_supersoluble(s4, syl2.mask)
