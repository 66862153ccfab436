import numpy as np
import pytest

from normgraph import builders
from normgraph.bitset import bits, mask_of
from normgraph.group import Group, Subgroup, TableError
from conftest import by_word


def test_rejects_non_latin_table():
    with pytest.raises(TableError):
        Group([[0, 1], [1, 1]])


def test_rejects_missing_identity():
    # Latin square in which no row is the identity permutation
    with pytest.raises(TableError):
        Group([[1, 0, 2], [0, 2, 1], [2, 1, 0]])


def test_rejects_non_associative_table():
    # Latin square with identity that is not a group (order 5 loop)
    t = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(TableError, match="associativity"):
        Group(t)


def test_identity_relabeled_to_zero():
    # C3 written with the identity at index 2
    t = [[1, 2, 0], [2, 0, 1], [0, 1, 2]]
    g = Group(t)
    assert g.multiply(0, 1) == 1
    assert sorted(g.element_orders().tolist()) == [1, 3, 3]


def test_element_orders_and_powers():
    g = builders.symmetric(4)
    orders = g.element_orders()
    assert sorted(np.unique(orders).tolist()) == [1, 2, 3, 4]
    for x in range(g.order):
        o = int(orders[x])
        assert g.power(x, o) == 0
        assert g.power(x, 1) == x
        assert g.multiply(x, g.inverse(x)) == 0


def test_cyclic_masks_are_generated_subgroups():
    g = builders.dihedral(12)
    cyc = g.cyclic_masks()
    for x in range(g.order):
        assert cyc[x] == g.closure_mask(1 << x | 1)
        assert cyc[x] >> x & 1 and cyc[x] & 1


def test_conjugate_and_commutator():
    g = builders.symmetric(3)
    r = by_word(g, "(1 2 3)")
    s = by_word(g, "(1 2)")
    assert g.conjugate(r, s) == by_word(g, "(1 3 2)")
    assert g.commutator(r, r) == 0
    assert g.commutator(s, r) != 0


def test_centralizer_and_normalizer():
    g = builders.symmetric(3)
    r = by_word(g, "(1 2 3)")
    s = by_word(g, "(1 2)")
    assert g.centralizer(s).mask == mask_of([0, s])
    rot = g.cyclic_masks()[r]
    assert g.normalizer_mask(rot) == g.full_mask()  # index-2 subgroup
    assert g.normalizer_of_cyclic(s).mask == mask_of([0, s])


def test_subgroup_operations():
    g = builders.symmetric(4)
    cyc = g.cyclic_masks()
    four = next(x for x in range(g.order) if g.element_order(x) == 4)
    h = Subgroup(g, cyc[four])
    assert len(h) == 4
    assert not h.is_normal()
    k = h.join(Subgroup(g, cyc[by_word(g, "(1 2)(3 4)")]))
    assert len(k) == 8  # a Sylow 2-subgroup
    assert h.intersect(k).mask == h.mask
    sub, mem = h.as_group()
    assert sub.order == 4
    assert sorted(sub.element_orders().tolist()) == [1, 2, 4, 4]
    assert all(g.element_order(int(mem[i])) == sub.element_order(i) for i in range(4))


def test_p_component_decomposition():
    g = builders.cyclic(12)
    x = 1  # generator, order 12
    x3 = g.p_component(x, 3)
    x2 = g.p_component(x, 2)
    assert g.element_order(x3) == 3
    assert g.element_order(x2) == 4
    assert g.multiply(x3, x2) == x
