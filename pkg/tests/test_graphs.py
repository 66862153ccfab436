import normgraph.builders as B
from normgraph import graphs, structure
from normgraph.bitset import bits, mask_of
from normgraph.group import Subgroup
from conftest import by_word, mask_from_words


def test_s3_in_neighbourhood_exact():
    g = B.symmetric(3)
    s = by_word(g, "(1 2)")
    expected = mask_from_words(g, ["e", "(1 2)", "(1 2 3)", "(1 3 2)"])
    assert graphs.in_neighbors(g, s) == expected


def test_arrow_semantics():
    g = B.symmetric(3)
    r, s = by_word(g, "(1 2 3)"), by_word(g, "(1 2)")
    assert graphs.arrow(g, r, s)  # s normalizes <r> = A3
    assert not graphs.arrow(g, s, r)


def test_in_neighbours_can_exceed_centralizer_and_normal_part():
    # (3 4) normalizes <(2 4 3)>, so (2 4 3) is an in-neighbour of (3 4)
    # without commuting with it or generating a normal subgroup
    g = B.symmetric(4)
    x = by_word(g, "(3 4)")
    y = by_word(g, "(2 4 3)")
    col = graphs.in_neighbors(g, x)
    assert col >> y & 1
    assert g.conjugate(x, y) != x  # y not in the centralizer
    assert not Subgroup(g, g.cyclic_masks()[y]).is_normal()


def test_univ_sets_mod16():
    g = B.mod16()
    rep = graphs.univ_sets(g)
    assert rep.univ_mask == mask_from_words(g, ["1", "x^2", "x^4", "x^6", "x^2y", "x^6y"])
    assert not rep.is_subgroup
    assert len(rep.plus) == 8
    assert rep.minus_mask.bit_count() == 14
    assert not rep.equals_center and not rep.equals_second_center


def test_univ_sets_dedekind_group():
    g = B.quaternion(8)
    rep = graphs.univ_sets(g)
    assert rep.univ_mask == g.full_mask()
    assert rep.is_subgroup and rep.equals_second_center


def test_gamma_delta_shapes():
    g = B.symmetric(3)
    gamma = graphs.gamma_norm(g)
    delta = graphs.delta_norm(g)
    assert gamma.n_vertices == 6
    assert delta.n_vertices == 5  # univ = {1}
    assert not gamma.is_complete()
    assert delta.scc.count == 4
    assert sorted(delta.scc.sizes()) == [1, 1, 1, 2]
    assert sorted(delta.scc.component_diameters) == [0, 0, 0, 1]


def test_s4_delta_components():
    delta = graphs.delta_norm(B.symmetric(4))
    dec = delta.scc
    assert sorted(dec.sizes(), reverse=True) == [15, 2, 2, 2, 2]
    pairs = sorted(zip(dec.sizes(), dec.component_diameters), reverse=True)
    assert pairs == [(15, 3), (2, 1), (2, 1), (2, 1), (2, 1)]


def test_commuting_graph():
    g = B.symmetric(3)
    comm = graphs.commuting_graph(g)
    assert comm.n_vertices == 5
    assert comm.is_symmetric
    assert comm.arc_count() == 2  # only the two rotations commute


def test_nilpotent_graph_contains_commuting_pairs():
    g = B.symmetric(4)
    comm = graphs.commuting_graph(g)
    nil = graphs.nilpotent_graph(g)
    pos = {lbl: i for i, lbl in enumerate(nil.labels)}
    for i, lbl in enumerate(comm.labels):
        for j in bits(comm.out_masks[i]):
            assert nil.out_masks[pos[lbl]] >> pos[comm.labels[j]] & 1


def test_supersolubility_graph_complete_for_supersoluble():
    g = B.dihedral(16)
    ssol = graphs.supersolubility_graph(g)
    assert ssol.is_complete()
    s4 = graphs.supersolubility_graph(B.symmetric(4))
    assert not s4.is_complete()


def test_element_digraph_dispatch():
    g = B.symmetric(3)
    for kind in graphs.GRAPH_KINDS:
        d = graphs.element_digraph(g, kind)
        assert d.n_vertices > 0
    assert graphs.element_digraph(g, "gamma") is graphs.element_digraph(g, "gamma")
