import pytest

import normgraph.builders as B
from normgraph import classify


def test_dedekind():
    assert classify.is_dedekind(B.quaternion(8))
    assert classify.is_dedekind(B.cyclic(12))
    assert not classify.is_dedekind(B.dihedral(8))
    assert not classify.is_dedekind(B.mod16())
    assert classify.is_dedekind(B.product(B.quaternion(8), B.cyclic(2)))


@pytest.mark.parametrize(
    "name,kernel,complement",
    [("S3", 3, 2), ("D10", 5, 2), ("F20", 5, 4), ("F21", 7, 3)],
)
def test_frobenius_detection(name, kernel, complement):
    g = B.catalog_group(name)
    data = classify.classify_frobenius(g)
    assert data is not None
    assert len(data.kernel) == kernel
    assert len(data.complement) == complement
    conjugates = data.complement_conjugates()
    assert len(conjugates) == kernel  # one conjugate per kernel element
    assert classify.classify_two_frobenius(g) is None


@pytest.mark.parametrize("name", ["C12", "D8", "Q8", "S3xS3", "Mod16"])
def test_not_frobenius(name):
    assert classify.classify_frobenius(B.catalog_group(name)) is None


def test_two_frobenius_s4():
    data = classify.classify_two_frobenius(B.symmetric(4))
    assert data is not None
    assert len(data.k) == 4 and len(data.kh) == 12 and len(data.h) == 3
    assert len(data.l) == 8
    assert data.x_mask.bit_count() == 9  # 1 + four conjugates of C3 minus identity
    assert classify.two_frob_disconnection_expected(data)  # 3 divides neither 2-1


def test_two_frobenius_294():
    data = classify.classify_two_frobenius(B.two_frob_294())
    assert data is not None
    assert len(data.k) == 49 and len(data.h) == 3
    assert not classify.two_frob_disconnection_expected(data)  # 3 | 7-1
    assert classify.two_frob_refined_bound(data)


def test_a_group():
    assert classify.is_a_group(B.catalog_group("F20"))
    assert classify.is_a_group(B.symmetric(3))
    assert not classify.is_a_group(B.symmetric(4))  # Sylow 2 is dihedral
    assert not classify.is_a_group(B.quaternion(8))


def test_cyclic_by_abelian():
    assert classify.is_cyclic_by_abelian(B.dihedral(14))
    assert classify.is_cyclic_by_abelian(B.cyclic(9))
    assert not classify.is_cyclic_by_abelian(B.symmetric(4))


def test_fitting_predicates():
    assert classify.fitting_is_cyclic(B.dihedral(10))
    assert not classify.fitting_is_cyclic(B.symmetric(4))  # Fit = V4


def test_involutions_commute():
    assert classify.involutions_commute(B.quaternion(8))  # single involution
    assert classify.involutions_commute(B.mod16())
    assert not classify.involutions_commute(B.symmetric(3))


def test_classification_kinds():
    assert classify.classify(B.symmetric(3)).kind() == "frobenius"
    assert classify.classify(B.symmetric(4)).kind() == "2-frobenius"
    assert classify.classify(B.quaternion(8)).kind() == "dedekind"
    assert classify.classify(B.catalog_group("S3xS3")).kind() == "other"
    cls = classify.classify(B.two_frob_294())
    assert cls.kind() == "2-frobenius"
    assert cls.soluble and cls.trivial_center and not cls.nilpotent
    assert cls.fitting_order == 49


def test_classification_flags_mod16():
    cls = classify.classify(B.mod16())
    assert cls.nilpotent and cls.nilpotency_class == 2
    assert cls.supersoluble and cls.cyclic_by_abelian
    assert not cls.dedekind and not cls.trivial_center
