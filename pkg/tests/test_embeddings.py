from fractions import Fraction

import pytest

from nhstab.catalog import T, get_space
from nhstab.embeddings import EmbeddingError, EmbeddingSpec, restriction_from_defining
from nhstab.reductive import SubalgebraSpec
from nhstab.spaces import einstein_check

F = Fraction


@pytest.fixture(scope="module")
def so7_g2():
    return get_space("so7_g2").embedding


def g2w(emb, *w):
    return emb.h.make([w])


def test_so7_g2_branching(so7_g2):
    assert so7_g2.branch((0, 1, 0)) == {g2w(so7_g2, 0, 1): 1, g2w(so7_g2, 1, 0): 1}
    assert so7_g2.branch((1, 0, 0)) == {g2w(so7_g2, 1, 0): 1}
    assert so7_g2.branch((0, 0, 1)) == {g2w(so7_g2, 1, 0): 1, g2w(so7_g2, 0, 0): 1}
    assert so7_g2.branch((0, 0, 0)) == {so7_g2.h.trivial(): 1}


def test_so7_g2_trivial_multiplicity(so7_g2):
    assert so7_g2.trivial_multiplicity((0, 1, 0)) == 0
    assert so7_g2.trivial_multiplicity((0, 0, 0)) == 1
    # V_{2w1} of so(7) is the traceless part of Sym^2 C^7, which restricts to
    # the irreducible 27-dimensional g2-module and carries no invariant
    assert so7_g2.branch((2, 0, 0)) == {g2w(so7_g2, 2, 0): 1}
    assert so7_g2.trivial_multiplicity((2, 0, 0)) == 0
    # the spinor module does contain a g2-invariant
    assert so7_g2.trivial_multiplicity((0, 0, 1)) == 1


def test_so7_g2_hom_dim(so7_g2):
    m = {g2w(so7_g2, 1, 0): 1}
    assert so7_g2.hom_dim((1, 0, 0), m) == 1
    assert so7_g2.hom_dim((0, 1, 0), {g2w(so7_g2, 2, 0): 1}) == 0
    T_ = {so7_g2.h.trivial(): 3, g2w(so7_g2, 1, 0): 1}
    assert so7_g2.hom_dim((0, 0, 0), T_) == 3


def test_so7_g2_metric_constants(so7_g2):
    assert so7_g2.killing_index(0) == F(5, 4)
    assert so7_g2.casimir_h(g2w(so7_g2, 1, 0)) == F(2, 5)
    assert so7_g2.casimir_h(g2w(so7_g2, 2, 0)) == F(14, 15)
    assert so7_g2.casimir_h(so7_g2.h.trivial()) == 0


def test_restriction_from_defining_b3_g2():
    h = SubalgebraSpec((T("G2"),))
    emb = restriction_from_defining(T("B3"), h, [(h.make([(1, 0)]), 1)])
    assert emb.branch((0, 1, 0)) == {h.make([(0, 1)]): 1, h.make([(1, 0)]): 1}


def test_family_ii_and_berger_embeddings():
    h = SubalgebraSpec((T("A2"),))
    emb = restriction_from_defining(T("A5"), h, [(h.make([(2, 0)]), 1)])
    assert emb.h.decomposition_dim(emb.isotropy) == 27
    assert emb.restriction == get_space("family_II_n3").embedding.restriction
    h1 = SubalgebraSpec((T("A1"),))
    berger = restriction_from_defining(T("C2"), h1, [(h1.make([(3,)]), 1)])
    assert berger.isotropy == {h1.make([(6,)]): 1}
    assert einstein_check(get_space("family_II_n3")).einstein_constant == F(23, 60)
    assert einstein_check(get_space("sp2_su2")).einstein_constant == F(9, 20)


def test_torus_constants():
    xia = get_space("family_XIa_n3")
    assert einstein_check(xia).einstein_constant == F(5, 12)
    assert xia.embedding.torus_constant > 0
    xvii = get_space("family_XVIIa_n4")
    assert einstein_check(xvii).einstein_constant == F(1, 3)
    with pytest.raises(EmbeddingError):
        get_space("so7_g2").embedding.torus_constant


def test_bad_embeddings_rejected():
    h = SubalgebraSpec((T("A1"),))
    with pytest.raises(EmbeddingError):
        restriction_from_defining(T("C2"), h, [(h.make([(2,)]), 1)])
    with pytest.raises(EmbeddingError):
        EmbeddingSpec(T("A2"), h, [[1, 0, 0]])


def test_branching_conserves_dimension_on_catalog_samples():
    from nhstab.rootsystem import weyl_dim
    for name in ("f4_so8", "g2_su3", "e6_su3", "family_IV_n3", "family_XIb_k3_n2"):
        emb = get_space(name).embedding
        for gamma in [emb.g.adjoint_weight, emb.g.fundamental(0), emb.g.rho]:
            dec = emb.branch(gamma)
            assert emb.h.decomposition_dim(dec) == weyl_dim(emb.g, gamma)
