from fractions import Fraction

import pytest

from nhstab.catalog import T
from nhstab.rootsystem import (
    InvalidLieType,
    NotDominant,
    casimir_normalized,
    dominant_weights_up_to,
    dual_weight,
    raw_casimir,
    root_system,
    weyl_dim,
    weyl_group_order,
)

F = Fraction


def rs(name):
    return root_system(T(name))


def test_a1_tables():
    a1 = rs("A1")
    assert a1.cartan == ((2,),)
    assert a1.cartan_inv == ((F(1, 2),),)
    assert a1.gram == ((F(1, 2),),)
    assert a1.adjoint_weight == (2,)


def test_g2_tables():
    g2 = rs("G2")
    assert g2.cartan == ((2, -1), (-3, 2))
    assert g2.root_lengths == (1, 3)
    assert g2.gram == ((2, 3), (3, 6))
    assert g2.adjoint_weight == (0, 1)


def test_b3_roots_and_adjoint():
    b3 = rs("B3")
    assert b3.adjoint_weight == (0, 1, 0)
    assert len(b3.positive_roots) == 9


@pytest.mark.parametrize("name,lam,raw,norm", [
    ("A1", (1,), F(3, 2), F(3, 8)),
    ("G2", (1, 0), F(12), F(1, 2)),
    ("B3", (0, 1, 0), None, F(1)),
    ("E8", (0,) * 8, F(0), F(0)),
])
def test_casimir_examples(name, lam, raw, norm):
    r = rs(name)
    if raw is not None:
        assert raw_casimir(r, lam) == raw
    assert casimir_normalized(r, lam) == norm


@pytest.mark.parametrize("name,lam,dim", [
    ("A2", (1, 0), 3), ("A2", (1, 1), 8), ("G2", (0, 1), 14), ("G2", (1, 0), 7),
    ("E8", (0, 0, 0, 0, 0, 0, 0, 1), 248), ("F4", (0, 0, 0, 1), 26), ("E6", (1, 0, 0, 0, 0, 0), 27),
    ("D4", (0, 0, 0, 1), 8), ("C3", (0, 1, 0), 14),
])
def test_weyl_dim(name, lam, dim):
    assert weyl_dim(rs(name), lam) == dim


@pytest.mark.parametrize("name,lam,dual", [
    ("A2", (1, 0), (0, 1)), ("B3", (0, 0, 1), (0, 0, 1)), ("A3", (1, 2, 0), (0, 2, 1)),
    ("D5", (0, 0, 0, 1, 0), (0, 0, 0, 0, 1)), ("E6", (1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 1)),
])
def test_dual_weight(name, lam, dual):
    assert dual_weight(rs(name), lam) == dual


def test_dominant_weights_up_to_examples():
    assert dominant_weights_up_to(rs("A1"), 1) == {(0,), (1,), (2,)}
    assert dominant_weights_up_to(rs("B4"), 0) == {(0, 0, 0, 0)}
    assert dominant_weights_up_to(rs("G2"), F(1, 2)) == {(0, 0), (1, 0)}
    assert dominant_weights_up_to(rs("G2"), -1) == set()


@pytest.mark.parametrize("name,order", [("A3", 24), ("B3", 48), ("G2", 12), ("F4", 1152), ("E6", 51840)])
def test_weyl_group_order(name, order):
    assert weyl_group_order(rs(name)) == order


def test_invalid_types_and_weights():
    with pytest.raises(InvalidLieType):
        T("E9")
    for bad in ("D2", "B1", "F3", "G3", "X2"):
        with pytest.raises(InvalidLieType):
            T(bad)
    with pytest.raises(NotDominant):
        casimir_normalized(rs("A2"), (1, -1))
