import pytest

from nhstab import characters as ch
from nhstab.catalog import T
from nhstab.rootsystem import root_system


def rs(name):
    return root_system(T(name))


@pytest.mark.parametrize("name,lam,mu,mult", [
    ("A2", (1, 1), (0, 0), 2), ("A1", (2,), (2,), 1), ("G2", (1, 0), (0, 0), 1),
    ("A2", (1, 1), (-1, 2), 1), ("G2", (0, 1), (0, 0), 2), ("A1", (2,), (3,), 0),
])
def test_weight_multiplicity(name, lam, mu, mult):
    assert ch.weight_multiplicity(rs(name), lam, mu) == mult


@pytest.mark.parametrize("name,lam,expected", [
    ("A1", (2,), {(2,): 1, (0,): 1}),
    ("A2", (1, 1), {(1, 1): 1, (0, 0): 2}),
    ("B3", (1, 0, 0), {(1, 0, 0): 1, (0, 0, 0): 1}),
])
def test_dominant_character(name, lam, expected):
    assert dict(ch.dominant_character(rs(name), lam)) == expected


def test_decompose_character_examples():
    assert ch.decompose_character(rs("A1"), {(2,): 1, (0,): 2, (-2,): 1}) == {(2,): 1, (0,): 1}
    g2 = rs("G2")
    dom = ch.character_of_decomposition(g2, {(2, 0): 1, (0, 1): 1, (1, 0): 1, (0, 0): 1})
    assert ch.decompose_character(g2, dom) == {(2, 0): 1, (0, 1): 1, (1, 0): 1, (0, 0): 1}
    assert ch.decompose_character(rs("A2"), ch.dominant_character(rs("A2"), (1, 1))) == {(1, 1): 1}


def test_decompose_character_rejects_non_characters():
    with pytest.raises(ch.NotACharacter):
        ch.decompose_character(rs("A2"), {(1, 1): 1, (0, 0): 1})


@pytest.mark.parametrize("name,lam,mu,expected", [
    ("A2", (1, 0), (0, 1), {(1, 1): 1, (0, 0): 1}),
    ("G2", (1, 0), (1, 0), {(2, 0): 1, (0, 1): 1, (1, 0): 1, (0, 0): 1}),
    ("A1", (1,), (2,), {(3,): 1, (1,): 1}),
    ("E6", (1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 1), {(0, 1, 0, 0, 0, 0): 1, (1, 0, 0, 0, 0, 1): 1, (0,) * 6: 1}),
])
def test_tensor_decompose(name, lam, mu, expected):
    assert ch.tensor_decompose(rs(name), lam, mu) == expected


@pytest.mark.parametrize("name,lam,sym,alt", [
    ("A1", (1,), {(2,): 1}, {(0,): 1}),
    ("G2", (1, 0), {(2, 0): 1, (0, 0): 1}, {(0, 1): 1, (1, 0): 1}),
    ("A1", (2,), {(4,): 1, (0,): 1}, {(2,): 1}),
])
def test_sym2_alt2(name, lam, sym, alt):
    assert ch.sym2_decompose(rs(name), lam) == sym
    assert ch.alt2_decompose(rs(name), lam) == alt


def test_sym2_of_module():
    a1 = rs("A1")
    V = (3,)
    twice = ch.sym2_of_module(a1, {V: 2})
    expected = ch.add_into(ch.add_into({}, ch.sym2_decompose(a1, V), 2), ch.tensor_decompose(a1, V, V))
    assert twice == expected
    mixed = ch.sym2_of_module(a1, {(1,): 1, (3,): 1})
    assert mixed == {(2,): 3, (6,): 1, (4,): 1}
    assert ch.sym2_of_module(a1, {(4,): 1}) == ch.sym2_decompose(a1, (4,))
