from fractions import Fraction

import pytest

from nhstab.catalog import get_space
from nhstab.rootsystem import casimir_normalized, weyl_dim
from nhstab.stability import (
    POTENTIAL_INSTABILITY,
    RULED_OUT_NO_TT,
    SUMMARY_SC,
    SUMMARY_UNSTABLE,
    StabilityAnalysis,
    analyze,
    crude_cutoff_value,
    crude_holds,
)

from oracles import dominant_box

F = Fraction


@pytest.fixture(scope="module")
def so7():
    return StabilityAnalysis(get_space("so7_g2"))


def test_sym2_isotypes_so7_g2(so7):
    m_iso, g_iso = so7.sym2_isotypes()
    assert m_iso == [so7.h.make([(2, 0)])]
    # Sym^2 of the 21-dimensional adjoint of so(7) minus the invariant
    assert sum(m * weyl_dim(so7.g, w) for w, m in so7.sym2_g.items()) == 230
    assert set(g_iso) == {(0, 2, 0), (2, 0, 0), (0, 0, 2)}


@pytest.mark.parametrize("name", ["g2_su3", "e8_su9", "so7_g2"])
def test_curvature_safe_spaces(name):
    a = StabilityAnalysis(get_space(name))
    assert all(b.curvature_safe for b in a.bounds)
    assert analyze(get_space(name)).summary == SUMMARY_SC


def test_crude_cutoff_symmetric_limit():
    E, a = F(1, 2), F(1, 3)
    assert crude_cutoff_value(a, F(0), F(0), E) == 2 * E - a


@pytest.mark.parametrize("name", ["so7_g2", "sp2_su2", "f4_so8", "family_IV_n3"])
def test_crude_cutoff_flips_once(name):
    a_ = StabilityAnalysis(get_space(name))
    a, b, c = a_.crude_parameters
    C = a_.cutoff
    step = F(1, 97)
    xs = [C + k * step for k in range(1, 400)]
    assert all(crude_holds(x, a, b, c, a_.E) for x in xs)
    below = [F(k, 97) for k in range(0, int(C * 97) - 1)]
    # once the estimate fails below C, it keeps failing down to C - 1e-6 rounding
    flips = sum(1 for x, y in zip(below, below[1:]) if crude_holds(x, a, b, c, a_.E) != crude_holds(y, a, b, c, a_.E))
    assert flips <= 1


def test_candidate_modes_match_box(so7):
    C = so7.cutoff
    modes = so7.candidate_modes()
    assert set(modes) == dominant_box(so7.g, C)
    assert so7.g.zero in modes
    if C >= 1:
        assert so7.g.adjoint_weight in modes
    cas = [casimir_normalized(so7.g, m) for m in modes]
    assert cas == sorted(cas)


def test_tt_difference_adjoint_so7_g2(so7):
    ad = so7.g.adjoint_weight
    assert so7.tt_difference(ad) == -1
    # the quotient is a round space form, so the criterion itself is withheld
    with pytest.raises(ValueError):
        so7.tt_check(ad)


def test_tt_check_eliminates_adjoint_on_non_sphere():
    a = StabilityAnalysis(get_space("sp2_su2"))
    assert a.tt_difference(a.g.adjoint_weight) == -1
    assert a.tt_check(a.g.adjoint_weight)


def test_tt_check_refuses_spheres():
    a = StabilityAnalysis(get_space("g2_su3"))
    assert a.space.sphere
    with pytest.raises(ValueError):
        a.tt_check(a.g.adjoint_weight)


def test_berger_space():
    r = analyze(get_space("sp2_su2"))
    assert r.summary == SUMMARY_UNSTABLE
    assert sorted(r.instabilities) == sorted([(0, 1), (0, 2), (2, 1), (4, 0)])
    assert r.einstein.einstein_constant == F(9, 20)


def test_so14_g2():
    r = analyze(get_space("so14_g2"))
    assert r.einstein.einstein_constant == F(1, 3)
    assert r.instabilities == [(2, 0, 0, 0, 0, 0, 0)]


def test_mode_cascade_is_consistent():
    a = StabilityAnalysis(get_space("family_IV_n3"))
    r = a.run()
    two_e = 2 * a.E
    for m in r.modes:
        if m.verdict == POTENTIAL_INSTABILITY:
            assert m.bound < two_e
        if m.verdict == RULED_OUT_NO_TT:
            assert m.hom_sym - m.hom_m == (-1 if m.gamma == a.g.adjoint_weight else 0)
        if m.bound is not None:
            assert m.bound == a.refined_bound(m.gamma)


def test_parallel_run_matches_serial():
    s = get_space("g2_su2")
    assert analyze(s, jobs=2).modes == analyze(s, jobs=1).modes


def test_max_modes_marks_partial():
    r = analyze(get_space("f4_so8"), max_modes=2)
    assert r.partial and len(r.modes) == 2
