import pytest

from nhstab.catalog import g_rank, get_space
from nhstab.goldens import (
    apply_perm,
    closure,
    diagram_automorphisms,
    expected_modes,
    format_weight,
    golden_row,
    golden_rows,
    parse_weight,
    parse_weights,
)
from nhstab.verify import check_row

# rows whose computed mode lists differ from the published ones; each is
# explained in the accompanying notes and kept here as a strict xfail
MODE_DISCREPANCIES = {
    "f4_2su3": "w2 has refined bound exactly 2E, so it is reported as semistable",
    "f4_su2_g2": "w3 has refined bound exactly 2E, so it is reported as semistable",
    "family_XIX_S3_SO5": "w1 carries no Fourier coefficient in Sym^2 m; w2 appears instead",
}


def test_parse_and_format_weights():
    assert parse_weight("2w1+w3", 4) == (2, 0, 1, 0)
    assert parse_weight("0", 3) == (0, 0, 0)
    assert parse_weights("w2, 2w2, 2w1+w2, 4w1", 2) == [(0, 1), (0, 2), (2, 1), (4, 0)]
    assert format_weight((2, 0, 1, 0)) == "2w1+w3"
    assert format_weight((0, 0)) == "0"
    with pytest.raises(ValueError):
        parse_weight("w5", 4)
    with pytest.raises(ValueError):
        parse_weight("3x1", 2)


def test_diagram_automorphisms():
    assert len(diagram_automorphisms("D", 4)) == 6
    assert diagram_automorphisms("A", 3)[1] == (2, 1, 0)
    assert diagram_automorphisms("B", 3) == [(0, 1, 2)]
    assert apply_perm((2, 1, 0), (1, 0, 3)) == (3, 0, 1)


def test_closures():
    assert closure([(1, 0, 0, 0)], "D4", "D", 4) == {(1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)}
    assert closure([(1, 2)], "A", "A", 2) == {(1, 2), (2, 1)}
    assert closure([(1, 2)], None, "A", 2) == {(1, 2)}
    with pytest.raises(ValueError):
        closure([(1, 0, 0)], "D4", "B", 3)


def test_rows_resolve_to_catalog_spaces():
    rows = golden_rows()
    assert len({(r.space, r.table) for r in rows}) == len(rows)
    for r in rows:
        assert g_rank(r.space) >= 1
    row = golden_row("family_IV_n3")
    assert row.table == 5
    un, semi = expected_modes(row, 3)
    assert set(un) == {(0, 1, 0), (1, 0, 1), (0, 2, 0), (2, 1, 0), (4, 0, 0), (1, 1, 1), (3, 0, 1)}
    assert semi == []


SMALL = [r for r in golden_rows() if g_rank(r.space) <= 6]


@pytest.mark.parametrize("row", SMALL, ids=[f"{r.table}-{r.space}" for r in SMALL])
def test_small_rank_rows(row):
    if row.space in MODE_DISCREPANCIES:
        pytest.xfail(MODE_DISCREPANCIES[row.space])
    check = check_row(row, check_e=False)
    assert check.ok, check.diffs


@pytest.mark.parametrize("name", sorted(MODE_DISCREPANCIES))
def test_known_mode_discrepancies_persist(name):
    check = check_row(golden_row(name), check_e=False)
    assert not check.ok
