"""Published stability results used as regression data.

Each row names a catalog space and lists its potential instabilities split
into modes with a bound strictly below 2E and modes with a bound equal to 2E
(``semistable``). ``closure`` is ``"A"`` for the duality of A_r and ``"D4"``
for the triality of D4, applied to the listed modes before comparison.
``note`` is the algorithmic summary ("SC", "SF", "SF0" or "") and
``external`` records that a listed row was settled by an outside argument.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Sequence

from .catalog import family_space_name, xix_name


@dataclass(frozen=True)
class GoldenRow:
    space: str
    table: int
    unstable: str = ""
    semistable: str = ""
    note: str = ""
    closure: str | None = None
    external: str = ""
    extra: dict = field(default_factory=dict, compare=False, hash=False)


_TERM = re.compile(r"^(\d*)w(\d+)$")


def parse_weight(text: str, rank: int) -> tuple[int, ...]:
    """'2w1+w3' -> (2, 0, 1, ...) in fundamental-weight coordinates."""
    out = [0] * rank
    text = text.replace(" ", "")
    if text == "0":
        return tuple(out)
    for term in text.split("+"):
        m = _TERM.match(term)
        if m is None:
            raise ValueError(f"cannot parse weight term {term!r}")
        k = int(m.group(1) or 1)
        i = int(m.group(2))
        if not 1 <= i <= rank:
            raise ValueError(f"w{i} out of range for rank {rank}")
        out[i - 1] += k
    return tuple(out)


def parse_weights(text: str, rank: int) -> list[tuple[int, ...]]:
    return [parse_weight(t, rank) for t in text.split(",") if t.strip()]


def format_weight(w: Sequence[int]) -> str:
    terms = [f"{'' if k == 1 else k}w{i + 1}" for i, k in enumerate(w) if k]
    return "+".join(terms) if terms else "0"


# symmetry closures --------------------------------------------------------

def diagram_automorphisms(series: str, rank: int) -> list[tuple[int, ...]]:
    """Permutations of fundamental-weight indices induced by diagram symmetries."""
    ident = tuple(range(rank))
    if series == "A" and rank > 1:
        return [ident, tuple(reversed(ident))]
    if series == "D" and rank == 4:
        out = []
        for p in permutations((0, 2, 3)):
            perm = [0, 1, 0, 0]
            for src, dst in zip((0, 2, 3), p):
                perm[src] = dst
            out.append(tuple(perm))
        return out
    if series == "D" and rank > 4:
        return [ident, ident[:-2] + (rank - 1, rank - 2)]
    if series == "E" and rank == 6:
        return [ident, (5, 1, 4, 3, 2, 0)]
    return [ident]


def apply_perm(perm: Sequence[int], w: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(w)
    for i, k in enumerate(w):
        out[perm[i]] = k
    return tuple(out)


def closure(weights: Iterable[Sequence[int]], kind: str | None, series: str, rank: int) -> frozenset:
    weights = [tuple(w) for w in weights]
    if kind is None:
        return frozenset(weights)
    if kind == "A" and series != "A":
        raise ValueError("duality closure needs type A")
    if kind == "D4" and (series, rank) != ("D", 4):
        raise ValueError("triality closure needs type D4")
    perms = diagram_automorphisms(series, rank)
    return frozenset(apply_perm(p, w) for w in weights for p in perms)


# rows ---------------------------------------------------------------------

def _fam(family: str, params, table: int, unstable="", semistable="", note="", closure=None, external=""):
    params = params if isinstance(params, tuple) else (params,)
    return GoldenRow(family_space_name(family, params), table, unstable, semistable, note, closure, external)


def _table3():
    rows = [
        ("su16_so10", "w1+w15", "", ""),
        ("su27_e6", "", "w1+w26", "SF0"),
        ("so7_g2", "", "", "SC"),
        ("so133_e7", "", "", "SF"),
        ("sp2_su2", "w2, 2w2, 2w1+w2, 4w1", "", ""),
        ("sp7_sp3", "w2", "", ""),
        ("sp10_su6", "w2", "", ""),
        ("sp16_so12", "w2", "", ""),
        ("sp28_e7", "", "", "SF"),
        ("so14_g2", "2w1", "", ""),
        ("so16_so9", "2w1, w4", "", ""),
        ("so26_f4", "w1, 2w1", "", ""),
        ("so42_sp4", "", "", "SF"),
        ("so52_f4", "", "", "SF"),
        ("so70_su8", "", "", "SF"),
        ("so78_e6", "", "", "SF"),
        ("so128_so16", "", "", "SF"),
        ("so248_e8", "", "", "SF"),
    ]
    return [GoldenRow(n, 3, u, s, note) for n, u, s, note in rows]


def _table4():
    rows = [
        ("e6_su3", "", "SC"),
        ("e6_3su3", "w2, w1+w6", ""),
        ("e6_g2", "", "SC"),
        ("e6_su3_g2", "w2, w1+w6", ""),
        ("e7_su3", "", "SC"),
        ("e7_su6_su3", "w1, w6", ""),
        ("e7_g2_sp3", "", "SF"),
        ("e7_su2_f4", "w6", ""),
        ("e8_su9", "", "SC"),
        ("e8_e6_su3", "", "SF"),
        ("e8_g2_f4", "", "SF"),
        ("f4_2su3", "w4, w1, w3, 2w4", ""),
        ("f4_su2_g2", "w4, 2w4, w1+w4", ""),
        ("g2_su2", "2w1, w1+w2, 2w2", ""),
        ("g2_su3", "", "SC"),
    ]
    return [GoldenRow(n, 4, u, "", note) for n, u, note in rows]


def _table6():
    return [
        GoldenRow("so8_g2", 6, "0, w1, w1+w3, 2w1, w1+w2", "w1+w3+w4, 2w1+w3", closure="D4"),
        GoldenRow("so26_sp1_sp5_so6", 6, "0, 2w1"),
        GoldenRow("f4_so8", 6, "0, w4, w3, 2w4", "w3+w4"),
        GoldenRow("e6_3su2", 6, "0", external="SF0"),
        GoldenRow("e6_su2_so6", 6, "0, w2"),
        GoldenRow("e6_so8_r2", 6, "0, w2, w1+w6", "w4"),
        GoldenRow("e6_r6", 6, note="SC"),
        GoldenRow("e7_7su2", 6, "0", external="SF"),
        GoldenRow("e7_so8", 6, note="SC"),
        GoldenRow("e7_3su2_so8", 6, "0"),
        GoldenRow("e7_r7", 6, note="SC"),
        GoldenRow("e8_8su2", 6, note="SC"),
        GoldenRow("e8_4su3", 6, note="SC"),
        GoldenRow("e8_4su2", 6, note="SC"),
        GoldenRow("e8_2su3", 6, note="SC"),
        GoldenRow("e8_2su5", 6, "0", external="SF"),
        GoldenRow("e8_so9_su9", 6, note="SC"),
        GoldenRow("e8_so9_so16", 6, note="SC"),
        GoldenRow("e8_2so8", 6, "0", external="SF"),
        GoldenRow("e8_so5", 6, note="SC"),
        GoldenRow("e8_2sp2", 6, note="SC"),
        GoldenRow("e8_r8", 6, note="SC"),
    ]


def _pairs(lo, hi, pred):
    return [(p, q) for p in range(lo, hi + 1) for q in range(p, hi + 1) if pred(p, q)]


def _table5():
    rows = []
    add = rows.append
    for n in (5, 6, 7):
        add(_fam("I", n, 5, "w1+w{r}"))
    for n in range(8, 12):
        add(_fam("I", n, 5, note="SF"))
    add(_fam("II", 3, 5, "w1+w5, w1+w2, w2+w4, 3w1", closure="A"))
    for n in (4, 5):
        add(_fam("II", n, 5, "w1+w{r}"))
    for n in (6, 7, 8):
        add(_fam("II", n, 5, note="SF"))
    add(_fam("III", (2, 3), 5, "w1+w5, w2+w4, 2w1+w4, 2w1+2w5", closure="A"))
    add(_fam("III", (2, 4), 5, "w1+w7, w4, w1+w3, w2+w6, 2w2", closure="A"))
    add(_fam("III", (3, 3), 5, "w1+w8, w3, w1+w2", closure="A"))
    add(_fam("III", (2, 5), 5, "w1+w9, w2+w8"))
    one = set(_pairs(2, 22, lambda p, q: 12 <= p * q <= 22))
    one |= {(2, q) for q in range(12, 21)} | {(3, q) for q in range(8, 12)}
    for p, q in sorted(one):
        add(_fam("III", (p, q), 5, "w1+w{r}"))
    sf = {(3, q) for q in range(12, 17)} | set(_pairs(4, 49, lambda p, q: 24 <= p * q <= 49))
    for p, q in sorted(sf):
        add(_fam("III", (p, q), 5, note="SF"))
    add(_fam("IV", 3, 5, "w2, w1+w3, 2w2, 2w1+w2, 4w1, w1+w2+w3, 3w1+w3"))
    add(_fam("IV", 4, 5, "w2, w1+w3, 2w2, 2w1+w2, 4w1", "w2+w4, 2w1+w4"))
    add(_fam("IV", 5, 5, "w2, w1+w3, 2w2, 4w1"))
    add(_fam("IV", 6, 5, "w2, 2w2"))
    for n in range(7, 101):
        add(_fam("IV", n, 5, "w2"))
    add(_fam("V", 3, 5, "w1, w1+w3, 2w1, w1+w2, w1+w3+w4, 2w1+w3", "2w2", closure="D4"))
    add(_fam("V", 4, 5, "w1, 2w1", "w2"))
    for n in range(5, 19):
        add(_fam("V", n, 5, "w1"))
    add(_fam("VI", 3, 5, "w1, 2w1"))
    for n in range(4, 12):
        add(_fam("VI", n, 5, "w1"))
    add(_fam("VII", 2, 5, "2w1, w3, w4+w5, w1+w2"))
    for n in range(3, 14):
        add(_fam("VII", n, 5, note="SF"))
    add(_fam("VIII", 2, 5, "2w4, w2+w4, 2w2"))
    add(_fam("VIII", 3, 5, "2w1, w4, 2w2"))
    add(_fam("VIII", 4, 5, "2w1, w1+w7, w4"))
    for n in range(5, 76):
        add(_fam("VIII", n, 5, "2w1"))
    for n in range(7, 28):
        add(_fam("IX", n, 5, note="SF"))
    for n in range(5, 23):
        add(_fam("X", n, 5, "w1"))
    return rows


def _table7():
    rows = []
    add = rows.append
    add(_fam("XIa", 3, 7, "0, w1+w2, 3w1, 2w1+2w2", closure="A"))
    add(_fam("XIa", 4, 7, "0, w1+w3, 2w2, 2w1+w2, 2w1+2w3", closure="A"))
    add(_fam("XIa", 5, 7, "0, w1+w4, w2+w3", "2w1+w3", closure="A"))
    for n in (6, 7, 8, 9):
        add(_fam("XIa", n, 7, "0, w1+w{r}"))
    add(_fam("XIb", (3, 2), 7, "0, w1+w5, w2+w4, 2w3, 2w1+w4, 2w1+2w5", closure="A"))
    add(_fam("XIb", (4, 2), 7, "0, w1+w7", "w2+w6"))
    add(_fam("XIb", (3, 3), 7, "0, w1+w8, w2+w7, 2w1+w7", "2w1+2w8", closure="A"))
    add(_fam("XIb", (5, 2), 7, "0, w1+w9"))
    add(_fam("XIb", (3, 4), 7, "0, w1+w11, w2+w10", "2w1+w10", closure="A"))
    for kn in ((4, 3), (6, 2)):
        add(_fam("XIb", kn, 7, "0, w1+w11"))
    add(_fam("XII", (2, 5), 7, "0, w1+w12"))
    xiii = {
        (3, 1): ("0, w2, 2w1, w1+w3, 2w2, 2w1+w2", ""),
        (4, 1): ("0, w2, 2w1, w4, w1+w3, 2w2", ""),
        (5, 1): ("0, w2, 2w1, w4, w1+w3", ""),
        (6, 1): ("0, w2, 2w1, w4", ""),
        (3, 2): ("0, w2, 2w1, w4, w1+w3, w6, 2w2", ""),
        (4, 2): ("0, w2, 2w1, w4", ""),
        (3, 3): ("0, w2, 2w1, w4, w1+w3, 2w2", ""),
        (10, 1): ("0, w2", "2w1"),
        (11, 1): ("0, w2", ""),
        (3, 4): ("0, w2, 2w1, w4, w1+w3", ""),
    }
    for kn in ((7, 1), (8, 1), (9, 1), (5, 2), (6, 2), (4, 3), (7, 2), (5, 3), (3, 5), (8, 2), (4, 4),
               (6, 3), (3, 6)):
        xiii[kn] = ("0, w2, 2w1", "")
    for kn, (u, s) in xiii.items():
        add(_fam("XIII", kn, 7, u, s))
    xiv = {
        1: ("0, w2, 2w1, 2w2, 2w1+w2, 4w1, 3w2, 2w1+2w2", ""),
        2: ("0, w2, 2w1, w4, w1+w3, 2w2, 2w1+w2, w1+w5, 4w1", "w2+w4, 2w1+w4"),
        3: ("0, w2, 2w1, w4, w1+w3, 2w2, 2w1+w2, 4w1", "w6"),
        4: ("0, w2, 2w1, w4, w1+w3, 2w2, 2w1+w2", "4w1"),
        5: ("0, w2, 2w1, w4, w1+w3", "2w2, 2w1+w2"),
        6: ("0, w2, 2w1, w4", "w1+w3"),
        7: ("0, w2, 2w1", "w4"),
        8: ("0, w2, 2w1", ""),
        9: ("0, w2, 2w1", ""),
        10: ("0, w2, 2w1", ""),
    }
    for n, (u, s) in xiv.items():
        add(_fam("XIV", n, 7, u, s))
    return rows


def _table8():
    rows = []
    add = rows.append
    add(_fam("XV", 2, 8, "0, 2w1"))
    for n in range(3, 10):
        add(_fam("XV", n, 8, note="SF"))
    add(_fam("XVI", 3, 8, "0, w1, 2w1, w3, 2w4"))
    for n in range(4, 17):
        add(_fam("XVI", n, 8, note="SF"))
    add(_fam("XVIIa", 4, 8, "0, w2, 2w1, 2w3, 2w4"))
    add(_fam("XVIIa", 5, 8, "0, w2", "2w1"))
    for n in (6, 7):
        add(_fam("XVIIa", n, 8, "0", external="SF0"))
    add(_fam("XVIIb", (3, 3), 8, "0, w2, 2w1, w3, 2w4, w1+w2"))
    add(_fam("XVIIb", (3, 4), 8, "0, w2, 2w1, w4"))
    add(_fam("XVIIb", (6, 3), 8, "0", "w2"))
    add(_fam("XVIIb", (6, 4), 8, "0, w2", "2w1"))
    mid = {(4, 3), (5, 3), (4, 4), (5, 4)} | {(k, 5) for k in range(3, 7)}
    mid |= {(k, n) for n in range(6, 41) for k in range(3, 41) if k * n <= 40}
    for kn in sorted(mid):
        add(_fam("XVIIb", kn, 8, "0, w2, 2w1"))
    for kn in ((7, 3), (8, 3), (9, 3), (7, 4), (10, 3), (7, 5)):
        add(_fam("XVIIb", kn, 8, "0"))
    add(_fam("XVIII", 3, 8, "0, w1, w2, 2w1, w3, w4, w1+w2, 2w5, w1+w3, 2w2", "w1+w4"))
    add(_fam("XVIII", 4, 8, "0, w2, 2w1, w4, w1+w3", "2w2"))
    add(_fam("XVIII", 5, 8, "0, w2, 2w1, w4", "w1+w3"))
    add(_fam("XVIII", 6, 8, "0, w2, 2w1, w4"))
    for n in range(7, 20):
        add(_fam("XVIII", n, 8, "0, w2, 2w1"))
    return rows


def _table9():
    groups = [
        ([("SU3SO3", "SU3SO3"), ("S3", "SO5"), ("S4", "SU6SP3")], "0, w1, 2w1", ""),
        ([("S3", "SU3")], "0, w1, w2, 2w1, w3", "w1+w2"),
        ([("S3", "S3", "SU3")], "0, w1, w2, 2w1", ""),
        ([("SU3", "SU3"), ("S3", "S3", "S3", "SU3")], "0, w1, w2", "2w1"),
        ([("S3", "G2")], "0", "2w1"),
        ([("S3", "SU4"), ("SU3", "SO5")], "0, w1", "w2"),
        ([("S4", "S4", "SU6SP3")], "0, w1, 2w1", "w2"),
        ([("S3",) * k + ("SO5",) for k in (3, 4, 5)]
         + [("S3",) * k + ("G2",) for k in (2, 3, 4)]
         + [("S3",) * k + ("SO5", "SO5") for k in (0, 1, 2)]
         + [("S3", "SO7"), ("S3", "SP3"), ("SO5", "G2")], "0", ""),
    ]
    return [GoldenRow(xix_name(f), 9, u, s) for fs, u, s in groups for f in fs]


_TABLES = {3: _table3, 4: _table4, 5: _table5, 6: _table6, 7: _table7, 8: _table8, 9: _table9}


def golden_tables() -> tuple[int, ...]:
    return tuple(sorted(_TABLES))


def golden_rows(table: int | None = None) -> list[GoldenRow]:
    if table is None:
        return [r for t in golden_tables() for r in _TABLES[t]()]
    if table not in _TABLES:
        raise KeyError(f"no golden data for table {table}")
    return _TABLES[table]()


def golden_row(space: str) -> GoldenRow:
    for row in golden_rows():
        if row.space == space:
            return row
    raise KeyError(space)


def expected_modes(row: GoldenRow, rank: int) -> tuple[list, list]:
    """Listed weights of a row, with 'w{r}' standing for the last fundamental weight."""
    def parse(text):
        return parse_weights(text.replace("{r}", str(rank)), rank)
    return parse(row.unstable), parse(row.semistable)
