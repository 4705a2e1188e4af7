"""Shipped spaces: parameterized generators for the families I-XIX and the
exceptional normal homogeneous Einstein spaces with G simple.

Every entry is built lazily; ``get_space(name)`` resolves names such as
``so7_g2``, ``family_IX_n7``, ``family_III_p2_q3`` or ``family_XIb_k3_n2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Callable, Sequence

from .embeddings import EmbeddingSpec, compose, restriction_from_defining
from .reductive import SubalgebraSpec
from .rootsystem import LieType, root_system
from .spaces import SpaceSpec
from .subalgebras import centralizer_torus_rows, lowest_root_coords, regular_rows


class UnknownSpace(KeyError):
    def __str__(self):
        return f"unknown space {self.args[0]!r}"


def T(text: str) -> LieType:
    return LieType.parse(text)


def _zero(t: LieType) -> tuple[int, ...]:
    return (0,) * t.rank


def _unit(t: LieType, i: int, k: int = 1) -> tuple[int, ...]:
    w = [0] * t.rank
    w[i - 1] = k
    return tuple(w)


def _placed(types: Sequence[LieType], index: int, weight, torus=None) -> tuple:
    """Irreducible module of a product: ``weight`` on factor ``index``, trivial elsewhere."""
    parts = [_zero(t) for t in types]
    parts[index] = tuple(weight)
    if torus is not None:
        parts.append(tuple(torus))
    return tuple(parts)


def _block_diag(*blocks: Sequence[Sequence[int]]) -> list[list[int]]:
    width = sum(len(b[0]) for b in blocks)
    out, col = [], 0
    for b in blocks:
        for row in b:
            out.append([0] * col + list(row) + [0] * (width - col - len(row)))
        col += len(b[0])
    return out


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


# classical algebras as sums of simple types with their vector modules -----

def su_parts(n: int) -> tuple[list[LieType], list[tuple[int, ...]]]:
    """su(n) as simple factors and the highest weight of C^n (empty for n = 1)."""
    if n == 1:
        return [], []
    t = LieType("A", n - 1)
    return [t], [_unit(t, 1)]


def sp_parts(n: int):
    t = LieType("A", 1) if n == 1 else LieType("C", n)
    return [t], [_unit(t, 1)]


def so_parts(n: int):
    """so(n) for n >= 3 and the highest weight of its vector module."""
    if n == 3:
        return [LieType("A", 1)], [(2,)]
    if n == 4:
        return [LieType("A", 1), LieType("A", 1)], [(1,), (1,)]
    if n == 5:
        return [LieType("B", 2)], [(1, 0)]
    if n % 2:
        t = LieType("B", (n - 1) // 2)
    else:
        t = LieType("D", n // 2)
    return [t], [_unit(t, 1)]


def _outer(parts: list[list[tuple[int, ...]]]) -> tuple:
    """Concatenate per-algebra weight lists into one product weight."""
    return tuple(w for ws in parts for w in ws)


def _trivial_parts(types) -> list[tuple[int, ...]]:
    return [_zero(t) for t in types]


# embedding builders -------------------------------------------------------

def by_defining(g: str, types: Sequence[LieType], defining, torus_rank: int = 0) -> EmbeddingSpec:
    h = SubalgebraSpec(tuple(types), torus_rank)
    return restriction_from_defining(T(g), h, [(w, m) for w, m in defining])


def by_matrix(g: str, types: Sequence[LieType], rows, torus_rank: int = 0) -> EmbeddingSpec:
    return EmbeddingSpec(T(g), SubalgebraSpec(tuple(types), torus_rank), rows)


def by_roots(g: str, components, torus_roots: Sequence | None = None, torus_rank: int = 0) -> EmbeddingSpec:
    """Regular subalgebra from simple roots (simple-root coordinates of g).

    ``'-theta'`` stands for the lowest root. If ``torus_rank`` is positive the
    centralizer torus of the listed roots is added.
    """
    rs = root_system(g)
    comps = []
    for t, roots in components:
        comps.append((T(t), [lowest_root_coords(rs) if r == "-theta" else tuple(r) for r in roots]))
    rows = regular_rows(rs, comps)
    if torus_rank:
        all_roots = [r for _, roots in comps for r in roots]
        rows = list(rows) + centralizer_torus_rows(rs, all_roots, torus_rank)
    return EmbeddingSpec(rs, SubalgebraSpec(tuple(t for t, _ in comps), torus_rank), rows)


def maximal_torus(g: str) -> EmbeddingSpec:
    rs = root_system(g)
    return EmbeddingSpec(rs, SubalgebraSpec((), rs.rank), _identity(rs.rank))


def chain(outer: EmbeddingSpec, types: Sequence[LieType], inner_rows, torus_rank: int = 0) -> EmbeddingSpec:
    return compose(outer, SubalgebraSpec(tuple(types), torus_rank), inner_rows)


def inner_defining(k: str, types, defining, torus_rank: int = 0) -> list[list[int]]:
    return [list(r) for r in by_defining(k, types, defining, torus_rank).restriction]


# S-subalgebras of exceptional algebras. The matrices were found by
# ``subalgebras.solve_restriction`` from the adjoint branchings recorded in
# ``S_SUBALGEBRA_BRANCHINGS``; the test suite re-derives the small ones.
S_SUBALGEBRA_MATRICES = {
    "g2_su2": [[6, 10]],
    "f4_su2_g2": [[0, 4, 2, 2], [0, 1, 2, 1], [1, 1, 0, 0]],
    "e6_su3": [[2, 1, 2, 5, 2, 2], [2, 4, 5, 5, 5, 2]],
    "e6_g2": [[2, 1, 2, 0, 2, 2], [0, 1, 1, 3, 1, 0]],
    "e6_su3_g2": [[0, 0, 1, 1, 0, 1], [1, 0, 0, 1, 1, 0], [1, 0, 2, 1, 2, 1], [0, 1, 0, 1, 0, 0]],
    "e7_su3": [[4, 4, 6, 11, 7, 6, 0], [4, 7, 9, 11, 10, 6, 6]],
    "e7_g2_sp3": [[1, 1, 0, 1, 0, 1, 1], [0, 0, 1, 1, 1, 0, 0], [0, 1, 0, 1, 2, 1, 1],
                  [1, 1, 2, 1, 0, 0, 0], [0, 0, 0, 1, 1, 1, 0]],
    "e7_su2_f4": [[0, 1, 0, 0, 1, 0, 1], [1, 0, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0, 0],
                  [0, 1, 0, 2, 1, 0, 0], [0, 0, 0, 0, 1, 2, 1]],
    "e8_g2_f4": [[1, 1, 0, 1, 0, 1, 1, 0], [0, 0, 1, 1, 1, 0, 0, 0], [0, 0, 0, 0, 0, 0, 1, 1],
                 [0, 0, 0, 1, 1, 1, 0, 0], [1, 1, 2, 1, 0, 0, 0, 0], [0, 1, 0, 1, 2, 1, 1, 0]],
    "e8_so5": [[1, 3, 5, 9, 5, 4, 3, 0], [8, 10, 12, 16, 16, 12, 8, 6]],
}

_W1F4, _W4F4 = (1, 0, 0, 0), (0, 0, 0, 1)
S_SUBALGEBRA_BRANCHINGS = {
    "g2_su2": ("G2", ["A1"], {((2,),): 1, ((10,),): 1}),
    "f4_su2_g2": ("F4", ["A1", "G2"], {((2,), (0, 0)): 1, ((0,), (0, 1)): 1, ((4,), (1, 0)): 1}),
    "e6_su3": ("E6", ["A2"], {((1, 1),): 1, ((4, 1),): 1, ((1, 4),): 1}),
    "e6_g2": ("E6", ["G2"], {((0, 1),): 1, ((1, 1),): 1}),
    "e6_su3_g2": ("E6", ["A2", "G2"], {((1, 1), (0, 0)): 1, ((0, 0), (0, 1)): 1, ((1, 1), (1, 0)): 1}),
    "e7_su3": ("E7", ["A2"], {((1, 1),): 1, ((4, 4),): 1}),
    "e7_g2_sp3": ("E7", ["G2", "C3"], {((0, 1), (0, 0, 0)): 1, ((0, 0), (2, 0, 0)): 1,
                                       ((1, 0), (0, 1, 0)): 1}),
    "e7_su2_f4": ("E7", ["A1", "F4"], {((2,), (0, 0, 0, 0)): 1, ((0,), _W1F4): 1, ((2,), _W4F4): 1}),
    "e8_g2_f4": ("E8", ["G2", "F4"], {((0, 1), (0, 0, 0, 0)): 1, ((0, 0), _W1F4): 1, ((1, 0), _W4F4): 1}),
    "e8_so5": ("E8", ["B2"], {((0, 2),): 1, ((0, 6),): 1, ((3, 2),): 1}),
}


def s_subalgebra(name: str) -> EmbeddingSpec:
    g, types, _ = S_SUBALGEBRA_BRANCHINGS[name]
    return by_matrix(g, [T(t) for t in types], S_SUBALGEBRA_MATRICES[name])


# ---------------------------------------------------------------------------
# exceptional spaces

@dataclass(frozen=True)
class Entry:
    name: str
    g: str
    build: Callable[[], EmbeddingSpec]
    einstein: Fraction
    table: int
    sphere: bool = False
    notes: str = ""
    aliases: tuple[str, ...] = ()
    family: str = "exceptional"
    parameters: tuple = ()
    provenance: str = "tabulated"


def _simple_defining(g: str, h: str, weight) -> Callable[[], EmbeddingSpec]:
    return lambda: by_defining(g, [T(h)], [((tuple(weight),), 1)])


def _table3() -> list[Entry]:
    rows = [
        ("su16_so10", "A15", "D5", (0, 0, 0, 1, 0), Fraction(11, 32)),
        ("su27_e6", "A26", "E6", (1, 0, 0, 0, 0, 0), Fraction(11, 36)),
        ("so7_g2", "B3", "G2", (1, 0), Fraction(9, 20)),
        ("so133_e7", "B66", "E7", (1, 0, 0, 0, 0, 0, 0), Fraction(135, 524)),
        ("sp2_su2", "C2", "A1", (3,), Fraction(9, 20)),
        ("sp7_sp3", "C7", "C3", (0, 0, 1), Fraction(29, 80)),
        ("sp10_su6", "C10", "A5", (0, 0, 1, 0, 0), Fraction(15, 44)),
        ("sp16_so12", "C16", "D6", (0, 0, 0, 0, 1, 0), Fraction(43, 136)),
        ("sp28_e7", "C28", "E7", (0, 0, 0, 0, 0, 0, 1), Fraction(17, 58)),
        ("so14_g2", "D7", "G2", (0, 1), Fraction(1, 3)),
        ("so16_so9", "D8", "B4", (0, 0, 0, 1), Fraction(23, 56)),
        ("so26_f4", "D13", "F4", (0, 0, 0, 1), Fraction(1, 3)),
        ("so42_sp4", "D21", "C4", (0, 0, 0, 1), Fraction(19, 70)),
        ("so52_f4", "D26", "F4", (1, 0, 0, 0), Fraction(27, 100)),
        ("so70_su8", "D35", "A7", (0, 0, 0, 1, 0, 0, 0), Fraction(179, 680)),
        ("so78_e6", "D39", "E6", (0, 1, 0, 0, 0, 0), Fraction(5, 19)),
        ("so128_so16", "D64", "D8", (0, 0, 0, 0, 0, 0, 1, 0), Fraction(173, 672)),
        ("so248_e8", "D124", "E8", (0, 0, 0, 0, 0, 0, 0, 1), Fraction(125, 492)),
    ]
    out = []
    for name, g, h, w, E in rows:
        extra = {}
        if name == "so7_g2":
            extra = dict(sphere=True, notes="round 7-sphere")
        if name == "sp2_su2":
            extra = dict(aliases=("berger_sp2_su2",), notes="Berger space")
        out.append(Entry(name, g, _simple_defining(g, h, w), E, 3, **extra))
    return out


def _table4() -> list[Entry]:
    def s(name):
        return lambda: s_subalgebra(name)

    rows = [
        Entry("e6_su3", "E6", s("e6_su3"), Fraction(11, 36), 4),
        Entry("e6_3su3", "E6", lambda: by_roots("E6", [
            ("A2", [(1, 0, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0)]),
            ("A2", [(0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1)]),
            ("A2", [(0, 1, 0, 0, 0, 0), "-theta"])]), Fraction(5, 12), 4),
        Entry("e6_g2", "E6", s("e6_g2"), Fraction(25, 72), 4),
        Entry("e6_su3_g2", "E6", s("e6_su3_g2"), Fraction(19, 48), 4),
        Entry("e7_su3", "E7", s("e7_su3"), Fraction(71, 252), 4),
        Entry("e7_su6_su3", "E7", lambda: by_roots("E7", [
            ("A5", [(0, 1, 0, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0, 0), (0, 0, 0, 0, 1, 0, 0),
                    (0, 0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 0, 1)]),
            ("A2", ["-theta", (1, 0, 0, 0, 0, 0, 0)])]), Fraction(5, 12), 4),
        Entry("e7_g2_sp3", "E7", s("e7_g2_sp3"), Fraction(7, 18), 4),
        Entry("e7_su2_f4", "E7", s("e7_su2_f4"), Fraction(47, 108), 4),
        Entry("e8_su9", "E8", lambda: by_roots("E8", [
            ("A8", [_e(8, 1), _e(8, 3), _e(8, 4), _e(8, 5), _e(8, 6), _e(8, 7), _e(8, 8), "-theta"])]),
            Fraction(5, 12), 4),
        Entry("e8_e6_su3", "E8", lambda: by_roots("E8", [
            ("E6", [_e(8, i) for i in range(1, 7)]), ("A2", [_e(8, 8), "-theta"])]), Fraction(5, 12), 4),
        Entry("e8_g2_f4", "E8", s("e8_g2_f4"), Fraction(23, 60), 4),
        Entry("f4_2su3", "F4", lambda: by_roots("F4", [
            ("A2", ["-theta", (1, 0, 0, 0)]), ("A2", [(0, 0, 1, 0), (0, 0, 0, 1)])]), Fraction(5, 12), 4),
        Entry("f4_su2_g2", "F4", s("f4_su2_g2"), Fraction(29, 72), 4),
        Entry("g2_su2", "G2", s("g2_su2"), Fraction(43, 112), 4),
        Entry("g2_su3", "G2", lambda: by_roots("G2", [("A2", [(0, 1), (3, 1)])]), Fraction(5, 12), 4,
              sphere=True, notes="round 6-sphere"),
    ]
    return rows


def _e(n: int, i: int) -> tuple[int, ...]:
    """Simple root i of a rank-n algebra in simple-root coordinates."""
    return tuple(int(k == i - 1) for k in range(n))


_PRINCIPAL_A1_IN_A2 = [[2, 2]]


def _e8_four_su3() -> EmbeddingSpec:
    theta_e6 = (1, 2, 2, 3, 2, 1, 0, 0)
    neg = tuple(-x for x in theta_e6)
    return by_roots("E8", [
        ("A2", [_e(8, 1), _e(8, 3)]), ("A2", [_e(8, 5), _e(8, 6)]),
        ("A2", [_e(8, 2), neg]), ("A2", [_e(8, 8), "-theta"])])


def _vector_sum(blocks):
    """so(a1) + so(a2) + ... as simple types, with the sum of vector modules."""
    types, defining = [], []
    for n in blocks:
        ts, ws = so_parts(n)
        types.extend(ts)
        defining.append(ws)
    weights = []
    offset = 0
    for ws in defining:
        parts = _trivial_parts(types)
        for j, w in enumerate(ws):
            parts[offset + j] = w
        offset += len(ws)
        weights.append((tuple(parts), 1))
    return types, weights


def _d_vector_sum(k: str, blocks):
    """Inner rows of so(a1) + so(a2) + ... in so(N) acting on the sum of vectors."""
    types, weights = _vector_sum(blocks)
    return types, inner_defining(k, types, weights)


def _d8_roots():
    return ("D8", ["-theta", _e(8, 8), _e(8, 7), _e(8, 6), _e(8, 5), _e(8, 4), _e(8, 3), _e(8, 2)])


def _e7_a1_d6():
    return by_roots("E7", [
        ("A1", ["-theta"]),
        ("D6", [_e(7, 7), _e(7, 6), _e(7, 5), _e(7, 4), _e(7, 3), _e(7, 2)])])


def _table6() -> list[Entry]:
    A1, A2, D4 = T("A1"), T("A2"), T("D4")

    def so8_g2():
        G2 = T("G2")
        return by_defining("D4", [G2], [(((1, 0),), 1), (((0, 0),), 1)])

    def so26():
        types = [A1, T("C5"), T("D3")]
        return by_defining("D13", types, [
            (((1,), (1, 0, 0, 0, 0), (0, 0, 0)), 1), (((0,), (0, 0, 0, 0, 0), (1, 0, 0)), 1)])

    def f4_so8():
        return by_roots("F4", [("D4", ["-theta", (1, 0, 0, 0), (0, 1, 0, 0), (0, 1, 2, 0)])])

    def e6_3su2():
        outer = _table_entry("e6_3su3").build()
        return chain(outer, [A1, A1, A1], _block_diag(*[_PRINCIPAL_A1_IN_A2] * 3))

    def e6_su2_so6():
        outer = by_roots("E6", [("A1", ["-theta"]),
                                ("A5", [_e(6, 1), _e(6, 3), _e(6, 4), _e(6, 5), _e(6, 6)])])
        d3 = inner_defining("A5", [T("D3")], [(((1, 0, 0),), 1)])
        return chain(outer, [A1, T("D3")], _block_diag([[1]], d3))

    def e6_so8_r2():
        return by_roots("E6", [("D4", [_e(6, 3), _e(6, 4), _e(6, 5), _e(6, 2)])], torus_rank=2)

    def e7_7su2():
        types, inner = _d_vector_sum("D6", [4, 4, 4])
        return chain(_e7_a1_d6(), [A1] + types, _block_diag([[1]], inner))

    def e7_so8():
        outer = by_roots("E7", [("A7", ["-theta", _e(7, 1), _e(7, 3), _e(7, 4), _e(7, 5), _e(7, 6), _e(7, 7)])])
        return chain(outer, [D4], inner_defining("A7", [D4], [(((1, 0, 0, 0),), 1)]))

    def e7_3su2_so8():
        types, inner = _d_vector_sum("D6", [4, 8])
        return chain(_e7_a1_d6(), [A1] + types, _block_diag([[1]], inner))

    def e8_8su2():
        types, inner = _d_vector_sum("D8", [4, 4, 4, 4])
        return chain(by_roots("E8", [_d8_roots()]), types, inner)

    def e8_4su2():
        return chain(_e8_four_su3(), [A1] * 4, _block_diag(*[_PRINCIPAL_A1_IN_A2] * 4))

    def e8_su9():
        return _table_entry("e8_su9").build()

    def e8_2su3():
        inner = inner_defining("A8", [A2, A2], [(((1, 0), (1, 0)), 1)])
        return chain(e8_su9(), [A2, A2], inner)

    def e8_2su5():
        return by_roots("E8", [("A4", [_e(8, 1), _e(8, 3), _e(8, 4), _e(8, 2)]),
                               ("A4", [_e(8, 6), _e(8, 7), _e(8, 8), "-theta"])])

    def e8_so9_su9():
        B4 = T("B4")
        return chain(e8_su9(), [B4], inner_defining("A8", [B4], [(((1, 0, 0, 0),), 1)]))

    def e8_so9_so16():
        B4 = T("B4")
        return chain(by_roots("E8", [_d8_roots()]), [B4],
                     inner_defining("D8", [B4], [(((0, 0, 0, 1),), 1)]))

    def e8_2so8():
        types, inner = _d_vector_sum("D8", [8, 8])
        return chain(by_roots("E8", [_d8_roots()]), types, inner)

    def e8_2sp2():
        C2 = T("C2")
        inner = inner_defining("D8", [C2, C2], [(((1, 0), (1, 0)), 1)])
        return chain(by_roots("E8", [_d8_roots()]), [C2, C2], inner)

    return [
        Entry("so8_g2", "D4", so8_g2, Fraction(5, 12), 6),
        Entry("so26_sp1_sp5_so6", "D13", so26, Fraction(29, 80), 6),
        Entry("f4_so8", "F4", f4_so8, Fraction(4, 9), 6),
        Entry("e6_3su2", "E6", e6_3su2, Fraction(5, 16), 6),
        Entry("e6_su2_so6", "E6", e6_su2_so6, Fraction(3, 8), 6),
        Entry("e6_so8_r2", "E6", e6_so8_r2, Fraction(5, 12), 6),
        Entry("e6_r6", "E6", lambda: maximal_torus("E6"), Fraction(7, 24), 6),
        Entry("e7_7su2", "E7", e7_7su2, Fraction(1, 3), 6),
        Entry("e7_so8", "E7", e7_so8, Fraction(13, 36), 6),
        Entry("e7_3su2_so8", "E7", e7_3su2_so8, Fraction(7, 18), 6),
        Entry("e7_r7", "E7", lambda: maximal_torus("E7"), Fraction(5, 18), 6),
        Entry("e8_8su2", "E8", e8_8su2, Fraction(3, 10), 6),
        Entry("e8_4su3", "E8", _e8_four_su3, Fraction(19, 60), 6),
        Entry("e8_4su2", "E8", e8_4su2, Fraction(11, 40), 6),
        Entry("e8_2su3", "E8", e8_2su3, Fraction(17, 60), 6),
        Entry("e8_2su5", "E8", e8_2su5, Fraction(7, 20), 6),
        Entry("e8_so9_su9", "E8", e8_so9_su9, Fraction(13, 40), 6, notes="so(9) in su(9)"),
        Entry("e8_so9_so16", "E8", e8_so9_so16, Fraction(13, 40), 6, notes="so(9) in so(16) via spin"),
        Entry("e8_2so8", "E8", e8_2so8, Fraction(11, 30), 6),
        Entry("e8_so5", "E8", lambda: s_subalgebra("e8_so5"), Fraction(13, 48), 6),
        Entry("e8_2sp2", "E8", e8_2sp2, Fraction(7, 24), 6),
        Entry("e8_r8", "E8", lambda: maximal_torus("E8"), Fraction(4, 15), 6),
    ]


# ---------------------------------------------------------------------------
# families

@dataclass(frozen=True)
class Family:
    name: str
    keys: tuple[str, ...]
    build: Callable[..., tuple[str, EmbeddingSpec]]
    einstein: Callable[..., Fraction]
    defaults: tuple[tuple[int, ...], ...]
    valid: Callable[..., bool]
    table: int


def _fam_I(n):
    N = n * (n - 1) // 2
    t = T(f"A{n - 1}")
    return f"A{N - 1}", by_defining(f"A{N - 1}", [t], [((_unit(t, 2),), 1)])


def _fam_II(n):
    N = n * (n + 1) // 2
    t = T(f"A{n - 1}")
    return f"A{N - 1}", by_defining(f"A{N - 1}", [t], [((_unit(t, 1, 2),), 1)])


def _fam_III(p, q):
    tp, tq = T(f"A{p - 1}"), T(f"A{q - 1}")
    return f"A{p * q - 1}", by_defining(f"A{p * q - 1}", [tp, tq], [((_unit(tp, 1), _unit(tq, 1)), 1)])


def _orthogonal(N: int) -> str:
    return f"B{(N - 1) // 2}" if N % 2 else f"D{N // 2}"


def _fam_IV(n):
    t1, w1 = sp_parts(1)
    ts, ws = so_parts(n)
    return f"C{n}", by_defining(f"C{n}", t1 + ts, [(_outer([w1, ws]), 1)])


def _fam_V(n):
    t = T(f"A{n - 1}")
    g = _orthogonal(n * n - 1)
    return g, by_defining(g, [t], [((root_system(t).adjoint_weight,), 1)])


def _fam_VI(n):
    t = T(f"C{n}")
    g = _orthogonal((n - 1) * (2 * n + 1))
    return g, by_defining(g, [t], [((_unit(t, 2),), 1)])


def _fam_VII(n):
    t = T(f"C{n}")
    g = _orthogonal(2 * n * n + n)
    return g, by_defining(g, [t], [((_unit(t, 1, 2),), 1)])


def _fam_VIII(n):
    t1, w1 = sp_parts(1)
    tn, wn = sp_parts(n)
    return f"D{2 * n}", by_defining(f"D{2 * n}", t1 + tn, [(_outer([w1, wn]), 1)])


def _fam_IX(n):
    ts, _ = so_parts(n)
    g = _orthogonal(n * (n - 1) // 2)
    return g, by_defining(g, ts, [((root_system(ts[0]).adjoint_weight,), 1)])


def _fam_X(n):
    ts, ws = so_parts(n)
    g = _orthogonal((n - 1) * (n + 2) // 2)
    return g, by_defining(g, ts, [((tuple(2 * x for x in ws[0]),), 1)])


def _fam_XIa(n):
    return f"A{n - 1}", maximal_torus(f"A{n - 1}")


def _fam_XIb(k, n):
    t = T(f"A{n - 1}")
    types = [t] * k
    defining = []
    for i in range(k):
        torus = [0] * (k - 1)
        if i < k - 1:
            torus[i] = 1
        else:
            torus = [-1] * (k - 1)
        defining.append((_placed(types, i, _unit(t, 1), torus), 1))
    return f"A{k * n - 1}", by_defining(f"A{k * n - 1}", types, defining, k - 1)


def _fam_XII(p, q):
    l = xii_l(p, q)
    ta, tp, tq = T(f"A{l - 1}"), T(f"A{p - 1}"), T(f"A{q - 1}")
    types = [ta, tp, tq]
    d = gcd(l, p * q)
    z1, z2 = p * q // d, -l // d
    defining = [((_unit(ta, 1), _zero(tp), _zero(tq), (z1,)), 1),
                ((_zero(ta), _unit(tp, 1), _unit(tq, 1), (z2,)), 1)]
    N = l + p * q
    return f"A{N - 1}", by_defining(f"A{N - 1}", types, defining, 1)


def xii_l(p: int, q: int) -> int:
    num = p * p + q * q + 1
    if num % (p * q):
        raise ValueError(f"(p, q) = ({p}, {q}) admits no integer l with lpq = p^2 + q^2 + 1")
    return num // (p * q)


def _fam_XIII(k, n):
    ts, ws = sp_parts(n)
    types = ts * k
    defining = [(_placed(types, i, ws[0]), 1) for i in range(k)]
    return f"C{k * n}", by_defining(f"C{k * n}", types, defining)


def _fam_XIV(n):
    ta, wa = su_parts(2 * n - 1)
    tc, wc = sp_parts(n)
    types = ta + tc
    if ta:
        dual = tuple(reversed(wa[0]))
        defining = [((wa[0], _zero(tc[0]), (1,)), 1), ((dual, _zero(tc[0]), (-1,)), 1),
                    ((_zero(ta[0]), wc[0], (0,)), 1)]
    else:
        defining = [((_zero(tc[0]), (1,)), 1), ((_zero(tc[0]), (-1,)), 1), ((wc[0], (0,)), 1)]
    return f"C{3 * n - 1}", by_defining(f"C{3 * n - 1}", types, defining, 1)


def _fam_XV(n):
    ts, ws = sp_parts(n)
    return f"D{2 * n * n}", by_defining(f"D{2 * n * n}", ts + ts, [(_outer([ws, ws]), 1)])


def _fam_XVI(n):
    ts, ws = so_parts(n)
    g = _orthogonal(n * n)
    return g, by_defining(g, ts + ts, [(_outer([ws, ws]), 1)])


def _fam_XVIIa(n):
    return f"D{n}", maximal_torus(f"D{n}")


def _fam_XVIIb(k, n):
    g = _orthogonal(k * n)
    types, weights = _vector_sum([n] * k)
    return g, by_defining(g, types, weights)


def _fam_XVIII(n):
    ta, wa = su_parts(n + 1)
    ts, ws = so_parts(n)
    types = ta + ts
    dual = tuple(reversed(wa[0]))
    triv_s = [_zero(t) for t in ts]
    defining = [(tuple([wa[0]] + triv_s + [(1,)]), 1), (tuple([dual] + triv_s + [(-1,)]), 1),
                (tuple([_zero(ta[0])] + list(ws) + [(0,)]), 1)]
    g = _orthogonal(3 * n + 2)
    return g, by_defining(g, types, defining, 1)


F = Fraction
FAMILIES: dict[str, Family] = {f.name: f for f in [
    Family("I", ("n",), _fam_I, lambda n: F(1, 4) + F(2, n * (n - 2)), ((5,), (6,), (7,)),
           lambda n: n >= 5, 5),
    Family("II", ("n",), _fam_II, lambda n: F(1, 4) + F(2, n * (n + 2)), ((3,), (4,), (5,)),
           lambda n: n >= 3, 5),
    Family("III", ("p", "q"), _fam_III, lambda p, q: F(1, 4) + F(p * p + q * q, 2 * p * p * q * q),
           ((2, 3), (2, 4), (3, 3)), lambda p, q: 2 <= p <= q and p + q != 4, 5),
    Family("IV", ("n",), _fam_IV, lambda n: F(3, 8) + F(n + 16, 8 * n * (2 * n - 1)), ((3,), (4,), (5,)),
           lambda n: n >= 3, 5),
    Family("V", ("n",), _fam_V, lambda n: F(1, 4) + F(1, n * n - 3), ((3,), (4,), (5,)),
           lambda n: n >= 3, 5),
    Family("VI", ("n",), _fam_VI, lambda n: F(1, 4) + F(1, (n - 1) * (n + 1) * (2 * n - 3)),
           ((3,), (4,), (5,)), lambda n: n >= 3, 5),
    Family("VII", ("n",), _fam_VII, lambda n: F(1, 4) + F(1, 2 * n * n + n - 2), ((2,), (3,), (4,)),
           lambda n: n >= 2, 5),
    Family("VIII", ("n",), _fam_VIII, lambda n: F(3, 8) + F(n + 4, 8 * n * (2 * n - 1)),
           ((2,), (3,), (4,)), lambda n: n >= 2, 5),
    Family("IX", ("n",), _fam_IX, lambda n: F(1, 4) + F(2, n * n - n - 4), ((7,), (8,), (9,)),
           lambda n: n >= 7, 5),
    Family("X", ("n",), _fam_X, lambda n: F(1, 4) + F(2 * n, (n - 2) * (n + 2) * (n + 3)),
           ((5,), (6,), (7,)), lambda n: n >= 5, 5),
    Family("XIa", ("n",), _fam_XIa, lambda n: F(1, 4) + F(1, 2 * n), ((3,), (4,), (5,)),
           lambda n: n >= 3, 7),
    Family("XIb", ("k", "n"), _fam_XIb, lambda k, n: F(1, 4) + F(1, 2 * n), ((3, 2), (4, 2), (3, 3)),
           lambda k, n: k >= 3 and n >= 2, 7),
    Family("XII", ("p", "q"), _fam_XII,
           lambda p, q: F(1, 4) + F(p * p + q * q, 2 * (p * p + 1) * (q * q + 1)),
           ((2, 5), (5, 13), (13, 34)),
           lambda p, q: 2 <= p <= q and (p * p + q * q + 1) % (p * q) == 0, 7),
    Family("XIII", ("k", "n"), _fam_XIII, lambda k, n: F(1, 4) + F(2 * n + 1, 4 * (k * n + 1)),
           ((3, 1), (4, 1), (5, 1)), lambda k, n: k >= 3 and n >= 1, 7),
    Family("XIV", ("n",), _fam_XIV, lambda n: F(5, 12), ((1,), (2,), (3,)), lambda n: n >= 1, 7),
    Family("XV", ("n",), _fam_XV, lambda n: F(1, 4) + F(2 * n + 1, 2 * n * (2 * n * n - 1)),
           ((2,), (3,), (4,)), lambda n: n >= 2, 8),
    Family("XVI", ("n",), _fam_XVI, lambda n: F(1, 4) + F(n - 1, n * (n * n - 2)), ((3,), (4,), (5,)),
           lambda n: n >= 3, 8),
    Family("XVIIa", ("n",), _fam_XVIIa, lambda n: F(1, 4) + F(1, 4 * (n - 1)), ((3,), (4,), (5,)),
           lambda n: n >= 3, 8),
    Family("XVIIb", ("k", "n"), _fam_XVIIb, lambda k, n: F(1, 4) + F(n - 1, 2 * (k * n - 2)),
           ((3, 3), (3, 4), (4, 3)), lambda k, n: k >= 3 and n >= 3, 8),
    Family("XVIII", ("n",), _fam_XVIII, lambda n: F(5, 12), ((3,), (4,), (5,)), lambda n: n >= 3, 8),
]}


# type of g per family, available without building the embedding
FAMILY_G: dict[str, Callable[..., str]] = {
    "I": lambda n: f"A{n * (n - 1) // 2 - 1}",
    "II": lambda n: f"A{n * (n + 1) // 2 - 1}",
    "III": lambda p, q: f"A{p * q - 1}",
    "IV": lambda n: f"C{n}",
    "V": lambda n: _orthogonal(n * n - 1),
    "VI": lambda n: _orthogonal((n - 1) * (2 * n + 1)),
    "VII": lambda n: _orthogonal(2 * n * n + n),
    "VIII": lambda n: f"D{2 * n}",
    "IX": lambda n: _orthogonal(n * (n - 1) // 2),
    "X": lambda n: _orthogonal((n - 1) * (n + 2) // 2),
    "XIa": lambda n: f"A{n - 1}",
    "XIb": lambda k, n: f"A{k * n - 1}",
    "XII": lambda p, q: f"A{xii_l(p, q) + p * q - 1}",
    "XIII": lambda k, n: f"C{k * n}",
    "XIV": lambda n: f"C{3 * n - 1}",
    "XV": lambda n: f"D{2 * n * n}",
    "XVI": lambda n: _orthogonal(n * n),
    "XVIIa": lambda n: f"D{n}",
    "XVIIb": lambda k, n: _orthogonal(k * n),
    "XVIII": lambda n: _orthogonal(3 * n + 2),
}


def family_space_name(family: str, params: Sequence[int]) -> str:
    fam = FAMILIES[family]
    return "family_" + family + "".join(f"_{k}{v}" for k, v in zip(fam.keys, params))


def family_space(family: str, *params: int) -> SpaceSpec:
    fam = FAMILIES.get(family)
    if fam is None:
        raise UnknownSpace(f"family_{family}")
    if len(params) != len(fam.keys) or not fam.valid(*params):
        raise UnknownSpace(family_space_name(family, params) if len(params) == len(fam.keys)
                           else f"family_{family}{params}")
    g, emb = fam.build(*params)
    return SpaceSpec(name=family_space_name(family, params), g=T(g), embedding=emb, family=family,
                     parameters=tuple(params), provenance="family", expected_E=fam.einstein(*params))


# family XIX: SO(p) over the isotropy of a product of symmetric spaces ---------

# factor label -> (simple types of H_i, isotropy module p_i on them)
XIX_FACTORS: dict[str, tuple[list[str], list[tuple[int, ...]]]] = {
    "S3": (["A1"], [(2,)]),
    "S4": (["A1", "A1"], [(1,), (1,)]),
    "SU3SO3": (["A1"], [(4,)]),
    "SU6SP3": (["C3"], [(0, 1, 0)]),
    "SU3": (["A2"], [(1, 1)]),
    "SU4": (["A3"], [(1, 0, 1)]),
    "SO5": (["B2"], [(0, 2)]),
    "SO7": (["B3"], [(0, 1, 0)]),
    "SP3": (["C3"], [(2, 0, 0)]),
    "G2": (["G2"], [(0, 1)]),
}

XIX_INSTANCES: tuple[tuple[str, ...], ...] = (
    ("SU3SO3", "SU3SO3"), ("S3", "SO5"), ("S4", "SU6SP3"),
    ("S3", "SU3"),
    ("S3", "S3", "SU3"),
    ("SU3", "SU3"), ("S3", "S3", "S3", "SU3"),
    ("S3", "G2"),
    ("S3", "SU4"), ("SU3", "SO5"),
    ("S4", "S4", "SU6SP3"),
    ("S3", "S3", "S3", "SO5"), ("S3", "S3", "S3", "S3", "SO5"), ("S3", "S3", "S3", "S3", "S3", "SO5"),
    ("S3", "S3", "G2"), ("S3", "S3", "S3", "G2"), ("S3", "S3", "S3", "S3", "G2"),
    ("SO5", "SO5"), ("S3", "SO5", "SO5"), ("S3", "S3", "SO5", "SO5"),
    ("S3", "SO7"), ("S3", "SP3"), ("SO5", "G2"),
)


def xix_name(factors: Sequence[str]) -> str:
    return "family_XIX_" + "_".join(factors)


def xix_space(factors: Sequence[str]) -> SpaceSpec:
    types: list[LieType] = []
    blocks = []
    for f in factors:
        ts, ws = XIX_FACTORS[f]
        blocks.append((len(types), ws))
        types.extend(T(t) for t in ts)
    defining = []
    for start, ws in blocks:
        parts = _trivial_parts(types)
        for j, w in enumerate(ws):
            parts[start + j] = w
        defining.append((tuple(parts), 1))
    h = SubalgebraSpec(tuple(types))
    dim_p = [h.dim_of(w) for w, _ in defining]
    N = sum(dim_p)
    g = _orthogonal(N)
    emb = restriction_from_defining(T(g), h, defining)
    # dim h_i / ((N - 2) dim p_i) is the same for every factor of an Einstein instance
    first = sum(root_system(T(t)).dim for t in XIX_FACTORS[factors[0]][0])
    E = Fraction(1, 4) + Fraction(first, (N - 2) * dim_p[0])
    return SpaceSpec(name=xix_name(factors), g=T(g), embedding=emb, family="XIX",
                     parameters=(), provenance="tabulated", notes=" x ".join(factors), expected_E=E)


# ---------------------------------------------------------------------------
# registry

@lru_cache(maxsize=None)
def exceptional_entries() -> dict[str, Entry]:
    out = {}
    for e in _table3() + _table4() + _table6():
        out[e.name] = e
    return out


def _table_entry(name: str) -> Entry:
    return exceptional_entries()[name]


@lru_cache(maxsize=None)
def _aliases() -> dict[str, str]:
    return {a: e.name for e in exceptional_entries().values() for a in e.aliases}


def entry_space(e: Entry) -> SpaceSpec:
    return SpaceSpec(name=e.name, g=T(e.g), embedding=e.build(), family="exceptional", sphere=e.sphere,
                     provenance=e.provenance, notes=e.notes, expected_E=e.einstein)


_FAMILY_NAME = re.compile(r"^family_([IVX]+[ab]?)((?:_[a-z]\d+)*)$")


@lru_cache(maxsize=None)
def _get_space(name: str) -> SpaceSpec:
    name = _aliases().get(name, name)
    entry = exceptional_entries().get(name)
    if entry is not None:
        return entry_space(entry)
    if name.startswith("family_XIX_"):
        factors = tuple(name[len("family_XIX_"):].split("_"))
        if factors in XIX_INSTANCES:
            return xix_space(factors)
        raise UnknownSpace(name)
    m = _FAMILY_NAME.match(name)
    if m is None or m.group(1) not in FAMILIES:
        raise UnknownSpace(name)
    fam = FAMILIES[m.group(1)]
    pairs = re.findall(r"_([a-z])(\d+)", m.group(2))
    if tuple(k for k, _ in pairs) != fam.keys:
        raise UnknownSpace(name)
    return family_space(fam.name, *(int(v) for _, v in pairs))


def get_space(name: str) -> SpaceSpec:
    return _get_space(name)


def g_type(name: str) -> LieType:
    """Type of g, without building the embedding for family members."""
    name = _aliases().get(name, name)
    entry = exceptional_entries().get(name)
    if entry is not None:
        return T(entry.g)
    m = _FAMILY_NAME.match(name)
    if m is not None and m.group(1) in FAMILIES:
        fam = FAMILIES[m.group(1)]
        pairs = re.findall(r"_([a-z])(\d+)", m.group(2))
        if tuple(k for k, _ in pairs) == fam.keys:
            params = [int(v) for _, v in pairs]
            if fam.valid(*params):
                return T(FAMILY_G[fam.name](*params))
    return get_space(name).g


def g_rank(name: str) -> int:
    return g_type(name).rank


def catalog_names(include_xix: bool = True) -> list[str]:
    """Exceptional spaces, the three smallest members of each family I-XVIII,
    and the tabulated family XIX instances."""
    names = list(exceptional_entries())
    for fam in FAMILIES.values():
        names.extend(family_space_name(fam.name, p) for p in fam.defaults)
    if include_xix:
        names.extend(xix_name(f) for f in XIX_INSTANCES)
    return names


def catalog(rank_limit: int | None = None) -> list[SpaceSpec]:
    out = []
    for name in catalog_names():
        s = get_space(name)
        if rank_limit is None or s.g.rank <= rank_limit:
            out.append(s)
    return out
