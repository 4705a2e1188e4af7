"""Constructions of restriction matrices that are not given by a defining
module: regular subalgebras from root subsystems, centralizer tori, and a
search for matrices reproducing a prescribed adjoint branching.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Mapping, Sequence

from . import linalg
from .reductive import HDecomposition, SubalgebraSpec
from .rootsystem import LieType, RootSystemData, build_root_system, root_system


def highest_root_coords(rs: RootSystemData) -> tuple[int, ...]:
    return rs.root_coords[-1]


def lowest_root_coords(rs: RootSystemData) -> tuple[int, ...]:
    """-theta in simple-root coordinates (the extra node of the extended diagram)."""
    return tuple(-x for x in highest_root_coords(rs))


def root_inner(rs: RootSystemData, a: Sequence[int], b: Sequence[int]) -> int:
    """(a, b) for root-coordinate vectors, short roots of squared length 2."""
    d = rs.root_lengths
    n = rs.rank
    return sum(a[i] * rs.cartan[i][j] * d[j] * b[j] for i in range(n) for j in range(n) if a[i] and b[j])


def coroot_row(rs: RootSystemData, beta: Sequence[int]) -> tuple[int, ...]:
    """Integer row k with <lam, beta^vee> = k . lam for lam in fundamental coordinates."""
    half = root_inner(rs, beta, beta) // 2
    row = []
    for i, b in enumerate(beta):
        num = b * rs.root_lengths[i]
        if num % half:
            raise ValueError(f"{beta} is not a root of {rs.lie_type}")
        row.append(num // half)
    return tuple(row)


def root_in_fundamental(rs: RootSystemData, beta: Sequence[int]) -> tuple[int, ...]:
    n = rs.rank
    return tuple(sum(beta[j] * rs.cartan[j][k] for j in range(n)) for k in range(n))


def regular_rows(g, components: Sequence[tuple[LieType, Sequence[Sequence[int]]]]) -> list[tuple[int, ...]]:
    """Restriction rows of a regular semisimple subalgebra.

    ``components`` lists, per simple factor, its type and its simple roots in
    Bourbaki order, each given in simple-root coordinates of g. The Cartan
    matrix spanned by the roots is checked against the declared type.
    """
    rs = root_system(g)
    rows = []
    for t, roots in components:
        sub = build_root_system(t)
        if len(roots) != t.rank:
            raise ValueError(f"{t} needs {t.rank} simple roots")
        for i, bi in enumerate(roots):
            for j, bj in enumerate(roots):
                val = 2 * root_inner(rs, bi, bj) // root_inner(rs, bj, bj)
                if val != sub.cartan[i][j]:
                    raise ValueError(f"roots do not span {t} in the declared order")
        rows.extend(coroot_row(rs, b) for b in roots)
    return rows


def centralizer_torus_rows(g, semisimple_roots: Sequence[Sequence[int]], size: int | None = None
                           ) -> list[list[int]]:
    """Integer rows spanning the torus that commutes with the given roots."""
    rs = root_system(g)
    vecs = [root_in_fundamental(rs, b) for b in semisimple_roots]
    basis = linalg.nullspace(vecs, ncols=rs.rank) if vecs else [
        [int(i == j) for j in range(rs.rank)] for i in range(rs.rank)]
    if size is not None and len(basis) != size:
        raise ValueError(f"centralizer torus has rank {len(basis)}, expected {size}")
    return basis


# ---------------------------------------------------------------------------

class NoEmbeddingFound(ValueError):
    pass


def _generic_functional(h: SubalgebraSpec) -> list[Fraction]:
    """Linear form on h-weights positive on the dominant chamber interior and
    nonzero on every nonzero weight that will occur (checked by the caller)."""
    primes = [1009, 1013, 1019, 1021, 1031, 1033, 1039, 1049, 1051, 1061, 1063, 1069, 1087,
              1091, 1093, 1097, 1103, 1109, 1117, 1123, 1129, 1151, 1153, 1163]
    y: list[Fraction] = []
    k = 0
    for rs in h.root_systems:
        p = [Fraction(primes[k + i]) + Fraction(1, 7 ** (i + 1)) for i in range(rs.rank)]
        k += rs.rank
        y.extend(sum(rs.cartan_inv[i][j] * p[j] for j in range(rs.rank)) for i in range(rs.rank))
    for i in range(h.torus_rank):
        y.append(Fraction(primes[k + i] * 13 + i))
    return y


def solve_restriction(g, h: SubalgebraSpec, adjoint_branching: Mapping, limit: int = 1) -> list[list[list[int]]]:
    """Restriction matrices whose restricted adjoint module has the given
    decomposition (complete multiset of h-weights of the roots).

    A generic element of the dominant chamber of h is placed in the closed
    dominant chamber of g, so positive roots of g restrict to weights that are
    positive on it, or to zero. Images of the simple roots are assigned by
    backtracking; each partial assignment is pruned by requiring every root
    already determined to land on an unused weight of the multiset.
    """
    rs = root_system(g)
    weights: Counter = Counter()
    for w, m in adjoint_branching.items():
        for flat, k in h.full_weights(h.make(w)):
            weights[flat] += k * m
    if sum(weights.values()) != rs.dim:
        raise ValueError("prescribed branching has the wrong dimension")
    y = _generic_functional(h)
    zero = tuple([0] * h.rank)
    pos: Counter = Counter()
    for w, m in weights.items():
        if w == zero:
            continue
        val = sum(a * b for a, b in zip(w, y))
        if val == 0:
            raise ValueError("functional is not generic")
        if val > 0:
            pos[w] = m
    npos = len(rs.root_coords)
    zero_roots = npos - sum(pos.values())
    if zero_roots < 0 or weights[zero] - rs.rank != 2 * zero_roots:
        raise NoEmbeddingFound("weight multiset does not look like a restricted root system")

    r = rs.rank
    by_top: list[list[tuple[int, ...]]] = [[] for _ in range(r)]
    for root in rs.root_coords:
        top = max(i for i, c in enumerate(root) if c)
        by_top[top].append(root)
    candidates = sorted(pos) + ([zero] if zero_roots else [])
    images: list[tuple[int, ...]] = []
    budget = Counter(pos)
    zero_budget = [zero_roots]
    found: list[list[list[int]]] = []

    def image_of(root):
        v = [0] * h.rank
        for i, c in enumerate(root):
            if c:
                img = images[i]
                for k in range(h.rank):
                    v[k] += c * img[k]
        return tuple(v)

    def assign(i):
        if len(found) >= limit:
            return
        if i == r:
            V = [[images[j][k] for j in range(r)] for k in range(h.rank)]
            # R C^T = V, with simple roots as rows of C
            ct_inv = linalg.inverse(linalg.transpose(rs.cartan))
            R = linalg.matmul(V, ct_inv)
            if linalg.is_integral(R):
                found.append([[int(x) for x in row] for row in R])
            return
        for cand in candidates:
            images.append(cand)
            used = []
            ok = True
            for root in by_top[i]:
                v = image_of(root)
                if v == zero:
                    if zero_budget[0] > 0:
                        zero_budget[0] -= 1
                        used.append(zero)
                    else:
                        ok = False
                        break
                elif budget.get(v, 0) > 0:
                    budget[v] -= 1
                    used.append(v)
                else:
                    ok = False
                    break
            if ok:
                assign(i + 1)
            for v in used:
                if v == zero:
                    zero_budget[0] += 1
                else:
                    budget[v] += 1
            images.pop()
            if len(found) >= limit:
                return

    assign(0)
    if not found:
        raise NoEmbeddingFound(f"no restriction matrix for {h} in {rs.lie_type} with that branching")
    return found
