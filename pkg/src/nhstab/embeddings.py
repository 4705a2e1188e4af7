"""Embeddings h -> g given by restriction matrices, branching rules and the
metric constants that express h-Casimirs for the Killing form of g.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterable, Mapping, Sequence

from . import characters as ch
from . import kernels, linalg
from .reductive import HDecomposition, HWeight, SubalgebraSpec
from .rootsystem import (
    LieType,
    RootSystemData,
    _check_dominant,
    casimir_normalized,
    root_system,
    weyl_dim,
)


class EmbeddingError(ValueError):
    pass


class EmbeddingSpec:
    """Restriction matrix R (rows: h coordinates, columns: g fundamental
    weights) together with the lazily computed Killing indices and torus data.

    ``defining`` optionally records the defining h-module of a classical g,
    which gives a cheap route to the adjoint branching.
    """

    def __init__(self, g, h: SubalgebraSpec, restriction: Sequence[Sequence[int]],
                 defining: Sequence[tuple[HWeight, int]] | None = None):
        self.g: RootSystemData = root_system(g)
        self.h = h
        R = tuple(tuple(int(x) for x in row) for row in restriction)
        if len(R) != h.rank or any(len(row) != self.g.rank for row in R):
            raise EmbeddingError(
                f"restriction matrix must be {h.rank} x {self.g.rank}, got "
                f"{len(R)} x {len(R[0]) if R else 0}")
        self.restriction = R
        self.defining = tuple(defining) if defining is not None else None
        self._branch_cache: dict = {}
        self.disk_cache = None

    def __repr__(self):
        return f"EmbeddingSpec({self.g.lie_type} > {self.h})"

    def attach_disk_cache(self, cache) -> None:
        """Use ``cache`` for branching rules, persisting those already computed."""
        self.disk_cache = cache
        for gamma, dec in self._branch_cache.items():
            cache.put_decomposition(self.key, "branch", list(gamma), dec)

    @cached_property
    def key(self) -> str:
        """Content hash of the embedding data, used for caching."""
        payload = json.dumps([str(self.g.lie_type), [str(t) for t in self.h.simple_components],
                              self.h.torus_rank, self.restriction])
        return hashlib.sha256(payload.encode()).hexdigest()[:32]

    def __hash__(self):
        return hash(self.key)

    def __eq__(self, other):
        return isinstance(other, EmbeddingSpec) and other.key == self.key

    # -------------------------------------------------------------------
    def project(self, weight: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(r * x for r, x in zip(row, weight) if x) for row in self.restriction)

    @cached_property
    def _root_images(self):
        return tuple(self.project(row) for row in self.g.cartan)

    @cached_property
    def _sparse_rows(self):
        return tuple(tuple((j, r) for j, r in enumerate(row) if r) for row in self.restriction)

    def _project_sparse(self, weight):
        return tuple(sum(r * weight[j] for j, r in row) for row in self._sparse_rows)

    def branch(self, gamma) -> HDecomposition:
        gamma = _check_dominant(self.g, gamma)
        hit = self._branch_cache.get(gamma)
        if hit is not None:
            return dict(hit)
        if self.disk_cache is not None:
            hit = self.disk_cache.get_decomposition(self.key, "branch", list(gamma))
            if hit is not None:
                self._branch_cache[gamma] = hit
                return dict(hit)
        acc: dict = {}
        keep = tuple(range(self.h.semisimple_rank))
        cartan = self.g.cartan
        images = self._root_images
        for mu, m in ch.dominant_character(self.g, gamma).items():
            kernels.orbit_project(cartan, mu, self._project_sparse(mu), images, keep, m, acc)
        dec = self.h.decompose_dominant(acc)
        if self.h.decomposition_dim(dec) != weyl_dim(self.g, gamma):
            raise ch.NotACharacter(f"branching of {gamma} lost dimension")
        self._branch_cache[gamma] = dec
        if self.disk_cache is not None:
            self.disk_cache.put_decomposition(self.key, "branch", list(gamma), dec)
        return dict(dec)

    def trivial_multiplicity(self, gamma) -> int:
        return self.branch(gamma).get(self.h.trivial(), 0)

    def hom_dim(self, gamma, target: Mapping[HWeight, int]) -> int:
        dec = self.branch(gamma)
        return sum(m * target.get(w, 0) for w, m in dec.items())

    # -------------------------------------------------------------------
    @cached_property
    def adjoint_branch(self) -> HDecomposition:
        if self.defining is not None:
            return adjoint_from_defining(self.g.lie_type, self.h, self.defining)
        return self.branch(self.g.adjoint_weight)

    def check_faithful(self):
        dec = self.adjoint_branch
        for i in range(len(self.h.simple_components)):
            n = dec.get(self.h.adjoint(i), 0)
            if n != 1:
                raise EmbeddingError(
                    f"adjoint of component {i + 1} ({self.h.simple_components[i]}) occurs "
                    f"{n} times in the restricted adjoint module")
        if dec.get(self.h.trivial(), 0) < self.h.torus_rank:
            raise EmbeddingError("restricted adjoint module lacks the torus")
        if linalg.rank(self.restriction) != self.h.rank:
            raise EmbeddingError("restriction matrix does not have full row rank")

    @cached_property
    def killing_indices(self) -> tuple[Fraction, ...]:
        self.check_faithful()
        out = []
        for i, rs in enumerate(self.h.root_systems):
            total = Fraction(0)
            for w, m in self.adjoint_branch.items():
                if any(w[i]):
                    total += m * self.h.dim_of(w) * casimir_normalized(rs, w[i])
            out.append(total / rs.dim)
        return tuple(out)

    def killing_index(self, i: int) -> Fraction:
        return self.killing_indices[i]

    @cached_property
    def torus_gram_aux(self):
        if not self.h.torus_rank:
            return None
        rz = self.restriction[self.h.semisimple_rank:]
        # inverse Gram of fundamental weights is diag(d)^-1 C
        d = self.g.root_lengths
        n = self.g.rank
        ginv_rows = [[Fraction(c, d[i]) for c in self.g.cartan[i]] for i in range(n)]
        sparse = [[(j, v) for j, v in enumerate(row) if v] for row in ginv_rows]
        tmp = [[sum(v * r[j] for j, v in sparse[i]) for i in range(n)] for r in rz]
        m = [[sum(a * b for a, b in zip(row, r2) if b) for r2 in rz] for row in tmp]
        return tuple(tuple(row) for row in linalg.inverse(m))

    def _torus_norm(self, z) -> Fraction:
        aux = self.torus_gram_aux
        return sum(z[i] * aux[i][j] * z[j] for i in range(len(z)) for j in range(len(z)))

    @cached_property
    def torus_constant(self) -> Fraction:
        if not self.h.torus_rank:
            raise EmbeddingError("subalgebra has no torus")
        total = Fraction(0)
        for w, m in self.adjoint_branch.items():
            if any(w[-1]):
                total += m * self.h.dim_of(w) * self._torus_norm(w[-1])
        c = Fraction(self.h.torus_rank) / total
        # the same constant follows from the adjoint normalization of g
        if c != 1 / self.g.adjoint_raw:
            raise EmbeddingError("torus weights inconsistent with the restricted adjoint module")
        return c

    def casimir_h(self, w: HWeight) -> Fraction:
        """Casimir constant of the h-module w for the Killing form of g."""
        total = Fraction(0)
        for rs, lam, b in zip(self.h.root_systems, w, self.killing_indices):
            if any(lam):
                total += casimir_normalized(rs, lam) / b
        if self.h.torus_rank and any(w[-1]):
            total += self.torus_constant * self._torus_norm(w[-1])
        return total

    @cached_property
    def isotropy(self) -> HDecomposition:
        """Restricted adjoint module minus h itself."""
        self.check_faithful()
        dec = dict(self.adjoint_branch)
        for i in range(len(self.h.simple_components)):
            dec[self.h.adjoint(i)] -= 1
        if self.h.torus_rank:
            dec[self.h.trivial()] -= self.h.torus_rank
        return {w: m for w, m in dec.items() if m}


# ---------------------------------------------------------------------------
# construction from a defining module

def _defining_dimension(t: LieType) -> int:
    if t.series == "A":
        return t.rank + 1
    if t.series == "B":
        return 2 * t.rank + 1
    if t.series in "CD":
        return 2 * t.rank
    raise EmbeddingError(f"{t} has no defining representation")


def defining_weights(h: SubalgebraSpec, defining: Iterable[tuple[HWeight, int]]):
    out = []
    for w, m in defining:
        for flat, k in h.full_weights(w):
            out.extend([flat] * (k * m))
    return out


def restriction_from_defining(g_type, h: SubalgebraSpec, defining: Iterable[tuple[HWeight, int]]
                              ) -> EmbeddingSpec:
    """Embedding of h in su(N), so(N) or sp(N/2) through a defining h-module.

    The weights of the module are sorted in decreasing lexicographic order and
    the leading ones are matched with the epsilon-coordinates of g.
    """
    t = g_type if isinstance(g_type, LieType) else LieType.parse(str(g_type))
    defining = tuple((h.make(w), int(m)) for w, m in defining)
    weights = defining_weights(h, defining)
    n = _defining_dimension(t)
    if len(weights) != n:
        raise EmbeddingError(f"defining module has dimension {len(weights)}, {t} needs {n}")
    rank_h = h.rank
    weights.sort(reverse=True)
    if t.series == "A":
        total = [sum(w[i] for w in weights) for i in range(rank_h)]
        if any(total[: h.semisimple_rank]) or any(total[h.semisimple_rank:]):
            raise EmbeddingError("weights of a unitary defining module must sum to zero")
        eps = weights
    else:
        from collections import Counter
        cnt = Counter(weights)
        for w, k in cnt.items():
            if cnt.get(tuple(-x for x in w), 0) != k:
                raise EmbeddingError("defining module of an orthogonal or symplectic "
                                     "algebra must be self-dual")
        eps = weights[: t.rank]
    r = t.rank
    cols: list[list[Fraction]] = []
    for k in range(1, r + 1):
        if t.series in "BD" and k == r:
            sign = [1] * r
            col = [Fraction(sum(s * w[i] for s, w in zip(sign, eps)), 2) for i in range(rank_h)]
        elif t.series == "D" and k == r - 1:
            sign = [1] * (r - 1) + [-1]
            col = [Fraction(sum(s * w[i] for s, w in zip(sign, eps)), 2) for i in range(rank_h)]
        else:
            col = [Fraction(sum(w[i] for w in eps[:k])) for i in range(rank_h)]
        cols.append(col)
    R = [[cols[k][i] for k in range(r)] for i in range(rank_h)]
    ss = h.semisimple_rank
    for row in R[:ss]:
        if any(x.denominator != 1 for x in row):
            raise EmbeddingError("spin weights restrict to non-integral weights of the "
                                 "semisimple part")
    den = 1
    for row in R[ss:]:
        for x in row:
            den = lcm(den, x.denominator)
    if den > 1:
        # refine the torus lattice so that every g-weight restricts integrally
        R = R[:ss] + [[x * den for x in row] for row in R[ss:]]
        defining = tuple((w[:-1] + (tuple(den * x for x in w[-1]),), m) for w, m in defining)
    emb = EmbeddingSpec(t, h, [[int(x) for x in row] for row in R], defining=defining)
    return emb


def adjoint_from_defining(t: LieType, h: SubalgebraSpec, defining) -> HDecomposition:
    """Adjoint module of su/so/sp restricted to h, from tensor algebra of V."""
    V = {}
    for w, m in defining:
        V[w] = V.get(w, 0) + m
    out: HDecomposition = {}

    def add(d, times=1):
        for w, m in d.items():
            out[w] = out.get(w, 0) + times * m

    if t.series == "A":
        for a, ma in V.items():
            for b, mb in V.items():
                add(h.tensor(a, h.dual(b)), ma * mb)
        out[h.trivial()] -= 1
    elif t.series in "BD":
        items = sorted(V.items())
        for i, (a, ma) in enumerate(items):
            add(h.alt2(a), ma)
            if ma > 1:
                add(h.tensor(a, a), ma * (ma - 1) // 2)
            for b, mb in items[i + 1:]:
                add(h.tensor(a, b), ma * mb)
    else:
        add(h.sym2_of_module(V))
    out = {w: m for w, m in out.items() if m}
    if h.decomposition_dim(out) != root_system(t).dim:
        raise EmbeddingError("restricted adjoint module has the wrong dimension")
    return out


def compose(outer: EmbeddingSpec, h: SubalgebraSpec, inner: Sequence[Sequence[int]]) -> EmbeddingSpec:
    """Chain h -> k -> g where ``inner`` is the restriction matrix of h in k."""
    R = linalg.matmul(inner, outer.restriction)
    return EmbeddingSpec(outer.g, h, R)
