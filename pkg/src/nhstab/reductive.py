"""Modules of a compact reductive algebra h = h_1 + ... + h_k + z.

An irreducible h-module is labelled by an ``HWeight``: a tuple with one
dominant weight per simple component followed by the integer torus weight,
e.g. ``((1, 0), (2,), (3, -1))`` for two simple factors and a rank-2 torus.
Decompositions are dicts {HWeight: multiplicity}.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import prod
from typing import Iterable, Mapping, Sequence

from . import characters as ch
from .rootsystem import LieType, RootSystemData, build_root_system, dual_weight, weyl_dim

HWeight = tuple[tuple[int, ...], ...]
HDecomposition = dict[HWeight, int]


@dataclass(frozen=True)
class SubalgebraSpec:
    simple_components: tuple[LieType, ...]
    torus_rank: int = 0

    def __post_init__(self):
        object.__setattr__(self, "simple_components", tuple(self.simple_components))
        if self.torus_rank < 0:
            raise ValueError("torus rank must be nonnegative")
        if not self.simple_components and self.torus_rank == 0:
            raise ValueError("subalgebra needs a simple component or a torus")

    def __str__(self):
        parts = [str(t) for t in self.simple_components]
        if self.torus_rank:
            parts.append(f"T{self.torus_rank}")
        return "+".join(parts)

    @cached_property
    def root_systems(self) -> tuple[RootSystemData, ...]:
        return tuple(build_root_system(t) for t in self.simple_components)

    @property
    def rank(self) -> int:
        return sum(t.rank for t in self.simple_components) + self.torus_rank

    @property
    def dim(self) -> int:
        return sum(rs.dim for rs in self.root_systems) + self.torus_rank

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out = [0]
        for t in self.simple_components:
            out.append(out[-1] + t.rank)
        return tuple(out)

    @cached_property
    def semisimple_rank(self) -> int:
        return self.offsets[-1]

    # weights -----------------------------------------------------------
    def split(self, flat: Sequence[int]) -> HWeight:
        off = self.offsets
        parts = [tuple(flat[off[i]:off[i + 1]]) for i in range(len(self.simple_components))]
        parts.append(tuple(flat[off[-1]:]))
        return tuple(parts)

    def flatten(self, w: HWeight) -> tuple[int, ...]:
        return tuple(x for part in w for x in part)

    def trivial(self) -> HWeight:
        return tuple((0,) * t.rank for t in self.simple_components) + ((0,) * self.torus_rank,)

    def adjoint(self, i: int) -> HWeight:
        parts = list(self.trivial())
        parts[i] = self.root_systems[i].adjoint_weight
        return tuple(parts)

    def make(self, parts: Iterable) -> HWeight:
        parts = [tuple(int(x) for x in p) for p in parts]
        if len(parts) == len(self.simple_components):
            parts.append((0,) * self.torus_rank)
        if len(parts) != len(self.simple_components) + 1:
            raise ValueError(f"wrong number of components for {self}")
        for p, t in zip(parts, self.simple_components):
            if len(p) != t.rank or min(p, default=0) < 0:
                raise ValueError(f"bad component weight {p} for {t}")
        if len(parts[-1]) != self.torus_rank:
            raise ValueError(f"torus weight {parts[-1]} has wrong length")
        return tuple(parts)

    def dim_of(self, w: HWeight) -> int:
        return prod(weyl_dim(rs, lam) for rs, lam in zip(self.root_systems, w))

    def dual(self, w: HWeight) -> HWeight:
        parts = [dual_weight(rs, lam) for rs, lam in zip(self.root_systems, w)]
        parts.append(tuple(-x for x in w[-1]))
        return tuple(parts)

    def is_trivial(self, w: HWeight) -> bool:
        return not any(x for part in w for x in part)

    def height(self, w: HWeight) -> int:
        return sum(rs.weight_height(lam) for rs, lam in zip(self.root_systems, w))

    # characters --------------------------------------------------------
    def dominant_character(self, w: HWeight) -> dict:
        return _product_character(self, w)

    def decomposition_dim(self, dec: Mapping[HWeight, int]) -> int:
        return sum(m * self.dim_of(w) for w, m in dec.items())

    def decompose_dominant(self, acc: Mapping[tuple, int]) -> HDecomposition:
        """Decompose a character given by its h-dominant weights.

        Keys of ``acc`` are flat weight vectors (semisimple coordinates then
        torus coordinates) or HWeights.
        """
        groups: dict[tuple, dict] = {}
        for key, m in acc.items():
            if not m:
                continue
            w = key if (key and isinstance(key[0], tuple)) else self.split(key)
            groups.setdefault(w[-1], {})[w[:-1]] = m
        out: HDecomposition = {}
        for torus, rest in groups.items():
            heap = [(-self.height(w), w) for w in rest]
            heapq.heapify(heap)
            while heap:
                _, top = heapq.heappop(heap)
                m = rest.get(top, 0)
                if m == 0:
                    continue
                if m < 0:
                    raise ch.NotACharacter(f"negative multiplicity {m} at {top}")
                hw = top + (torus,)
                out[hw] = out.get(hw, 0) + m
                for mu, k in self.dominant_character(hw).items():
                    left = rest.get(mu[:-1], 0) - m * k
                    if left < 0:
                        raise ch.NotACharacter(f"negative multiplicity {left} at {mu}")
                    rest[mu[:-1]] = left
        return out

    def full_weights(self, w: HWeight) -> list[tuple[tuple[int, ...], int]]:
        """All weights (flat) of the irreducible module w with multiplicities."""
        per = [ch.weight_list(rs, lam) for rs, lam in zip(self.root_systems, w)]
        out = []
        for combo in itertools.product(*per):
            flat = []
            m = 1
            for nu, k in combo:
                flat.extend(nu)
                m *= k
            flat.extend(w[-1])
            out.append((tuple(flat), m))
        return out

    # tensor operations -------------------------------------------------
    def tensor(self, a: HWeight, b: HWeight) -> HDecomposition:
        pieces = [ch.tensor_decompose(rs, x, y) for rs, x, y in zip(self.root_systems, a, b)]
        torus = tuple(x + y for x, y in zip(a[-1], b[-1]))
        return _combine(pieces, torus)

    def sym2(self, a: HWeight) -> HDecomposition:
        return self._square(a, even=True)

    def alt2(self, a: HWeight) -> HDecomposition:
        return self._square(a, even=False)

    def _square(self, a: HWeight, even: bool) -> HDecomposition:
        torus = tuple(2 * x for x in a[-1])
        k = len(self.simple_components)
        sym = [ch.sym2_decompose(rs, x) for rs, x in zip(self.root_systems, a)]
        alt = [ch.alt2_decompose(rs, x) for rs, x in zip(self.root_systems, a)]
        out: HDecomposition = {}
        for choice in itertools.product((0, 1), repeat=k):
            if (sum(choice) % 2 == 0) != even:
                continue
            pieces = [alt[i] if c else sym[i] for i, c in enumerate(choice)]
            for w, m in _combine(pieces, torus).items():
                out[w] = out.get(w, 0) + m
        return out

    def sym2_of_module(self, dec: Mapping[HWeight, int]) -> HDecomposition:
        items = sorted(dec.items())
        out: HDecomposition = {}

        def add(d, times):
            for w, m in d.items():
                out[w] = out.get(w, 0) + times * m

        for i, (a, ma) in enumerate(items):
            add(self.sym2(a), ma)
            if ma > 1:
                add(self.tensor(a, a), ma * (ma - 1) // 2)
            for b, mb in items[i + 1:]:
                add(self.tensor(a, b), ma * mb)
        out = {w: m for w, m in out.items() if m}
        d = self.decomposition_dim(dec)
        if self.decomposition_dim(out) != d * (d + 1) // 2:
            raise ArithmeticError("Sym^2 dimension mismatch on the subalgebra side")
        return out


def _combine(pieces, torus) -> HDecomposition:
    out: HDecomposition = {}
    for combo in itertools.product(*[list(p.items()) for p in pieces]):
        w = tuple(lam for lam, _ in combo) + (torus,)
        m = prod(k for _, k in combo)
        out[w] = out.get(w, 0) + m
    return out


@lru_cache(maxsize=65536)
def _product_character(h: SubalgebraSpec, w: HWeight) -> dict:
    per = [list(ch.dominant_character(rs, lam).items()) for rs, lam in zip(h.root_systems, w)]
    out = {}
    for combo in itertools.product(*per):
        key = tuple(mu for mu, _ in combo) + (w[-1],)
        out[key] = prod(k for _, k in combo)
    return out


def format_hweight(h: SubalgebraSpec, w: HWeight) -> str:
    parts = []
    for t, lam in zip(h.simple_components, w):
        parts.append(f"{t}{list(lam)}")
    if h.torus_rank:
        parts.append(f"z{list(w[-1])}")
    return " ".join(parts)
