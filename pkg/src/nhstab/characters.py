"""Weight multiplicities, characters and decompositions of modules of a
simple Lie algebra.

Characters are kept as dominant characters: a map from each dominant weight
to its multiplicity, the full character being the union of Weyl orbits.
Decompositions map highest weights to multiplicities.
"""

from __future__ import annotations

import heapq
from collections import Counter
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from . import kernels
from .rootsystem import (
    RootSystemData,
    Weight,
    _check_dominant,
    dominant_chamber,
    weyl_dim,
)

Decomposition = dict[Weight, int]


class NotACharacter(ArithmeticError):
    """Negative residue while peeling off irreducibles."""


def _root_tables(rs: RootSystemData):
    pairs = tuple(tuple(sum(rs.gram_int[i][j] * a[j] for j in range(rs.rank)) for i in range(rs.rank))
                  for a in rs.positive_roots)
    sq = tuple(sum(a[i] * p[i] for i in range(rs.rank)) for a, p in zip(rs.positive_roots, pairs))
    return pairs, sq


_tables = lru_cache(maxsize=None)(_root_tables)


@lru_cache(maxsize=None)
def dominant_weights_of(rs: RootSystemData, lam: Weight) -> tuple[Weight, ...]:
    """Dominant weights of V_lam, highest first.

    The dominant weights below a dominant weight are connected by
    subtracting single positive roots without leaving the chamber.
    """
    lam = _check_dominant(rs, lam)
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for alpha in rs.positive_roots:
                nu = tuple(x - a for x, a in zip(mu, alpha))
                if min(nu) >= 0 and nu not in seen:
                    seen.add(nu)
                    nxt.append(nu)
        frontier = nxt
    return tuple(sorted(seen, key=lambda mu: (-rs.weight_height(mu), mu)))


@lru_cache(maxsize=None)
def _dominant_character(rs: RootSystemData, lam: Weight):
    dom = dominant_weights_of(rs, lam)
    pairs, sq = _tables(rs)
    mults = kernels.freudenthal(rs.cartan, lam, dom, rs.positive_roots, pairs, sq, rs.gram_int)
    return MappingProxyType(dict(zip(dom, mults)))


def dominant_character(rs: RootSystemData, lam) -> Mapping[Weight, int]:
    """Read-only map {dominant weight: multiplicity} of V_lam (memoized)."""
    return _dominant_character(rs, _check_dominant(rs, lam))


def weight_multiplicity(rs: RootSystemData, lam, mu) -> int:
    ch = dominant_character(rs, lam)
    return ch.get(dominant_chamber(rs, mu), 0)


def orbit_size(rs: RootSystemData, mu: Weight) -> int:
    return len(kernels.orbit(rs.cartan, mu))


def full_character(rs: RootSystemData, lam) -> dict[Weight, int]:
    """Every weight of V_lam with its multiplicity."""
    out = {}
    for mu, m in dominant_character(rs, lam).items():
        for nu in kernels.orbit(rs.cartan, mu):
            out[nu] = m
    return out


def weight_list(rs: RootSystemData, lam) -> list[tuple[Weight, int]]:
    return [(nu, m) for mu, m in dominant_character(rs, lam).items()
            for nu in kernels.orbit(rs.cartan, mu)]


def decompose_character(rs: RootSystemData, ch: Mapping) -> Decomposition:
    """Split a character into irreducibles by repeatedly removing the module
    generated by a highest remaining weight.

    ``ch`` may be a full weight multiset or only its dominant part; non-dominant
    entries are ignored since a character is Weyl invariant.
    """
    rest = {mu: m for mu, m in ch.items() if m and min(mu) >= 0}
    heap = [(-rs.weight_height(mu), mu) for mu in rest]
    heapq.heapify(heap)
    out: Decomposition = {}
    while heap:
        _, top = heapq.heappop(heap)
        m = rest.get(top, 0)
        if m == 0:
            continue
        if m < 0:
            raise NotACharacter(f"negative multiplicity {m} at {top}")
        out[top] = m
        for mu, k in dominant_character(rs, top).items():
            left = rest.get(mu, 0) - m * k
            if left < 0:
                raise NotACharacter(f"negative multiplicity {left} at {mu}")
            rest[mu] = left
    return out


def decomposition_dim(rs: RootSystemData, dec: Mapping[Weight, int]) -> int:
    return sum(m * weyl_dim(rs, lam) for lam, m in dec.items())


def _cleanup(acc) -> Decomposition:
    out = {}
    for k, v in acc.items():
        if v < 0:
            raise NotACharacter(f"negative coefficient {v} at {k}")
        if v:
            out[k] = v
    return out


@lru_cache(maxsize=65536)
def _tensor(rs: RootSystemData, lam: Weight, mu: Weight):
    if weyl_dim(rs, lam) < weyl_dim(rs, mu):
        lam, mu = mu, lam
    shift = tuple(x + 1 for x in lam)
    acc = kernels.alternating_accumulate(rs.cartan, weight_list(rs, mu), shift, 1, {})
    out = _cleanup(acc)
    if decomposition_dim(rs, out) != weyl_dim(rs, lam) * weyl_dim(rs, mu):
        raise ArithmeticError("tensor product dimension mismatch")
    return MappingProxyType(out)


def tensor_decompose(rs: RootSystemData, lam, mu) -> Decomposition:
    """V_lam (x) V_mu by Klimyk's formula, expanding the smaller factor."""
    lam = _check_dominant(rs, lam)
    mu = _check_dominant(rs, mu)
    if mu < lam:
        lam, mu = mu, lam
    return dict(_tensor(rs, lam, mu))


def adams2_decompose(rs: RootSystemData, lam) -> dict[Weight, int]:
    """Virtual decomposition of the second Adams operation applied to V_lam."""
    lam = _check_dominant(rs, lam)
    acc = kernels.alternating_accumulate(rs.cartan, weight_list(rs, lam), rs.rho, 2, {})
    return {k: v for k, v in acc.items() if v}


@lru_cache(maxsize=16384)
def _sym_alt(rs: RootSystemData, lam: Weight):
    square = tensor_decompose(rs, lam, lam)
    psi = adams2_decompose(rs, lam)
    keys = set(square) | set(psi)
    sym = {}
    alt = {}
    for k in keys:
        s2 = square.get(k, 0) + psi.get(k, 0)
        a2 = square.get(k, 0) - psi.get(k, 0)
        if s2 % 2 or a2 % 2 or s2 < 0 or a2 < 0:
            raise NotACharacter(f"inconsistent symmetric square at {k}")
        if s2:
            sym[k] = s2 // 2
        if a2:
            alt[k] = a2 // 2
    d = weyl_dim(rs, lam)
    if decomposition_dim(rs, sym) != d * (d + 1) // 2 or decomposition_dim(rs, alt) != d * (d - 1) // 2:
        raise ArithmeticError("symmetric/alternating square dimension mismatch")
    return MappingProxyType(sym), MappingProxyType(alt)


def sym2_decompose(rs: RootSystemData, lam) -> Decomposition:
    return dict(_sym_alt(rs, _check_dominant(rs, lam))[0])


def alt2_decompose(rs: RootSystemData, lam) -> Decomposition:
    return dict(_sym_alt(rs, _check_dominant(rs, lam))[1])


def add_into(acc: dict, dec: Mapping, times: int = 1) -> dict:
    for k, v in dec.items():
        acc[k] = acc.get(k, 0) + times * v
    return acc


def sym2_of_module(rs: RootSystemData, dec: Mapping[Weight, int]) -> Decomposition:
    """Sym^2 of a reducible module given by its decomposition."""
    items = sorted(dec.items())
    out: dict = {}
    for i, (lam, a) in enumerate(items):
        add_into(out, sym2_decompose(rs, lam), a)
        if a > 1:
            add_into(out, tensor_decompose(rs, lam, lam), a * (a - 1) // 2)
        for mu, b in items[i + 1:]:
            add_into(out, tensor_decompose(rs, lam, mu), a * b)
    d = decomposition_dim(rs, dec)
    out = {k: v for k, v in out.items() if v}
    if decomposition_dim(rs, out) != d * (d + 1) // 2:
        raise ArithmeticError("Sym^2 dimension mismatch")
    return out


def character_of_decomposition(rs: RootSystemData, dec: Mapping[Weight, int]) -> Counter:
    """Dominant character of a reducible module."""
    out: Counter = Counter()
    for lam, m in dec.items():
        for mu, k in dominant_character(rs, lam).items():
            out[mu] += m * k
    return out
