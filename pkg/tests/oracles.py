"""Slow, independent reference computations for the property tests.

Weight multiplicities come from Kostant's formula, an alternating sum over
the Weyl group of partition-function values. Nothing here calls the
Freudenthal recursion, the Klimyk accumulation or the orbit kernels.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from nhstab.rootsystem import casimir_normalized, dual_weight, weyl_dim


def weyl_group_signed(rs, regular):
    """{w(x): sign(w)} for a regular dominant x, by breadth-first reflection."""
    cartan = rs.cartan
    n = rs.rank
    start = tuple(regular)
    out = {start: 1}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(n):
                y = tuple(a - x[i] * c for a, c in zip(x, cartan[i]))
                if y not in out:
                    out[y] = -out[x]
                    nxt.append(y)
        frontier = nxt
    return out


def to_root_coords(rs, w):
    coords = [sum(Fraction(w[j]) * rs.cartan_inv[j][i] for j in range(rs.rank)) for i in range(rs.rank)]
    return coords


def partition_function(rs):
    """Number of ways to write an element of the root lattice (in simple-root
    coordinates) as a sum of positive roots."""
    roots = [tuple(r) for r in rs.root_coords]

    @lru_cache(maxsize=None)
    def P(v, k):
        if all(x == 0 for x in v):
            return 1
        if k == len(roots) or any(x < 0 for x in v):
            return 0
        total = 0
        r = roots[k]
        cur = v
        while all(x >= 0 for x in cur):
            total += P(cur, k + 1)
            cur = tuple(a - b for a, b in zip(cur, r))
        return total

    return lambda v: P(tuple(v), 0)


def kostant_character(rs, lam) -> dict:
    """Full character {weight: multiplicity} of V_lam."""
    W = weyl_group_signed(rs, [a + 1 for a in lam])
    P = partition_function(rs)
    # candidate weights: lam minus nonnegative root combinations, inside the box
    out = {}
    for mu in weights_in_box(rs, lam):
        total = 0
        for x, sign in W.items():
            diff = [a - b - 1 for a, b in zip(x, mu)]
            rc = to_root_coords(rs, diff)
            if any(c.denominator != 1 or c < 0 for c in rc):
                continue
            total += sign * P([int(c) for c in rc])
        if total:
            out[tuple(mu)] = total
    return out


def weights_in_box(rs, lam):
    """Every weight lam - sum(k_i alpha_i) with 0 <= k_i <= bound."""
    lam = tuple(lam)
    # the lowest weight is -lam*, so k_i runs up to the coordinates of lam + lam*
    bound = [int(a + b) for a, b in zip(to_root_coords(rs, lam), to_root_coords(rs, dual_weight(rs, lam)))]
    for ks in itertools.product(*(range(b + 1) for b in bound)):
        mu = list(lam)
        for i, k in enumerate(ks):
            for j in range(rs.rank):
                mu[j] -= k * rs.cartan[i][j]
        yield tuple(mu)


def dominant_box(rs, bound):
    """Dominant weights with normalized Casimir <= bound, by scanning a box."""
    out = set()
    n = rs.rank
    # Casimir grows at least linearly in each coordinate; find a safe box edge
    edge = 0
    while True:
        edge += 1
        if all(casimir_normalized(rs, tuple(edge if j == i else 0 for j in range(n))) > bound
               for i in range(n)):
            break
    for lam in itertools.product(range(edge + 1), repeat=n):
        if casimir_normalized(rs, lam) <= bound:
            out.add(lam)
    return out


def small_weights(rs, max_dim):
    """Dominant weights with Weyl dimension at most max_dim."""
    out = []
    n = rs.rank
    edge = 0
    while any(weyl_dim(rs, tuple(edge if j == i else 0 for j in range(n))) <= max_dim for i in range(n)):
        edge += 1
    for lam in itertools.product(range(edge + 1), repeat=n):
        if weyl_dim(rs, lam) <= max_dim:
            out.append(lam)
    return out
