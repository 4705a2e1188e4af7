"""Root systems of the simple types A-G, weight-lattice inner products,
Casimir constants and the Weyl dimension formula.

Weights are plain integer tuples of coefficients over the fundamental
weights (Bourbaki node ordering). The Cartan matrix convention is
``C[i][j] = 2 (a_i, a_j) / (a_j, a_j)`` so that row ``i`` of ``C`` is the simple
root ``a_i`` written in fundamental-weight coordinates.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm, prod
from typing import Iterable

from . import linalg

Weight = tuple[int, ...]

_VALID_RANKS = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 3,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


class InvalidLieType(ValueError):
    pass


class NotDominant(ValueError):
    pass


@dataclass(frozen=True, order=True)
class LieType:
    series: str
    rank: int

    def __post_init__(self):
        check = _VALID_RANKS.get(self.series)
        if check is None or not isinstance(self.rank, int) or not check(self.rank):
            raise InvalidLieType(f"invalid simple type {self.series}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        text = text.strip()
        try:
            return cls(text[0].upper(), int(text[1:]))
        except (IndexError, ValueError) as exc:
            raise InvalidLieType(f"cannot parse Lie type {text!r}") from exc

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


def _symmetric_form(t: LieType) -> list[list[int]]:
    """Gram matrix of the simple roots of an exceptional type, short roots of
    squared length 2."""
    n = t.rank
    b = [[0] * n for _ in range(n)]
    if t.series == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, n - 1)]
        for i in range(n):
            b[i][i] = 2
        for i, j in edges:
            b[i][j] = b[j][i] = -1
        return b
    if t.series == "F":
        return [[4, -2, 0, 0], [-2, 4, -2, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
    if t.series == "G":
        return [[2, -3], [-3, 6]]
    raise InvalidLieType(f"dense form only built for exceptional types, not {t}")


def _classical_gram(t: LieType) -> list[list[Fraction]]:
    """Gram matrix of the fundamental weights from their epsilon coordinates."""
    n = t.rank
    g = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            m = min(i, j)
            if t.series == "A":
                v = Fraction(m) - Fraction(i * j, n + 1)
            elif t.series == "B":
                if i < n and j < n:
                    v = Fraction(2 * m)
                elif i == n and j == n:
                    v = Fraction(n, 2)
                else:
                    v = Fraction(m)
            elif t.series == "C":
                v = Fraction(m)
            else:
                if i <= n - 2 and j <= n - 2:
                    v = Fraction(m)
                elif i <= n - 2 or j <= n - 2:
                    v = Fraction(m, 2)
                elif i == j:
                    v = Fraction(n, 4)
                else:
                    v = Fraction(n - 2, 4)
            g[i - 1][j - 1] = v
    return g


def _classical_positive_roots(t: LieType) -> list[tuple[int, ...]]:
    """Positive roots in simple-root coordinates, epsilon-style enumeration."""
    n = t.rank

    def vec(pairs):
        v = [0] * n
        for k, c in pairs:
            v[k] += c
        return tuple(v)

    def span(a, b, c=1):
        return [(k, c) for k in range(a, b)]

    roots = []
    if t.series == "A":
        for i in range(n):
            for j in range(i + 1, n + 1):
                roots.append(vec(span(i, j)))
        return roots
    for i in range(n):
        for j in range(i + 1, n):
            roots.append(vec(span(i, j)))  # e_i - e_j
    if t.series == "B":
        for i in range(n):
            roots.append(vec(span(i, n)))  # e_i
            for j in range(i + 1, n):
                roots.append(vec(span(i, j) + span(j, n, 2)))
    elif t.series == "C":
        for i in range(n):
            roots.append(vec(span(i, n - 1, 2) + [(n - 1, 1)]))  # 2 e_i
            for j in range(i + 1, n):
                roots.append(vec(span(i, j) + span(j, n - 1, 2) + [(n - 1, 1)]))
    else:
        for i in range(n):
            for j in range(i + 1, n):
                if j == n - 1:
                    roots.append(vec(span(i, n - 2) + [(n - 1, 1)]))
                else:
                    roots.append(vec(span(i, j) + span(j, n - 2, 2) + [(n - 2, 1), (n - 1, 1)]))
    return roots


def _string_positive_roots(cartan) -> list[tuple[int, ...]]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = list(simple)
    known = set(roots)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                pairing = sum(beta[j] * cartan[j][i] for j in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        roots.append(up)
                        nxt.append(up)
        layer = nxt
    return roots


def _classical_highest_root(t: LieType) -> Weight:
    n = t.rank
    w = [0] * n
    if t.series == "A":
        if n == 1:
            w[0] = 2
        else:
            w[0] += 1
            w[-1] += 1
    elif t.series == "B":
        if n == 2:
            w[1] = 2
        else:
            w[1] = 1
    elif t.series == "C":
        w[0] = 2
    else:
        if n == 3:
            w[1] = w[2] = 1
        else:
            w[1] = 1
    return tuple(w)


class RootSystemData:
    """Immutable root-system tables for one simple type.

    The Cartan matrix, root lengths and the Gram matrix of fundamental
    weights are built eagerly (closed forms for the classical series); the
    list of positive roots and the tables derived from it are computed on
    first use, which keeps very large classical ranks cheap when only inner
    products are needed.
    """

    def __init__(self, t: LieType):
        self.lie_type = t
        n = t.rank
        b = _symmetric_form(t) if t.series in "EFG" else _symmetric_form_sparse(t)
        self.cartan = tuple(tuple(2 * b[i][j] // b[j][j] for j in range(n)) for i in range(n))
        self.root_lengths = tuple(b[i][i] // 2 for i in range(n))
        d = self.root_lengths
        if t.series in "ABCD":
            gram = _classical_gram(t)
        else:
            cinv = linalg.inverse(self.cartan)
            gram = [[cinv[i][j] * d[j] for j in range(n)] for i in range(n)]
        self.gram = tuple(tuple(row) for row in gram)
        self.cartan_inv = tuple(tuple(gram[i][j] / d[j] for j in range(n)) for i in range(n))
        den = 1
        for row in gram:
            for x in row:
                den = lcm(den, x.denominator)
        self.gram_den = den
        self.gram_int = tuple(tuple(int(x * den) for x in row) for row in gram)
        hvec = [sum(row) for row in self.cartan_inv]
        hden = 1
        for x in hvec:
            hden = lcm(hden, x.denominator)
        self.height = tuple(int(x * hden) for x in hvec)
        if t.series in "ABCD":
            self.adjoint_weight = _classical_highest_root(t)
        else:
            self.adjoint_weight = max(self.positive_roots, key=self.weight_height)
        adj = self.adjoint_weight
        self.adjoint_raw = self.inner(adj, [a + 2 for a in adj])

    def __repr__(self):
        return f"RootSystemData({self.lie_type})"

    def __hash__(self):
        return hash(self.lie_type)

    def __eq__(self, other):
        return isinstance(other, RootSystemData) and other.lie_type == self.lie_type

    def __reduce__(self):
        return (build_root_system, (self.lie_type,))

    @cached_property
    def root_coords(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots in simple-root coordinates, sorted by height."""
        t = self.lie_type
        if t.series in "ABCD":
            roots = _classical_positive_roots(t)
        else:
            roots = _string_positive_roots(self.cartan)
        roots.sort(key=lambda r: (sum(r), r))
        return tuple(roots)

    @cached_property
    def positive_roots(self) -> tuple[Weight, ...]:
        n = self.rank
        cartan = self.cartan
        out = []
        for r in self.root_coords:
            w = [0] * n
            for j, c in enumerate(r):
                if c:
                    row = cartan[j]
                    for k in range(n):
                        w[k] += c * row[k]
            out.append(tuple(w))
        return tuple(out)

    @cached_property
    def root_half_norms(self) -> tuple[int, ...]:
        # (alpha, alpha)/2 = sum_j b_j d_j <alpha, alpha_j^vee> / 2 ... computed from coords
        d = self.root_lengths
        out = []
        for r, w in zip(self.root_coords, self.positive_roots):
            # (alpha, alpha) = sum_j b_j (alpha, alpha_j) and (alpha, alpha_j) = d_j * w_j
            out.append(sum(b * dj * x for b, dj, x in zip(r, d, w)) // 2)
        return tuple(out)

    @cached_property
    def coroot_pairing(self) -> tuple[tuple[int, ...], ...]:
        """Rows k with <lam, alpha^vee> = sum_i k_i lam_i for each positive root."""
        d = self.root_lengths
        out = []
        for r, hn in zip(self.root_coords, self.root_half_norms):
            row = []
            for i, b in enumerate(r):
                num = b * d[i]
                if num % hn:
                    raise ArithmeticError("non-integral coroot coefficient")
                row.append(num // hn)
            out.append(tuple(row))
        return tuple(out)

    @cached_property
    def coroot_sparse(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        return tuple(tuple((i, c) for i, c in enumerate(row) if c) for row in self.coroot_pairing)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def dim(self) -> int:
        t = self.lie_type
        n = t.rank
        if t.series == "A":
            return n * (n + 2)
        if t.series in "BC":
            return n * (2 * n + 1)
        if t.series == "D":
            return n * (2 * n - 1)
        return 2 * len(self.root_coords) + n

    @property
    def zero(self) -> Weight:
        return (0,) * self.rank

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def fundamental(self, i: int) -> Weight:
        """The fundamental weight omega_i, 1-based as in the tables."""
        return tuple(int(k == i - 1) for k in range(self.rank))

    def inner(self, x, y) -> Fraction:
        """Symmetric inner product of two weights in fundamental coordinates."""
        x = tuple(x)
        y = tuple(y)
        total = 0
        for xi, row in zip(x, self.gram_int):
            if xi:
                total += xi * sum(g * yj for g, yj in zip(row, y) if yj)
        return Fraction(total, self.gram_den)

    def to_root_coords(self, w) -> tuple[Fraction, ...]:
        n = self.rank
        return tuple(sum(self.cartan_inv[j][i] * w[j] for j in range(n)) for i in range(n))

    def weight_height(self, w) -> int:
        """Integer linear functional strictly increasing along every positive root."""
        return sum(h * x for h, x in zip(self.height, w))

    def is_dominant(self, w) -> bool:
        return all(x >= 0 for x in w)


def _symmetric_form_sparse(t: LieType) -> dict:
    """Simple-root Gram matrix of a classical type, stored as sparse rows."""

    class Band(dict):
        def __missing__(self, key):
            return 0

    n = t.rank
    rows = [Band() for _ in range(n)]
    long_sq = {"A": 2, "B": 4, "C": 2, "D": 2}[t.series]
    for i in range(n):
        rows[i][i] = long_sq
    for i in range(n - 1):
        rows[i][i + 1] = rows[i + 1][i] = -long_sq // 2
    if t.series == "A":
        rows[n - 1][n - 1] = 2
    elif t.series == "B":
        rows[n - 1][n - 1] = 2
        rows[n - 2][n - 1] = rows[n - 1][n - 2] = -2
    elif t.series == "C":
        rows[n - 1][n - 1] = 4
        rows[n - 2][n - 1] = rows[n - 1][n - 2] = -2
    else:
        rows[n - 1][n - 1] = 2
        rows[n - 2][n - 1] = rows[n - 1][n - 2] = 0
        rows[n - 3][n - 1] = rows[n - 1][n - 3] = -1
    return rows


@lru_cache(maxsize=None)
def build_root_system(t: LieType) -> RootSystemData:
    if not isinstance(t, LieType):
        t = LieType.parse(str(t))
    return RootSystemData(t)


def root_system(spec) -> RootSystemData:
    """Accept a ``RootSystemData``, ``LieType`` or a string like ``'G2'``."""
    if isinstance(spec, RootSystemData):
        return spec
    if isinstance(spec, LieType):
        return build_root_system(spec)
    return build_root_system(LieType.parse(spec))


def _check_dominant(rs: RootSystemData, lam) -> Weight:
    lam = tuple(int(x) for x in lam)
    if len(lam) != rs.rank:
        raise ValueError(f"weight {lam} has wrong length for {rs.lie_type}")
    if any(x < 0 for x in lam):
        raise NotDominant(f"weight {lam} is not dominant")
    return lam


def raw_casimir(rs: RootSystemData, lam) -> Fraction:
    """<lam, lam + 2 rho> in the symmetric form with short roots of length 2."""
    lam = _check_dominant(rs, lam)
    shifted = [x + 2 for x in lam]
    total = sum(x * sum(g * y for g, y in zip(row, shifted)) for x, row in zip(lam, rs.gram_int))
    return Fraction(total, rs.gram_den)


def casimir_normalized(rs: RootSystemData, lam) -> Fraction:
    """Casimir constant for the inner product minus the Killing form."""
    return raw_casimir(rs, lam) / rs.adjoint_raw


def weyl_dim(rs: RootSystemData, lam) -> int:
    return _weyl_dim(rs, _check_dominant(rs, lam))


@lru_cache(maxsize=1 << 18)
def _weyl_dim(rs: RootSystemData, lam: Weight) -> int:
    num = 1
    den = 1
    for k in rs.coroot_sparse:
        num *= sum(c * (lam[i] + 1) for i, c in k)
        den *= sum(c for _, c in k)
    if num % den:
        raise ArithmeticError("Weyl dimension formula gave a non-integer")
    return num // den


def dual_weight(rs: RootSystemData, lam) -> Weight:
    """Highest weight of the dual module, -w0(lam)."""
    lam = tuple(lam)
    t = rs.lie_type
    if t.series == "A":
        return lam[::-1]
    if t.series == "D" and t.rank % 2 == 1:
        return lam[:-2] + (lam[-1], lam[-2])
    if t.series == "E" and t.rank == 6:
        a1, a2, a3, a4, a5, a6 = lam
        return (a6, a2, a5, a4, a3, a1)
    return lam


def dominant_weights_up_to(rs: RootSystemData, bound) -> set[Weight]:
    """All dominant weights whose normalized Casimir is at most ``bound``.

    Breadth-first from zero adding single fundamental weights; the Casimir is
    strictly increasing along such steps, so pruning at the bound is exact.
    """
    bound = Fraction(bound)
    if bound < 0:
        return set()
    start = rs.zero
    seen = {start}
    queue = deque([start])
    while queue:
        lam = queue.popleft()
        for i in range(rs.rank):
            nxt = lam[:i] + (lam[i] + 1,) + lam[i + 1:]
            if nxt in seen:
                continue
            if casimir_normalized(rs, nxt) <= bound:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def dominant_chamber(rs: RootSystemData, w: Iterable[int]) -> Weight:
    """Dominant representative of the Weyl orbit of ``w``."""
    w = list(w)
    cartan = rs.cartan
    n = rs.rank
    while True:
        for i in range(n):
            if w[i] < 0:
                c = w[i]
                row = cartan[i]
                for j in range(n):
                    w[j] -= c * row[j]
                break
        else:
            return tuple(w)


def weyl_group_order(rs: RootSystemData) -> int:
    """Product of the degrees, via heights of the positive roots."""
    num = prod(sum(r) + 1 for r in rs.root_coords)
    den = prod(sum(r) for r in rs.root_coords)
    return num // den
