"""Per-mode lower bounds for the Lichnerowicz Laplacian on symmetric
2-tensors of a normal homogeneous Einstein space, and the resulting
stability verdicts.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import isqrt
from typing import Sequence

from . import characters as ch
from .reductive import HDecomposition, HWeight
from .rootsystem import Weight, casimir_normalized, dominant_weights_up_to
from .spaces import EinsteinData, SpaceSpec, einstein_check

RULED_OUT_EMPTY = "RuledOutEmpty"
RULED_OUT_CURVATURE = "RuledOutCurvature"
RULED_OUT_NO_TT = "RuledOutNoTT"
STABLE_BOUND = "StableBound"
SEMISTABLE_BOUND = "SemistableBound"
POTENTIAL_INSTABILITY = "PotentialInstability"

SUMMARY_SC = "SC"
SUMMARY_SF = "SF"
SUMMARY_SF0 = "SF0"
SUMMARY_UNSTABLE = "PotentialInstabilities"

SQRT_DENOMINATOR = 10 ** 6


@dataclass(frozen=True)
class IsotypeBounds:
    v: HWeight
    cas_h: Fraction
    J: tuple[Weight, ...]
    aa_min: Fraction
    aa_max: Fraction
    kr_min: Fraction
    curvature_safe: bool


@dataclass(frozen=True)
class RefinedTerms:
    """Casimir extrema of one mode.

    ``fiber_min`` is the minimum over the relevant isotypes v of
    min{Cas w : w in J_v} - (3/2) Cas v; it never falls below
    ``min_w - (3/2) max_v`` and is what the isotype-wise bound uses.
    """
    max_v: Fraction
    min_w: Fraction
    max_u: Fraction
    cas_gamma: Fraction
    fiber_min: Fraction

    def as_dict(self):
        return {"max_cas_h_V": self.max_v, "min_cas_g_W": self.min_w,
                "max_cas_g_U": self.max_u, "cas_g_gamma": self.cas_gamma,
                "fiber_min": self.fiber_min}


@dataclass(frozen=True)
class ModeReport:
    gamma: Weight
    cas_g: Fraction
    hom_m: int
    hom_sym: int
    verdict: str
    bound: Fraction | None = None
    refined_terms: RefinedTerms | None = None


@dataclass
class StabilityReport:
    space: str
    einstein: EinsteinData
    cutoff: Fraction
    modes: list[ModeReport]
    summary: str
    instabilities: list[Weight] = field(default_factory=list)
    semistable: list[Weight] = field(default_factory=list)
    partial: bool = False


class StabilityAnalysis:
    """Shared data of one space: isotypes, Casimir bounds and the cutoff.

    Per-mode work is done by :meth:`mode_report`; everything it needs is
    cached on the instance so that worker processes can reuse it.
    """

    def __init__(self, space: SpaceSpec, isotypewise: bool = True, sharp_cutoff: bool = False):
        self.space = space
        self.isotypewise = isotypewise
        self.sharp_cutoff = sharp_cutoff
        self.emb = space.embedding
        self.g = self.emb.g
        self.h = self.emb.h
        self.einstein = einstein_check(space)
        self.E = self.einstein.einstein_constant

    # step 3 -----------------------------------------------------------
    @cached_property
    def sym2_m(self) -> HDecomposition:
        dec = self.h.sym2_of_module(self.einstein.isotropy)
        return _remove_trivial(dec, self.h.trivial())

    @cached_property
    def sym2_g(self) -> dict:
        dec = ch.sym2_decompose(self.g, self.g.adjoint_weight)
        return _remove_trivial(dec, self.g.zero)

    def sym2_isotypes(self):
        return sorted(self.sym2_m), sorted(self.sym2_g)

    def cas_g(self, lam) -> Fraction:
        return casimir_normalized(self.g, lam)

    # steps 4-5 --------------------------------------------------------
    @cached_property
    def w_branches(self) -> dict:
        return {w: self.emb.branch(w) for w in sorted(self.sym2_g)}

    @cached_property
    def bounds(self) -> list[IsotypeBounds]:
        E = self.E
        out = []
        for v in sorted(self.sym2_m):
            J = tuple(w for w, br in self.w_branches.items() if br.get(v))
            if not J:
                raise ArithmeticError(f"isotype {v} of Sym^2_0 m occurs in no isotype of Sym^2_0 g")
            cas = self.emb.casimir_h(v)
            cas_w = [self.cas_g(w) for w in J]
            aa_min = max(Fraction(0), min(cas_w) - cas - 4 * E + 1)
            aa_max = max(cas_w) - cas - 4 * E + 1
            kr_min = cas + aa_min / 4
            out.append(IsotypeBounds(v, cas, J, aa_min, aa_max, kr_min, kr_min > E))
        return out

    def aa_and_curvature_bounds(self) -> list[IsotypeBounds]:
        return self.bounds

    @cached_property
    def _bounds_by_v(self):
        return {b.v: b for b in self.bounds}

    @cached_property
    def unsafe(self) -> frozenset:
        return frozenset(b.v for b in self.bounds if not b.curvature_safe)

    # steps 7-8 --------------------------------------------------------
    @cached_property
    def crude_parameters(self) -> tuple[Fraction, Fraction, Fraction]:
        """(a, b, c) of the crude estimate.

        By default a uses the unclamped lower bounds for A*A and c is the
        minimum of Cas^h over all of Sym^2 m, which is 0 (the metric itself).
        ``sharp_cutoff`` clamps a at 0 and takes c over Sym^2_0 m; both give
        valid cutoffs, the sharp one a smaller candidate set.
        """
        bmax = max(Fraction(0), max(b.aa_max for b in self.bounds))
        if self.sharp_cutoff:
            a = min(b.aa_min for b in self.bounds) / 2
            c = min(b.cas_h for b in self.bounds)
        else:
            a = min(min(self.cas_g(w) for w in b.J) - b.cas_h - 4 * self.E + 1 for b in self.bounds) / 2
            c = Fraction(0)
        return a, bmax, c

    @cached_property
    def cutoff(self) -> Fraction:
        a, b, c = self.crude_parameters
        return crude_cutoff_value(a, b, c, self.E)

    def crude_holds(self, x: Fraction) -> bool:
        """Exact check of x + a - sqrt(b max(0, x - c)) > 2E."""
        a, b, c = self.crude_parameters
        return crude_holds(x, a, b, c, self.E)

    def candidate_modes(self, cutoff: Fraction | None = None) -> list[Weight]:
        C = self.cutoff if cutoff is None else cutoff
        modes = dominant_weights_up_to(self.g, max(C, Fraction(0)))
        return sorted(modes, key=lambda lam: (self.cas_g(lam), lam))

    # step 9 -----------------------------------------------------------
    def tt_difference(self, gamma) -> int:
        br = self.emb.branch(gamma)
        hom_m = sum(m * self.einstein.isotropy.get(w, 0) for w, m in br.items())
        hom_sym = sum(m * self.sym2_m.get(w, 0) for w, m in br.items())
        return hom_sym - hom_m

    def tt_check(self, gamma) -> bool:
        """True if the mode carries no tt-tensors."""
        if self.space.sphere:
            raise ValueError("the tt criterion does not apply to round spheres")
        gamma = tuple(gamma)
        diff = self.tt_difference(gamma)
        target = -1 if gamma == self.g.adjoint_weight else 0
        if diff < target:
            raise ArithmeticError(f"Hom dimension difference {diff} at {gamma} is below {target}")
        return diff == target

    def refined_terms(self, gamma) -> RefinedTerms:
        gamma = tuple(gamma)
        br = self.emb.branch(gamma)
        V = [v for v in self.sym2_m if br.get(v)]
        if not V:
            raise ValueError(f"mode {gamma} has no Fourier coefficients in Sym^2_0 m")
        Vset = set(V)
        max_v = max(self._bounds_by_v[v].cas_h for v in V)
        W = [w for w, wbr in self.w_branches.items() if any(wbr.get(v) for v in Vset)]
        min_w = min(self.cas_g(w) for w in W)
        fiber_min = min(min(self.cas_g(w) for w in self._bounds_by_v[v].J)
                        - Fraction(3, 2) * self._bounds_by_v[v].cas_h for v in V)
        pieces: dict = {}
        for w in W:
            for u in ch.tensor_decompose(self.g, gamma, w):
                pieces[u] = self.cas_g(u)
        max_u = None
        # largest Casimir first; stop at the first piece with H-invariants
        for u in sorted(pieces, key=lambda u: (-pieces[u], u)):
            if self.emb.trivial_multiplicity(u) > 0:
                max_u = pieces[u]
                break
        if max_u is None:
            raise ArithmeticError(f"no H-invariant piece in V_gamma (x) W for {gamma}")
        return RefinedTerms(max_v, min_w, max_u, self.cas_g(gamma), fiber_min)

    def refined_bound(self, gamma) -> Fraction:
        return refined_value(self.refined_terms(gamma), self.E, self.isotypewise)

    def mode_report(self, gamma) -> ModeReport:
        gamma = tuple(gamma)
        cas = self.cas_g(gamma)
        br = self.emb.branch(gamma)
        hom_m = sum(m * self.einstein.isotropy.get(w, 0) for w, m in br.items())
        hom_sym = sum(m * self.sym2_m.get(w, 0) for w, m in br.items())
        if hom_sym == 0:
            return ModeReport(gamma, cas, hom_m, hom_sym, RULED_OUT_EMPTY)
        if not any(br.get(v) for v in self.unsafe):
            return ModeReport(gamma, cas, hom_m, hom_sym, RULED_OUT_CURVATURE)
        if not self.space.sphere and self.tt_check(gamma):
            return ModeReport(gamma, cas, hom_m, hom_sym, RULED_OUT_NO_TT)
        terms = self.refined_terms(gamma)
        bound = refined_value(terms, self.E, self.isotypewise)
        two_e = 2 * self.E
        if bound > two_e:
            verdict = STABLE_BOUND
        elif bound == two_e:
            verdict = SEMISTABLE_BOUND
        else:
            verdict = POTENTIAL_INSTABILITY
        return ModeReport(gamma, cas, hom_m, hom_sym, verdict, bound, terms)

    # assembly ---------------------------------------------------------
    def run(self, max_modes: int | None = None, jobs: int = 1) -> StabilityReport:
        if not self.unsafe:
            return StabilityReport(self.space.name, self.einstein, self.cutoff, [], SUMMARY_SC)
        modes = self.candidate_modes()
        partial = False
        if max_modes is not None and len(modes) > max_modes:
            modes = modes[:max_modes]
            partial = True
        self.w_branches  # warm shared caches before forking
        if jobs > 1 and len(modes) > 1:
            reports = _run_parallel(self, modes, jobs)
        else:
            reports = [self.mode_report(g) for g in modes]
        reports.sort(key=lambda r: (r.cas_g, r.gamma))
        unstable = [r.gamma for r in reports if r.verdict == POTENTIAL_INSTABILITY]
        semi = [r.gamma for r in reports if r.verdict == SEMISTABLE_BOUND]
        if unstable:
            summary = SUMMARY_UNSTABLE
        elif semi:
            summary = SUMMARY_SF0
        else:
            summary = SUMMARY_SF
        return StabilityReport(self.space.name, self.einstein, self.cutoff, reports, summary,
                               unstable, semi, partial)


def _remove_trivial(dec: dict, trivial) -> dict:
    out = dict(dec)
    if out.get(trivial, 0) < 1:
        raise ArithmeticError("symmetric square of a self-dual module lacks an invariant")
    out[trivial] -= 1
    return {k: v for k, v in out.items() if v}


def refined_value(t: RefinedTerms, E: Fraction, isotypewise: bool = True) -> Fraction:
    """Lower bound for the Laplacian on the mode.

    The fiber operators pr Cas^g and Cas^h preserve every H-isotype of
    Sym^2 m, so their combination can be bounded isotype by isotype
    (``isotypewise``) instead of by the two global extrema.
    """
    fiber = t.fiber_min if isotypewise else t.min_w - Fraction(3, 2) * t.max_v
    return Fraction(3, 2) * t.cas_gamma - t.max_u / 2 + fiber - 2 * E + Fraction(1, 2)


def crude_holds(x: Fraction, a: Fraction, b: Fraction, c: Fraction, E: Fraction) -> bool:
    lhs = x + a - 2 * E
    if lhs <= 0:
        return False
    return lhs * lhs > b * max(Fraction(0), x - c)


def _sqrt_upper(q: Fraction, den: int = SQRT_DENOMINATOR) -> Fraction:
    """Rational s >= sqrt(q) with denominator ``den``."""
    n = q.numerator * den * den
    root = isqrt(n // q.denominator)
    cand = Fraction(root, den)
    while cand * cand < q:
        root += 1
        cand = Fraction(root, den)
    return cand


def crude_cutoff_value(a: Fraction, b: Fraction, c: Fraction, E: Fraction) -> Fraction:
    """Smallest C (rounded outward) with x + a - sqrt(b max(0, x - c)) > 2E for x > C."""
    two_e = 2 * E
    if b == 0:
        return two_e - a
    # below c the root term vanishes: f(x) = x + a
    low = min(c, two_e - a)
    # above c, with t = sqrt(b (x - c)): t^2/b - t + (c + a - 2E) > 0
    k = c + a - two_e
    disc = 1 - 4 * k / b
    if disc < 0:
        return _round_up(low)
    s = _sqrt_upper(disc)
    t_plus = b * (1 + s) / 2
    if t_plus <= 0:
        return _round_up(low)
    high = c + t_plus * t_plus / b
    return _round_up(max(low, high))


def _round_up(x: Fraction, den: int = SQRT_DENOMINATOR) -> Fraction:
    return Fraction(-((-x.numerator * den) // x.denominator), den)


def _worker_mode(gamma):
    return _WORKER_ANALYSIS.mode_report(gamma)


_WORKER_ANALYSIS: StabilityAnalysis | None = None


def _run_parallel(analysis: StabilityAnalysis, modes: Sequence[Weight], jobs: int) -> list[ModeReport]:
    import multiprocessing

    global _WORKER_ANALYSIS
    _WORKER_ANALYSIS = analysis
    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:
        return [analysis.mode_report(g) for g in modes]
    with ProcessPoolExecutor(max_workers=min(jobs, os.cpu_count() or 1), mp_context=ctx) as pool:
        return list(pool.map(_worker_mode, modes, chunksize=1))


def analyze(space: SpaceSpec, max_modes: int | None = None, jobs: int = 1,
            isotypewise: bool = True, sharp_cutoff: bool = False) -> StabilityReport:
    return StabilityAnalysis(space, isotypewise, sharp_cutoff).run(max_modes=max_modes, jobs=jobs)
