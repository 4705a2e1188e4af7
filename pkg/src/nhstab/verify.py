"""Comparison of computed stability reports with the golden rows."""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import g_rank, get_space
from .goldens import (
    GoldenRow,
    apply_perm,
    closure,
    diagram_automorphisms,
    expected_modes,
    format_weight,
    golden_rows,
)
from .stability import SUMMARY_UNSTABLE, StabilityReport, analyze


@dataclass
class RowCheck:
    row: GoldenRow
    ok: bool
    diffs: list[str] = field(default_factory=list)
    report: StabilityReport | None = None
    automorphism: tuple | None = None


def _fmt(ws) -> str:
    return "{" + ", ".join(format_weight(w) for w in sorted(ws)) + "}"


def compare_modes(report: StabilityReport, row: GoldenRow, series: str, rank: int):
    """(ok, diffs, automorphism) for the mode lists and the summary.

    Catalog embeddings are fixed only up to automorphisms of g, so the
    computed lists may be moved by one diagram symmetry before comparing.
    """
    unstable, semi = expected_modes(row, rank)
    want_u = closure(unstable, row.closure, series, rank)
    want_s = closure(semi, row.closure, series, rank)
    best = None
    for perm in diagram_automorphisms(series, rank):
        got_u = closure((apply_perm(perm, w) for w in report.instabilities), row.closure, series, rank)
        got_s = closure((apply_perm(perm, w) for w in report.semistable), row.closure, series, rank)
        diffs = []
        if got_u != want_u:
            diffs.append(f"unstable: expected {_fmt(want_u)}, got {_fmt(got_u)}")
        if got_s != want_s:
            diffs.append(f"semistable: expected {_fmt(want_s)}, got {_fmt(got_s)}")
        if not diffs:
            return True, [], perm
        if best is None:
            best = diffs
    return False, best, None


def compare_summary(report: StabilityReport, row: GoldenRow) -> list[str]:
    if row.note:
        if report.summary != row.note:
            return [f"summary: expected {row.note}, got {report.summary}"]
        return []
    if row.unstable and report.summary != SUMMARY_UNSTABLE:
        return [f"summary: expected potential instabilities, got {report.summary}"]
    return []


def check_row(row: GoldenRow, report: StabilityReport | None = None, check_e: bool = True,
              jobs: int = 1) -> RowCheck:
    space = get_space(row.space)
    if report is None:
        report = analyze(space, jobs=jobs)
    series, rank = space.g.series, space.g.rank
    ok, diffs, perm = compare_modes(report, row, series, rank)
    diffs = list(diffs) + compare_summary(report, row)
    E = report.einstein.einstein_constant
    if check_e and space.expected_E is not None and E != space.expected_E:
        diffs.append(f"E: expected {space.expected_E}, got {E}")
    return RowCheck(row, not diffs, diffs, report, perm)


def rows_within(table: int, rank_limit: int | None) -> list[GoldenRow]:
    out = []
    for row in golden_rows(table):
        if rank_limit is None or g_rank(row.space) <= rank_limit:
            out.append(row)
    return out
