"""Serializable stability reports: versioned JSON and a markdown table row.

Every rational is written as a "p/q" string (integers as "p"), weights as
integer lists, and isotropy summands as lists of per-component lists.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

from .spaces import SpaceSpec
from .stability import (
    POTENTIAL_INSTABILITY,
    SEMISTABLE_BOUND,
    SUMMARY_SC,
    SUMMARY_SF,
    SUMMARY_SF0,
    ModeReport,
    RefinedTerms,
    StabilityReport,
)

REPORT_SCHEMA_VERSION = 1


def q(x: Fraction | int | None) -> str | None:
    return None if x is None else str(Fraction(x))


def unq(s: str | None) -> Fraction | None:
    return None if s is None else Fraction(s)


def _hweight(w) -> list[list[int]]:
    return [list(part) for part in w]


@dataclass
class ModeEntry:
    weight: list[int]
    casimir: Fraction
    hom_m: int
    hom_sym2: int
    verdict: str
    bound: Fraction | None = None
    refined_terms: dict[str, Fraction] | None = None

    @classmethod
    def from_mode(cls, r: ModeReport) -> ModeEntry:
        terms = r.refined_terms.as_dict() if isinstance(r.refined_terms, RefinedTerms) else None
        return cls(list(r.gamma), r.cas_g, r.hom_m, r.hom_sym, r.verdict, r.bound, terms)

    def to_dict(self) -> dict[str, Any]:
        return {"weight": self.weight, "casimir": q(self.casimir), "hom_m": self.hom_m,
                "hom_sym2": self.hom_sym2, "verdict": self.verdict, "bound": q(self.bound),
                "refined_terms": None if self.refined_terms is None
                else {k: q(v) for k, v in self.refined_terms.items()}}

    @classmethod
    def from_dict(cls, d: dict) -> ModeEntry:
        terms = d.get("refined_terms")
        return cls(list(d["weight"]), unq(d["casimir"]), d["hom_m"], d["hom_sym2"], d["verdict"],
                   unq(d.get("bound")), None if terms is None else {k: unq(v) for k, v in terms.items()})


@dataclass
class ReportDocument:
    space: dict[str, Any]
    casimir: Fraction
    einstein_constant: Fraction
    dim_m: int
    isotropy: list[list]
    cutoff: Fraction
    modes: list[ModeEntry]
    summary: str
    instabilities: list[list[int]]
    semistable: list[list[int]]
    partial: bool = False
    timing: dict[str, float] = field(default_factory=dict)
    schema_version: int = REPORT_SCHEMA_VERSION

    @classmethod
    def from_report(cls, report: StabilityReport, space: SpaceSpec,
                    timing: dict[str, float] | None = None) -> ReportDocument:
        e = report.einstein
        meta = {"name": space.name, "g": str(space.g), "h": str(space.h),
                "family": space.family, "parameters": list(space.parameters),
                "sphere": space.sphere, "restriction_matrix": [list(r) for r in space.embedding.restriction]}
        iso = sorted(([_hweight(w), m] for w, m in e.isotropy.items()))
        return cls(meta, e.common_casimir, e.einstein_constant, e.dim_m, iso, report.cutoff,
                   [ModeEntry.from_mode(r) for r in report.modes], report.summary,
                   [list(w) for w in report.instabilities], [list(w) for w in report.semistable],
                   report.partial, dict(timing or {}))

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        out = {
            "schema_version": self.schema_version,
            "space": self.space,
            "einstein": {"casimir": q(self.casimir), "einstein_constant": q(self.einstein_constant),
                         "dim_m": self.dim_m, "isotropy": [list(x) for x in self.isotropy]},
            "cutoff": q(self.cutoff),
            "modes": [m.to_dict() for m in self.modes],
            "summary": self.summary,
            "instabilities": self.instabilities,
            "semistable": self.semistable,
            "partial": self.partial,
        }
        if timing:
            out["timing"] = self.timing
        return out

    @classmethod
    def from_dict(cls, d: dict) -> ReportDocument:
        version = d.get("schema_version")
        if version != REPORT_SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema version {version!r}")
        e = d["einstein"]
        return cls(d["space"], unq(e["casimir"]), unq(e["einstein_constant"]), e["dim_m"],
                   [[x[0], x[1]] for x in e["isotropy"]],
                   unq(d["cutoff"]), [ModeEntry.from_dict(m) for m in d["modes"]], d["summary"],
                   d["instabilities"], d["semistable"], d.get("partial", False),
                   dict(d.get("timing", {})), version)

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> ReportDocument:
        return cls.from_dict(json.loads(text))

    def __eq__(self, other):
        if not isinstance(other, ReportDocument):
            return NotImplemented
        a, b = asdict(self), asdict(other)
        a.pop("timing")
        b.pop("timing")
        return a == b


# markdown ----------------------------------------------------------------

def omega(w) -> str:
    terms = [f"{'' if k == 1 else k}ω{i + 1}" for i, k in enumerate(w) if k]
    return "+".join(terms) if terms else "0"


_NOTES = {SUMMARY_SC: "SC", SUMMARY_SF: "SF", SUMMARY_SF0: "SF₀"}

MARKDOWN_HEADER = ("| space | E | potential instabilities | notes |\n"
                   "|---|---|---|---|\n")


def markdown_row(doc: ReportDocument) -> str:
    """One table row; semistable modes are set in italics and marked (s)."""
    modes = [omega(m.weight) for m in doc.modes if m.verdict == POTENTIAL_INSTABILITY]
    modes += [f"*{omega(m.weight)}* (s)" for m in doc.modes if m.verdict == SEMISTABLE_BOUND]
    notes = _NOTES.get(doc.summary, "")
    if doc.partial:
        notes = (notes + " partial").strip()
    return (f"| {doc.space['name']} | {doc.einstein_constant} | "
            f"{', '.join(modes) if modes else '-'} | {notes} |\n")


def markdown(doc: ReportDocument) -> str:
    return MARKDOWN_HEADER + markdown_row(doc)
