"""Prediction-vs-computation checks: per-degree Macaulay ranks against the
Hilbert-function closed forms, measured sizes of the leading-term set H
against the counting formulas, and the entry-degree mode verdict for
critical systems.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import ModuleElement, Poly
from .determinantal import CritSystem, en_leading_terms, minors
from .hilbert import (
    crit_syzygy_count,
    degree_bound_crit,
    degree_bound_minors,
    hf_crit,
    hf_minors_ideal,
    mono_count,
    syzygy_count,
)
from .instances import Instance
from .macaulay import full_macaulay


@dataclass
class RankRow:
    degree: int
    cols: int
    rank: int
    pred_derived: int
    pred_literal: Optional[int] = None  # None for matrix instances (no mode split)

    @property
    def match_derived(self) -> bool:
        return self.rank == self.pred_derived

    @property
    def match_literal(self) -> bool:
        return self.pred_literal is not None and self.rank == self.pred_literal


@dataclass
class HRow:
    delta: int
    measured: int
    predicted: int

    @property
    def match(self) -> bool:
        return self.measured == self.predicted


@dataclass
class VerifyReport:
    kind: str
    rank_rows: list
    h_rows: list
    verdict: str  # derived | literal | both | neither | n/a
    required_mode: Optional[str] = None  # gate on one convention when set

    @property
    def ranks_ok(self) -> bool:
        if self.kind == "matrix":
            return all(r.match_derived for r in self.rank_rows)
        if self.required_mode == "derived":
            return all(r.match_derived for r in self.rank_rows)
        if self.required_mode == "literal":
            return all(r.match_literal for r in self.rank_rows)
        return self.verdict in ("derived", "literal", "both")

    @property
    def h_ok(self) -> bool:
        return all(r.match for r in self.h_rows)

    @property
    def ok(self) -> bool:
        return self.ranks_ok and self.h_ok

    def text(self) -> str:
        lines = []
        if self.kind == "matrix":
            lines.append("d    cols    rank    predicted  match")
            for r in self.rank_rows:
                lines.append(
                    f"{r.degree:<5d}{r.cols:<8d}{r.rank:<8d}{r.pred_derived:<11d}"
                    f"{'yes' if r.match_derived else 'NO'}"
                )
        else:
            lines.append("d    cols    rank    derived    literal")
            for r in self.rank_rows:
                lines.append(
                    f"{r.degree:<5d}{r.cols:<8d}{r.rank:<8d}"
                    f"{r.pred_derived:<6d}{'ok ' if r.match_derived else 'NO '}    "
                    f"{r.pred_literal:<6d}{'ok' if r.match_literal else 'NO'}"
                )
        lines.append("")
        lines.append("delta  |H| measured  |H| predicted  match")
        for h in self.h_rows:
            lines.append(
                f"{h.delta:<7d}{h.measured:<14d}{h.predicted:<15d}"
                f"{'yes' if h.match else 'NO'}"
            )
        lines.append("")
        lines.append(f"mode verdict: {self.verdict}")
        return "\n".join(lines)


def _rank_at(gens, degrees, d) -> int:
    live = [ModuleElement.from_poly(f) if isinstance(f, Poly) else f for f in gens]
    return full_macaulay(live, degrees, d, [0]).rank


def verify_instance(
    inst: Instance, D: Optional[int] = None, mode: Optional[str] = None
) -> VerifyReport:
    if inst.kind == "matrix":
        return _verify_minors(inst, D)
    return _verify_crit(inst, D, mode)


def _verify_minors(inst: Instance, D: Optional[int]) -> VerifyReport:
    A = inst.matrix
    n, p, q, d0 = inst.n, inst.p, inst.q, inst.d0
    if D is None:
        D = degree_bound_minors(n, p, d0)
    gens = minors(A, p)
    degrees = [p * d0] * len(gens)
    rank_rows = []
    for d in range(p * d0, D + 1):
        rank = _rank_at(gens, degrees, d)
        rank_rows.append(RankRow(d, mono_count(n, d), rank, hf_minors_ideal(n, p, q, d0, d)))
    H = en_leading_terms(A, D)
    h_rows = []
    for delta in range(0, D - p * d0 + 1):
        h_rows.append(
            HRow(delta, H.count_layer(n, delta), syzygy_count(n, p, q, d0, delta + p * d0))
        )
    return VerifyReport("matrix", rank_rows, h_rows, "n/a")


def _verify_crit(inst: Instance, D: Optional[int], mode: Optional[str] = None) -> VerifyReport:
    n, p, d0 = inst.n, inst.p, inst.d0
    if D is None:
        D = degree_bound_crit(n, p, d0)
    sysm = CritSystem.build(inst.g, inst.F)
    jac = sysm.jac
    minor_deg = (p + 1) * jac.entry_degree
    gens = list(inst.F) + minors(jac, p + 1)
    degrees = [d0] * p + [minor_deg] * (len(gens) - p)
    rank_rows = []
    for d in range(d0, D + 1):
        rank = _rank_at(gens, degrees, d)
        cols = mono_count(n, d)
        rank_rows.append(
            RankRow(
                d,
                cols,
                rank,
                cols - hf_crit(n, p, d0, d, "derived"),
                cols - hf_crit(n, p, d0, d, "literal"),
            )
        )
    H = en_leading_terms(jac, D)
    h_rows = []
    h_mode = mode or "derived"
    for delta in range(0, D - minor_deg + 1):
        h_rows.append(
            HRow(delta, H.count_layer(n, delta), crit_syzygy_count(n, p, d0, delta, h_mode))
        )
    all_derived = all(r.match_derived for r in rank_rows)
    all_literal = all(r.match_literal for r in rank_rows)
    if all_derived and all_literal:
        verdict = "both"
    elif all_derived:
        verdict = "derived"
    elif all_literal:
        verdict = "literal"
    else:
        verdict = "neither"
    return VerifyReport("system", rank_rows, h_rows, verdict, required_mode=mode)
