"""Structured pass/fail results for axiom and property checks."""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of one axiom check.

    ``axiom`` is the axiom identifier (O1..O7, O3', O5', T1..T4, T4', or a
    descriptive id for auxiliary checks). A failing report always carries a
    ``witness`` dict whose entries are JSON-serializable and sufficient to
    replay the failure: function inputs appear in the exact-function JSON
    schema, scalars as rational strings, and both computed sides are included.
    """

    axiom: str
    passed: bool
    trials: int
    witness: dict | None = None
    detail: str = ""

    def to_json_dict(self) -> dict:
        out = {
            "axiom": self.axiom,
            "status": "pass" if self.passed else "fail",
            "trials": self.trials,
        }
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def reports_to_json(reports: list[AxiomReport], indent: int = 2) -> str:
    return json.dumps([r.to_json_dict() for r in reports], indent=indent)


def format_report_table(reports: list[AxiomReport]) -> str:
    """Human-readable table, one row per axiom, witnesses appended."""
    width = max((len(r.axiom) for r in reports), default=5)
    lines = []
    for r in reports:
        status = "pass" if r.passed else "FAIL"
        row = f"{r.axiom:<{width}}  {status}  trials={r.trials}"
        if r.detail:
            row += f"  ({r.detail})"
        lines.append(row)
        if not r.passed and r.witness is not None:
            lines.append(f"  witness: {json.dumps(r.witness)}")
    return "\n".join(lines)


def all_passed(reports: list[AxiomReport]) -> bool:
    return all(r.passed for r in reports)
