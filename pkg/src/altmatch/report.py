"""Per-instance verdict records shared by every checker."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .alternating import AlternatingWalk
from .formats import decode_graph6, encode_graph6
from .graph import Graph
from .matching import Matching


@dataclass
class TheoremReport:
    """Verdict of one checker on one instance.

    ``conclusion_holds`` is None when the conclusion was not evaluated
    (skipped instance, search disabled, or budget exhausted).
    """

    theorem_id: str
    hypothesis_met: bool
    conclusion_holds: Optional[bool]
    witness: Optional[AlternatingWalk] = None
    exception_branch: Optional[str] = None
    diagnostics: dict = field(default_factory=dict)
    budget_exceeded: bool = False
    exploratory: bool = False
    reproduction: dict = field(default_factory=dict)

    @property
    def is_counterexample(self) -> bool:
        return (self.hypothesis_met and self.conclusion_holds is False
                and self.exception_branch is None and not self.budget_exceeded)

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "hypothesis_met": self.hypothesis_met,
            "conclusion_holds": self.conclusion_holds,
            "witness": self.witness.to_dict() if self.witness else None,
            "exception_branch": self.exception_branch,
            "diagnostics": self.diagnostics,
            "budget_exceeded": self.budget_exceeded,
            "exploratory": self.exploratory,
            "counterexample": self.is_counterexample,
            "reproduction": self.reproduction,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "TheoremReport":
        return cls(
            theorem_id=d["theorem_id"],
            hypothesis_met=d["hypothesis_met"],
            conclusion_holds=d["conclusion_holds"],
            witness=AlternatingWalk.from_dict(d["witness"]) if d.get("witness") else None,
            exception_branch=d.get("exception_branch"),
            diagnostics=d.get("diagnostics", {}),
            budget_exceeded=d.get("budget_exceeded", False),
            exploratory=d.get("exploratory", False),
            reproduction=d.get("reproduction", {}),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def render(self) -> str:
        """Human-readable rendering carrying every field of ``to_dict``."""
        lines = []
        for key, value in self.to_dict().items():
            if isinstance(value, dict):
                lines.append(f"{key}:")
                lines.extend(f"  {k}: {json.dumps(v)}" for k, v in value.items())
            else:
                lines.append(f"{key}: {json.dumps(value)}")
        return "\n".join(lines)


def reproduction_data(g: Graph, m: Optional[Matching] = None, **extra) -> dict:
    data = {"graph6": encode_graph6(g)}
    if m is not None:
        data["matching"] = [f"{u} {v}" for u, v in m.edges]
    data.update(extra)
    return data


def instance_from_reproduction(data: dict) -> tuple[Graph, Optional[Matching]]:
    g = decode_graph6(data["graph6"])
    m = None
    if "matching" in data:
        m = Matching.of(g, (tuple(map(int, line.split())) for line in data["matching"]))
    return g, m
