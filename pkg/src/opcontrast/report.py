"""Machine-readable result documents.

A ReportDocument collects the metric values one CLI invocation produced,
together with the input description and enough diagnostics to reproduce
them. Serialization is deterministic: keys are sorted and floats are
emitted with full round-trip precision.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

from .contrast import ContrastReport

TOOL_VERSION = "0.1.0"


@dataclass(frozen=True)
class Metric:
    name: str
    value: float
    path: str
    bounds: Optional[tuple[float, float]] = None
    optimal_scale: Optional[float] = None

    def __post_init__(self):
        if not 0.0 <= self.value <= 1.0:
            raise ValueError(f"metric {self.name} value {self.value} outside [0, 1]")

    def as_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "name": self.name,
            "value": self.value,
            "path": self.path,
        }
        if self.bounds is not None:
            d["bounds"] = {"lo": self.bounds[0], "hi": self.bounds[1]}
        if self.optimal_scale is not None:
            d["optimal_scale"] = self.optimal_scale
        return d


@dataclass(frozen=True)
class ReportDocument:
    input: dict[str, Any]
    metrics: tuple[Metric, ...]
    config: dict[str, Any] = field(default_factory=dict)
    tool_version: str = TOOL_VERSION

    def as_dict(self) -> dict[str, Any]:
        return {
            "tool_version": self.tool_version,
            "input": self.input,
            "config": self.config,
            "metrics": [m.as_dict() for m in self.metrics],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, separators=(",", ":"))


def metric_from_report(name: str, rep: ContrastReport) -> Metric:
    return Metric(
        name=name,
        value=rep.value,
        path=rep.path.value,
        bounds=(rep.bounds.lo, rep.bounds.hi),
        optimal_scale=rep.optimal_scale,
    )
