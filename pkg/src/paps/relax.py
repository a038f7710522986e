"""Rendering of partially-selected requirements and deviation membership.

A prioritized requirement is rewritten so its satisfaction metric targets
``rds x OV`` instead of the resource-unconstrained optimum OV. OV stays
symbolic (OV_6) unless the model supplies a numeric ov attribute.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .fuzzy import RuleBase, VariableConfig
from .model import Requirement, RiskProfile, SecurityModel
from .pipeline import prioritize
from .srm import format_number

DEFAULT_CONNECTOR = "as close as possible to"


class RenderError(Exception):
    """A requirement cannot be rendered (no satisfaction metric)."""

    def __init__(self, requirement: str, message: str):
        super().__init__(message)
        self.requirement = requirement


@dataclass(frozen=True)
class RelaxedStatement:
    requirement: str
    metric: str
    connector: str
    rds: float
    ov_symbol: str
    rendered: str


def _ov_symbol(req_id: str) -> str:
    m = re.search(r"(\d+)$", req_id)
    return f"OV_{m.group(1)}" if m else f"OV_{req_id}"


def relax_requirement(req: Requirement, rds: float) -> RelaxedStatement:
    if req.metric is None:
        raise RenderError(req.id,
                          f"requirement {req.id} has no satisfaction metric")
    if not 0.0 <= rds <= 1.0:
        raise ValueError(f"rds {rds} outside [0, 1]")
    connector = req.connector or DEFAULT_CONNECTOR
    ov = _ov_symbol(req.id) if req.ov is None else format_number(req.ov)
    rendered = (f"{req.id}: {req.description} [{req.metric}] "
                f"{connector} {rds:.2f} × {ov}")
    return RelaxedStatement(req.id, req.metric, connector, rds, ov, rendered)


def relax_srl(model: SecurityModel, risk: RiskProfile, goal: str,
              config: VariableConfig, rulebase: RuleBase) -> list[RelaxedStatement]:
    """One relaxed statement per prioritized requirement, same order."""
    return [relax_requirement(model.requirement(e.requirement), e.rds)
            for e in prioritize(model, risk, goal, config, rulebase)]


def relax_text(statements: list[RelaxedStatement]) -> str:
    return "\n".join(s.rendered for s in statements) + "\n"


def relax_json(statements: list[RelaxedStatement]) -> str:
    rows = [{"requirement": s.requirement, "metric": s.metric,
             "connector": s.connector, "rds": round(s.rds, 4),
             "ov": s.ov_symbol, "rendered": s.rendered}
            for s in statements]
    return json.dumps(rows, indent=2, ensure_ascii=False) + "\n"


@dataclass(frozen=True)
class DeviationMembership:
    """Symmetric triangular tolerance around the relaxed target.

    Membership is 1 at zero deviation and falls linearly to 0 at
    half_width (in units of the satisfaction metric).
    """

    half_width: float

    def __post_init__(self) -> None:
        if self.half_width <= 0:
            raise ValueError("half_width must be positive")


def default_deviation(rds: float, ov: float) -> DeviationMembership:
    """Tolerance of a quarter of the relaxed target."""
    if rds * ov <= 0:
        raise ValueError("rds and ov must be positive for the default width")
    return DeviationMembership(0.25 * rds * ov)


def deviation_degree(dm: DeviationMembership, v: float,
                     rds: float, ov: float) -> float:
    """How acceptable the achieved value v is, given target rds x ov."""
    if ov <= 0:
        raise ValueError(f"ov must be positive, got {ov}")
    return max(0.0, 1.0 - abs(v - rds * ov) / dm.half_width)
