"""Domain types for goal-refinement models with fuzzy derivation degrees.

A security model is a directed acyclic graph: goals refine into sub-goals
and eventually into leaf requirements, via derivation rules that each carry
a contribution degree in [0, 1]. Requirements additionally carry risk data
(implementation cost and technical ability, both in [0, 1]).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping


def natural_key(node_id: str) -> tuple:
    """Sort key treating digit runs numerically, so R2 < R10."""
    return tuple(
        int(part) if part.isdigit() else part
        for part in re.split(r"(\d+)", node_id)
        if part != ""
    )


@dataclass(frozen=True)
class Goal:
    id: str
    description: str = ""


@dataclass(frozen=True)
class Requirement:
    id: str
    description: str = ""
    metric: str | None = None
    connector: str | None = None
    ov: float | None = None


@dataclass(frozen=True)
class DerivationRule:
    """``head -> body[0] ... body[n] @ degree``.

    The rule contributes ``degree`` to the edge (head, b) for every body
    element b; duplicate edges across rules collapse to the maximum degree.
    """

    id: str
    head: str
    body: tuple[str, ...]
    degree: float


@dataclass(frozen=True)
class SecurityModel:
    goals: tuple[Goal, ...]
    requirements: tuple[Requirement, ...]
    rules: tuple[DerivationRule, ...]
    root: str

    def goal_ids(self) -> set[str]:
        return {g.id for g in self.goals}

    def requirement_ids(self) -> set[str]:
        return {r.id for r in self.requirements}

    def goal(self, goal_id: str) -> Goal:
        for g in self.goals:
            if g.id == goal_id:
                return g
        raise KeyError(f"unknown goal {goal_id!r}")

    def requirement(self, req_id: str) -> Requirement:
        for r in self.requirements:
            if r.id == req_id:
                return r
        raise KeyError(f"unknown requirement {req_id!r}")

    def sorted_goals(self) -> list[Goal]:
        """Root first, then the remaining goals in natural id order."""
        rest = sorted((g for g in self.goals if g.id != self.root),
                      key=lambda g: natural_key(g.id))
        head = [g for g in self.goals if g.id == self.root]
        return head + rest

    def sorted_requirements(self) -> list[Requirement]:
        return sorted(self.requirements, key=lambda r: natural_key(r.id))


@dataclass(frozen=True)
class RiskProfile:
    """Per-requirement cost and technical-ability, both in [0, 1]."""

    cost: Mapping[str, float]
    technical_ability: Mapping[str, float]


@lru_cache(maxsize=64)
def edge_degrees(model: SecurityModel) -> dict[tuple[str, str], float]:
    """Rule-induced edges (head, child) -> degree, duplicates max-collapsed."""
    edges: dict[tuple[str, str], float] = {}
    for rule in model.rules:
        for child in rule.body:
            key = (rule.head, child)
            edges[key] = max(edges.get(key, 0.0), rule.degree)
    return edges


@lru_cache(maxsize=64)
def adjacency(model: SecurityModel) -> dict[str, tuple[tuple[str, float], ...]]:
    adj: dict[str, list[tuple[str, float]]] = {}
    for (head, child), degree in sorted(edge_degrees(model).items()):
        adj.setdefault(head, []).append((child, degree))
    return {head: tuple(children) for head, children in adj.items()}


def technical_ability(complexity: float) -> float:
    """Ease-of-implementation score 1/complexity, for complexity >= 1."""
    if complexity < 1.0:
        raise ValueError(
            f"technical complexity must be >= 1, got {complexity}")
    return 1.0 / complexity


# --- validation ---------------------------------------------------------

CATEGORY_CYCLE = "cycle"
CATEGORY_DANGLING = "dangling-ref"
CATEGORY_RANGE = "range"
CATEGORY_MISSING_RISK = "missing-risk"
CATEGORY_REQ_AS_HEAD = "requirement-as-head"
CATEGORY_UNREACHABLE = "unreachable-node"
CATEGORY_DUPLICATE = "duplicate-id"


@dataclass(frozen=True)
class Finding:
    category: str
    severity: str  # "error" | "warning"
    subject: str   # node or rule id
    message: str

    def __str__(self) -> str:
        return f"{self.severity} [{self.category}] {self.subject}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    findings: tuple[Finding, ...] = field(default_factory=tuple)

    @property
    def errors(self) -> list[Finding]:
        return [f for f in self.findings if f.severity == "error"]

    @property
    def warnings(self) -> list[Finding]:
        return [f for f in self.findings if f.severity == "warning"]

    @property
    def ok(self) -> bool:
        return not self.errors


def _find_cycle(adj: Mapping[str, tuple[tuple[str, float], ...]],
                nodes: set[str]) -> list[str] | None:
    """Return one cycle as a node list, or None if the graph is acyclic."""
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {n: WHITE for n in nodes}
    for start in sorted(nodes):
        if color[start] != WHITE:
            continue
        stack: list[tuple[str, Iterator[str]]] = [
            (start, iter([c for c, _ in adj.get(start, ())]))]
        color[start] = GRAY
        path = [start]
        while stack:
            node, children = stack[-1]
            advanced = False
            for child in children:
                if child not in color:
                    continue  # dangling refs reported separately
                if color[child] == GRAY:
                    return path[path.index(child):] + [child]
                if color[child] == WHITE:
                    color[child] = GRAY
                    path.append(child)
                    stack.append(
                        (child, iter([c for c, _ in adj.get(child, ())])))
                    advanced = True
                    break
            if not advanced:
                color[node] = BLACK
                path.pop()
                stack.pop()
    return None


def validate_model(model: SecurityModel, risk: RiskProfile) -> ValidationReport:
    """Check every structural invariant; never raises, always reports."""
    findings: list[Finding] = []
    declared: set[str] = set()
    for node_id in [g.id for g in model.goals] + [r.id for r in model.requirements]:
        if node_id in declared:
            findings.append(Finding(CATEGORY_DUPLICATE, "error", node_id,
                                    "declared more than once"))
        declared.add(node_id)

    goal_ids = model.goal_ids()
    req_ids = model.requirement_ids()

    if model.root not in declared:
        findings.append(Finding(CATEGORY_DANGLING, "error", model.root,
                                "root node is not declared"))
    elif model.root not in goal_ids:
        findings.append(Finding(CATEGORY_REQ_AS_HEAD, "error", model.root,
                                "root node must be a goal"))

    seen_rule_ids: set[str] = set()
    for rule in model.rules:
        if rule.id in seen_rule_ids:
            findings.append(Finding(CATEGORY_DUPLICATE, "error", rule.id,
                                    "rule id declared more than once"))
        seen_rule_ids.add(rule.id)
        if rule.head in req_ids:
            findings.append(Finding(CATEGORY_REQ_AS_HEAD, "error", rule.id,
                                    f"requirement {rule.head} used as rule head"))
        elif rule.head not in declared:
            findings.append(Finding(CATEGORY_DANGLING, "error", rule.id,
                                    f"rule head {rule.head} is not declared"))
        for child in rule.body:
            if child not in declared:
                findings.append(Finding(CATEGORY_DANGLING, "error", rule.id,
                                        f"rule body element {child} is not declared"))
        if not 0.0 <= rule.degree <= 1.0:
            findings.append(Finding(CATEGORY_RANGE, "error", rule.id,
                                    f"degree {rule.degree} outside [0, 1]"))

    for req in model.requirements:
        for name, table in (("cost", risk.cost),
                            ("technical ability", risk.technical_ability)):
            if req.id not in table:
                findings.append(Finding(CATEGORY_MISSING_RISK, "error", req.id,
                                        f"no {name} value"))
            elif not 0.0 <= table[req.id] <= 1.0:
                findings.append(Finding(CATEGORY_RANGE, "error", req.id,
                                        f"{name} {table[req.id]} outside [0, 1]"))

    adj = adjacency(model)
    cycle = _find_cycle(adj, declared)
    if cycle is not None:
        findings.append(Finding(CATEGORY_CYCLE, "error", cycle[0],
                                "derivation cycle: " + " -> ".join(cycle)))

    if model.root in goal_ids and cycle is None:
        reachable = {model.root}
        frontier = [model.root]
        while frontier:
            node = frontier.pop()
            for child, _ in adj.get(node, ()):
                if child in declared and child not in reachable:
                    reachable.add(child)
                    frontier.append(child)
        for node_id in sorted(declared - reachable, key=natural_key):
            findings.append(Finding(CATEGORY_UNREACHABLE, "warning", node_id,
                                    "no derivation chain from the root goal"))

    return ValidationReport(tuple(findings))
