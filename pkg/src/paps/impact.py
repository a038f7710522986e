"""Requirement-impact computation by maximin propagation over the rule DAG.

The impact of a requirement x on a goal g is the maximum over all
derivation paths g -> ... -> x of the minimum rule degree along the path.
On a DAG this is the classic widest-path problem, solved here by a single
topological-order dynamic program per source goal. A brute-force path
enumerator is kept alongside as an independent test oracle.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .model import SecurityModel, adjacency, natural_key


class OracleSizeError(Exception):
    """The exponential oracle refused a graph that is too large."""


@dataclass(frozen=True)
class ImpactMatrix:
    goals: tuple[str, ...]
    requirements: tuple[str, ...]
    entries: dict[tuple[str, str], float]

    def get(self, goal: str, requirement: str) -> float:
        return self.entries.get((goal, requirement), 0.0)

    def row(self, goal: str) -> dict[str, float]:
        return {r: self.get(goal, r) for r in self.requirements}

    def to_csv(self) -> str:
        lines = ["goal," + ",".join(self.requirements)]
        for g in self.goals:
            cells = [f"{self.get(g, r):.2f}" for r in self.requirements]
            lines.append(g + "," + ",".join(cells))
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict[str, dict[str, float]]:
        return {g: self.row(g) for g in self.goals}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


@dataclass(frozen=True)
class Srl:
    """Requirements with positive impact on one goal, strongest first."""

    goal: str
    entries: tuple[tuple[str, float], ...]


def _reachable(model: SecurityModel, source: str) -> set[str]:
    adj = adjacency(model)
    seen = {source}
    frontier = [source]
    while frontier:
        node = frontier.pop()
        for child, _ in adj.get(node, ()):
            if child not in seen:
                seen.add(child)
                frontier.append(child)
    return seen


def maximin_from(model: SecurityModel, source: str) -> dict[str, float]:
    """Widest-path widths from ``source`` over paths of length >= 1."""
    adj = adjacency(model)
    order = _topological_order(model, source)
    width: dict[str, float] = {source: math.inf}
    for node in order:
        w = width.get(node, 0.0)
        if w <= 0.0:
            continue
        for child, degree in adj.get(node, ()):
            cand = min(w, degree)
            if cand > width.get(child, 0.0):
                width[child] = cand
    width.pop(source, None)
    return width


def _topological_order(model: SecurityModel, source: str) -> list[str]:
    adj = adjacency(model)
    order: list[str] = []
    state: dict[str, int] = {}

    def visit(node: str) -> None:
        stack = [(node, iter([c for c, _ in adj.get(node, ())]))]
        state[node] = 1
        while stack:
            current, children = stack[-1]
            for child in children:
                if state.get(child, 0) == 0:
                    state[child] = 1
                    stack.append(
                        (child, iter([c for c, _ in adj.get(child, ())])))
                    break
            else:
                state[current] = 2
                order.append(current)
                stack.pop()

    visit(source)
    order.reverse()
    return order


def impact(model: SecurityModel, goal: str, requirement: str) -> float:
    """Max over derivation paths of the min rule degree; 0 if no path."""
    known = model.goal_ids() | model.requirement_ids()
    for node in (goal, requirement):
        if node not in known:
            raise KeyError(f"unknown node {node!r}")
    return maximin_from(model, goal).get(requirement, 0.0)


def impact_matrix(model: SecurityModel) -> ImpactMatrix:
    goals = tuple(g.id for g in model.sorted_goals())
    requirements = tuple(r.id for r in model.sorted_requirements())
    entries: dict[tuple[str, str], float] = {}
    for g in goals:
        widths = maximin_from(model, g)
        for r in requirements:
            value = widths.get(r, 0.0)
            if value > 0.0:
                entries[(g, r)] = value
    return ImpactMatrix(goals, requirements, entries)


def build_srl(model: SecurityModel, goal: str) -> Srl:
    if goal not in model.goal_ids():
        raise KeyError(f"unknown goal {goal!r}")
    widths = maximin_from(model, goal)
    entries = [(r.id, widths[r.id])
               for r in model.sorted_requirements() if widths.get(r.id, 0.0) > 0.0]
    entries.sort(key=lambda e: (-e[1], natural_key(e[0])))
    return Srl(goal, tuple(entries))


ORACLE_NODE_LIMIT = 20


def brute_force_impact(model: SecurityModel, goal: str, requirement: str) -> float:
    """Enumerate every simple path goal -> requirement explicitly.

    Exponential; guarded by the size of the subgraph reachable from the
    source so large models can still be checked goal by goal.
    """
    known = model.goal_ids() | model.requirement_ids()
    for node in (goal, requirement):
        if node not in known:
            raise KeyError(f"unknown node {node!r}")
    reachable = _reachable(model, goal)
    if len(reachable) > ORACLE_NODE_LIMIT:
        raise OracleSizeError(
            f"{len(reachable)} nodes reachable from {goal}, "
            f"oracle limit is {ORACLE_NODE_LIMIT}")
    adj = adjacency(model)
    best = 0.0
    stack: list[tuple[str, float, frozenset[str]]] = [
        (goal, math.inf, frozenset({goal}))]
    while stack:
        node, width, visited = stack.pop()
        for child, degree in adj.get(node, ()):
            if child in visited:
                continue
            w = min(width, degree)
            if child == requirement:
                best = max(best, w)
            stack.append((child, w, visited | {child}))
    return best
