"""Random model generators shared by the property and acceptance tests."""

from __future__ import annotations

import random
import string

from paps.model import (DerivationRule, Goal, Requirement, RiskProfile,
                        SecurityModel)


def random_dag_model(rng: random.Random, max_nodes: int = 12) -> SecurityModel:
    """Small random DAG: goals ordered so edges only point forward,
    requirements strictly sinks. Node ids are canonical-order friendly."""
    n_goals = rng.randint(1, max(1, max_nodes - 1))
    n_reqs = rng.randint(1, max_nodes - n_goals)
    goals = [Goal(f"G{i}") for i in range(n_goals)]
    reqs = [Requirement(f"R{i}") for i in range(n_reqs)]
    rules = []
    counter = 1
    for i in range(n_goals):
        targets = [g.id for g in goals[i + 1:]] + [r.id for r in reqs]
        rng.shuffle(targets)
        n_edges = rng.randint(0, min(4, len(targets)))
        chosen = targets[:n_edges]
        if chosen and rng.random() < 0.25:
            chosen.append(rng.choice(chosen))  # duplicate edge, max-collapsed
        while chosen:
            width = rng.randint(1, min(3, len(chosen)))  # multi-child bodies
            body, chosen = tuple(chosen[:width]), chosen[width:]
            rules.append(DerivationRule(
                f"P{counter}", goals[i].id, body, round(rng.random(), 6)))
            counter += 1
    return SecurityModel(tuple(goals), tuple(reqs), tuple(rules), root="G0")


def _random_text(rng: random.Random) -> str:
    alphabet = string.ascii_letters + string.digits + ' .,"\\-'
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 24)))


def random_valid_model(rng: random.Random,
                       max_nodes: int = 12) -> tuple[SecurityModel, RiskProfile]:
    """Random model with risk data, already in the serializer's canonical
    statement order so round-trips compare with plain equality."""
    skeleton = random_dag_model(rng, max_nodes)
    goals = tuple(Goal(g.id, _random_text(rng)) for g in skeleton.goals)
    reqs = []
    cost: dict[str, float] = {}
    tech: dict[str, float] = {}
    for r in skeleton.requirements:
        reqs.append(Requirement(
            r.id, _random_text(rng),
            metric=_random_text(rng) if rng.random() < 0.7 else None,
            connector=_random_text(rng) if rng.random() < 0.2 else None,
            ov=round(rng.uniform(1, 500), 6) if rng.random() < 0.3 else None))
        cost[r.id] = round(rng.random(), 6)
        tech[r.id] = round(rng.random(), 6)
    return (SecurityModel(goals, tuple(reqs), skeleton.rules, root="G0"),
            RiskProfile(cost, tech))
