"""Stratification of the sort definition.

Classic iterative assignment: a head predicate sits at least as high as every
positive body predicate and strictly higher than every predicate under
``not``. If some level climbs past the number of predicates, negation runs
through a cycle and the definition is not stratified.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from syntax.nodes import Literal, Rule

PredKey = tuple[str, int]


def pred_key(literal: Literal) -> PredKey:
    return (literal.predicate, len(literal.args))


@dataclass
class Stratification:
    """Stratum number per predicate and the rule groups to evaluate in order."""

    levels: dict[PredKey, int] = field(default_factory=dict)
    strata: list[list[Rule]] = field(default_factory=list)
    cycle: list[PredKey] = field(default_factory=list)

    @property
    def is_stratified(self) -> bool:
        return not self.cycle


def stratify(rules: tuple[Rule, ...] | list[Rule]) -> Stratification:
    """Assign strata to the predicates of a set of regular rules.

    Args:
        rules: Rules whose bodies mention only predicate literals and relations

    Returns:
        Stratification; ``cycle`` lists the predicates caught in a negative
        cycle when the rules are not stratified
    """
    levels: dict[PredKey, int] = {}
    for rule in rules:
        for literal in rule.head:
            levels.setdefault(pred_key(literal), 0)
        for item in rule.body:
            if not item.literal.is_relation:
                levels.setdefault(pred_key(item.literal), 0)

    bound = len(levels)
    changed = True
    while changed:
        changed = False
        for rule in rules:
            for head in rule.head:
                head_key = pred_key(head)
                required = levels[head_key]
                for item in rule.body:
                    if item.literal.is_relation:
                        continue
                    level = levels[pred_key(item.literal)]
                    required = max(required, level + 1 if item.naf else level)
                if required > levels[head_key]:
                    if required > bound:
                        cycle = sorted(key for key, lvl in levels.items() if lvl >= bound)
                        return Stratification(levels=levels, cycle=cycle or [head_key])
                    levels[head_key] = required
                    changed = True

    height = max(levels.values(), default=-1) + 1
    strata: list[list[Rule]] = [[] for _ in range(height)]
    for rule in rules:
        strata[levels[pred_key(rule.head[0])]].append(rule)
    return Stratification(levels=levels, strata=[group for group in strata if group])
