"""Grounder for plain (unsorted) safe rule lists such as counterpart programs.

First the possible atoms are over-approximated by a fixpoint that ignores
``not``; then every rule is instantiated by joining its positive body
against that set. ``not`` literals over impossible atoms are dropped.
"""

from __future__ import annotations

import time
from collections.abc import Iterable

from loguru import logger

from grounder.base import GroundRule
from logic.arithmetic import Binding, holds
from logic.unify import FactIndex, ground_literal, join, plain_variables
from syntax.nodes import BodyItem, Literal, Rule, RuleKind, atom_terms, literal_variables
from utils.exceptions import EvaluationError, GroundingError, GroundingSafetyError


def check_safety(rule: Rule) -> None:
    """Every variable must occur in a positive predicate atom outside arithmetic.

    Raises:
        GroundingSafetyError: Naming the first unsafe variable
    """
    bound: set[str] = set()
    for literal in rule.pos_body:
        if not literal.is_relation:
            for term in atom_terms(literal.atom):
                bound.update(plain_variables(term))
    literals = list(rule.head) + [item.literal for item in rule.body]
    for literal in literals:
        for name in literal_variables(literal):
            if name not in bound:
                raise GroundingSafetyError(name, str(rule))


def possible_atoms(rules: Iterable[Rule]) -> FactIndex:
    """Literals that could be true in some answer set (``not`` is ignored)."""
    index = FactIndex()
    generating = [rule for rule in rules if rule.head and rule.kind is RuleKind.REGULAR]
    changed = True
    while changed:
        changed = False
        for rule in generating:
            for binding in _bindings(rule, index):
                try:
                    heads = [ground_literal(lit, binding) for lit in rule.head]
                except EvaluationError:
                    continue
                for head in heads:
                    changed |= index.add(head)
    return index


def _bindings(rule: Rule, index: FactIndex) -> Iterable[Binding]:
    positives = [lit for lit in rule.pos_body if not lit.is_relation]
    relations = [lit for lit in rule.pos_body if lit.is_relation]
    for binding in join(positives, index, {}):
        try:
            if all(holds(lit.atom, binding) for lit in relations):  # type: ignore[arg-type]
                yield binding
        except EvaluationError:
            continue


def ground_dlv(rules: list[Rule]) -> tuple[list[GroundRule], list[GroundRule]]:
    """Ground a rule list with regular rules, constraints and weak constraints.

    Args:
        rules: Parsed rules (no cr-rules)

    Returns:
        (ground regular rules and constraints, ground weak constraints)

    Raises:
        GroundingSafetyError: A rule is not safe
        GroundingError: The list contains a cr-rule
    """
    started = time.perf_counter()
    for rule in rules:
        if rule.kind is RuleKind.CR:
            raise GroundingError(f"cr-rule '{rule}' must be translated before plain grounding")
        check_safety(rule)

    index = possible_atoms(rules)
    regular: dict[GroundRule, None] = {}
    weak: dict[GroundRule, None] = {}

    for rule in rules:
        target = weak if rule.kind is RuleKind.WEAK else regular
        for binding in _bindings(rule, index):
            instance = _instantiate(rule, binding, index)
            if instance is not None:
                target.setdefault(instance, None)

    logger.debug(
        f"Plain grounding: {len(index)} possible literals, {len(regular)} rules, "
        f"{len(weak)} weak constraints in {time.perf_counter() - started:.3f}s"
    )
    return list(regular), list(weak)


def _instantiate(rule: Rule, binding: Binding, index: FactIndex) -> GroundRule | None:
    try:
        head = tuple(ground_literal(lit, binding) for lit in rule.head)
        body: list[BodyItem] = []
        for item in rule.body:
            if item.literal.is_relation:
                continue
            literal: Literal = ground_literal(item.literal, binding)
            if item.naf and literal not in index:
                continue
            body.append(BodyItem(literal, item.naf))
    except EvaluationError:
        return None
    return GroundRule(rule.kind, head, tuple(body), rule.index)
