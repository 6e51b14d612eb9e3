"""Reduct, closure and the answer-set test for ground programs.

Classically negated literals are treated as separate atoms; a set holding
both ``l`` and ``-l`` is never an answer set.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable

from grounder.base import GroundRule, make_rule
from syntax.nodes import Literal, RuleKind

LiteralSet = frozenset[Literal] | set[Literal]


def is_consistent_set(literals: Iterable[Literal]) -> bool:
    """No literal occurs together with its complement."""
    present = set(literals)
    return not any(lit.complement() in present for lit in present if not lit.negated)


def reduct(rules: list[GroundRule], candidate: LiteralSet) -> list[GroundRule]:
    """Gelfond-Lifschitz reduct: drop rules blocked by ``candidate``, strip ``not``."""
    reduced: list[GroundRule] = []
    for rule in rules:
        if any(lit in candidate for lit in rule.neg_body):
            continue
        reduced.append(make_rule(rule.head, rule.pos_body, origin=rule.origin))
    return reduced


def is_closed(rules: list[GroundRule], literals: LiteralSet) -> bool:
    """Every rule whose positive body holds has a head literal in ``literals``.

    ``not`` parts are read against ``literals`` as well, so a reduct passes
    through unchanged.
    """
    for rule in rules:
        if all(lit in literals for lit in rule.pos_body) and not any(
            lit in literals for lit in rule.neg_body
        ):
            if not any(lit in literals for lit in rule.head):
                return False
    return True


def least_model(rules: list[GroundRule]) -> set[Literal]:
    """Least model of a negation-free program with at most one head literal per rule.

    Constraints are ignored.
    """
    model: set[Literal] = set()
    pending = [rule for rule in rules if rule.head]
    changed = True
    while changed:
        changed = False
        remaining = []
        for rule in pending:
            if all(lit in model for lit in rule.pos_body):
                model.add(rule.head[0])
                changed = True
            else:
                remaining.append(rule)
        pending = remaining
    return model


def is_disjunctive(rules: Iterable[GroundRule]) -> bool:
    return any(len(rule.head) > 1 for rule in rules)


def is_head_cycle_free(rules: list[GroundRule]) -> bool:
    """No two head literals of one rule lie on a common positive cycle."""
    edges: dict[Literal, set[Literal]] = {}
    for rule in rules:
        for head in rule.head:
            edges.setdefault(head, set()).update(rule.pos_body)

    def reaches(start: Literal, goal: Literal) -> bool:
        stack, seen = [start], {start}
        while stack:
            node = stack.pop()
            for succ in edges.get(node, ()):
                if succ == goal:
                    return True
                if succ not in seen:
                    seen.add(succ)
                    stack.append(succ)
        return False

    for rule in rules:
        for first, second in itertools.combinations(rule.head, 2):
            if reaches(first, second) and reaches(second, first):
                return False
    return True


def shift(rules: list[GroundRule]) -> list[GroundRule]:
    """Replace ``a v b :- B.`` by ``a :- B, not b.`` and ``b :- B, not a.``."""
    shifted: list[GroundRule] = []
    for rule in rules:
        if len(rule.head) <= 1:
            shifted.append(rule)
            continue
        for head in rule.head:
            others = tuple(lit for lit in rule.head if lit != head)
            shifted.append(
                make_rule((head,), rule.pos_body, rule.neg_body + others, origin=rule.origin)
            )
    return shifted


def is_answer_set(rules: list[GroundRule], candidate: LiteralSet, exhaustive: bool = False) -> bool:
    """Whether ``candidate`` is an answer set of the ground regular ``rules``.

    Args:
        rules: Ground regular rules and constraints
        candidate: Set of ground literals
        exhaustive: Check minimality by trying every proper subset

    Returns:
        True iff candidate is consistent, closed under the reduct and minimal
    """
    literals = frozenset(candidate)
    if not is_consistent_set(literals):
        return False
    reduced = reduct(rules, literals)
    if not is_closed(reduced, literals):
        return False

    if exhaustive:
        return not any(
            is_closed(reduced, frozenset(subset))
            for size in range(len(literals))
            for subset in itertools.combinations(sorted(literals, key=str), size)
        )

    if not is_disjunctive(rules):
        return least_model(reduced) == set(literals)
    if is_head_cycle_free(rules):
        shifted = shift(rules)
        return least_model(reduct(shifted, literals)) == set(literals)
    return not _smaller_model_exists(reduced, literals)


def _smaller_model_exists(reduced: list[GroundRule], literals: frozenset[Literal]) -> bool:
    """Search for a proper subset of ``literals`` closed under ``reduced``."""
    atoms = sorted(literals, key=str)
    relevant = [rule for rule in reduced if all(lit in literals for lit in rule.pos_body)]

    def search(chosen: dict[Literal, bool], position: int) -> bool:
        model = {lit for lit, value in chosen.items() if value}
        undecided = set(atoms[position:])
        for rule in relevant:
            if all(lit in model for lit in rule.pos_body):
                if not any(lit in model or lit in undecided for lit in rule.head):
                    return False
        if position == len(atoms):
            return len(model) < len(literals)
        for value in (False, True):
            chosen[atoms[position]] = value
            if search(chosen, position + 1):
                return True
            del chosen[atoms[position]]
        return False

    return search({}, 0)


def regular_only(rules: Iterable[GroundRule]) -> list[GroundRule]:
    """Reject cr-rules: the engine only ever sees regular programs."""
    checked = list(rules)
    for rule in checked:
        if rule.kind is RuleKind.CR:
            raise ValueError(f"cr-rule '{rule}' must be turned into a regular rule first")
    return checked
