"""Sort-respecting grounding of program rules.

Every variable ranges over the intersection of the candidate sets its
positions imply: the declared sort of each predicate argument it occupies
and the extension of every sort-definition atom it appears in positively.
``nat`` never contributes candidates; a variable constrained by nothing else
cannot be grounded.
"""

from __future__ import annotations

import itertools
import time

from loguru import logger

from grounder.base import GroundProgram, GroundRule
from logic.arithmetic import Binding, holds
from logic.unify import ground_literal, mask_arith, match_args, plain_variables
from sortcheck.declarations import DeclarationTable
from sortcheck.sorts import NAT, SortInterpretation
from syntax.nodes import (
    BodyItem,
    Literal,
    Program,
    Rule,
    RuleKind,
    Term,
    rule_variables,
    term_key,
)
from translate.naming import DEFAULT_NAME_SYMBOL, name_cr_rule
from utils.exceptions import EvaluationError, GroundingSafetyError

Candidates = dict[str, set[Term]]


def candidate_sets(rule: Rule, interp: SortInterpretation, decls: DeclarationTable) -> Candidates:
    """Values each variable may take, before instances are checked.

    Raises:
        GroundingSafetyError: A variable occupies no position of a defined sort
    """
    found: dict[str, set[Term] | None] = {name: None for name in rule_variables(rule)}

    def restrict(values: dict[str, set[Term]]) -> None:
        for name, options in values.items():
            current = found.get(name)
            found[name] = set(options) if current is None else current & options

    occurrences = list(rule.head) + [item.literal for item in rule.body]
    for literal in occurrences:
        sorts = decls.lookup(literal)
        if sorts is None:
            continue
        for sort, arg in zip(sorts, literal.args):
            if sort == NAT or not plain_variables(arg):
                continue
            restrict(_project((arg,), [(member,) for member in interp.members(sort)]))

    for item in rule.body:
        literal = item.literal
        if item.naf or literal.negated or literal.is_relation:
            continue
        if (literal.predicate, len(literal.args)) not in interp.predicates:
            continue
        if len(literal.args) == 1 and literal.predicate in interp.defined:
            rows = [(member,) for member in interp.members(literal.predicate)]
        else:
            rows = sorted(
                interp.relations.get((literal.predicate, len(literal.args)), frozenset()),
                key=lambda row: tuple(term_key(t) for t in row),
            )
        restrict(_project(literal.args, rows))

    result: Candidates = {}
    for name, options in found.items():
        if options is None:
            raise GroundingSafetyError(name, str(rule))
        result[name] = options
    return result


def _project(pattern: tuple[Term, ...], rows: list[tuple[Term, ...]]) -> dict[str, set[Term]]:
    """Per variable, the values it takes in rows matching ``pattern``.

    Variables inside arithmetic are not projected.
    """
    names = {name for arg in pattern for name in plain_variables(arg)}
    values: dict[str, set[Term]] = {name: set() for name in names}
    for row in rows:
        binding = match_args(tuple(mask_arith(arg) for arg in pattern), row, {})
        if binding is None:
            continue
        for name in names:
            values[name].add(binding[name])
    return values


def ground_rule(
    rule: Rule,
    interp: SortInterpretation,
    decls: DeclarationTable,
    cr_index: int | None = None,
    name_symbol: str = DEFAULT_NAME_SYMBOL,
) -> list[GroundRule]:
    """All sort-respecting ground instances of ``rule``.

    Args:
        rule: A program rule
        interp: Evaluated sort definition
        decls: Declaration table
        cr_index: Position of the rule among the cr-rules (cr-rules only)
        name_symbol: Function symbol of cr-rule names

    Returns:
        Instances ordered by substitution, the last variable varying slowest
    """
    candidates = candidate_sets(rule, interp, decls)
    variables = list(candidates)
    ordered = [sorted(candidates[name], key=term_key) for name in variables]
    name = None
    if rule.kind is RuleKind.CR:
        name = name_cr_rule(rule, cr_index if cr_index is not None else rule.index, name_symbol)

    instances: list[GroundRule] = []
    for values in itertools.product(*reversed(ordered)):
        binding: Binding = dict(zip(variables, reversed(values)))
        instance = _instantiate(rule, binding, interp, decls)
        if instance is None:
            continue
        if name is not None:
            instance = GroundRule(
                instance.kind,
                instance.head,
                instance.body,
                instance.origin,
                name.ground([binding[v] for v in name.variables]),
                instance.conditions,
            )
        instances.append(instance)
    return instances


def _instantiate(
    rule: Rule, binding: Binding, interp: SortInterpretation, decls: DeclarationTable
) -> GroundRule | None:
    try:
        head = tuple(ground_literal(lit, binding) for lit in rule.head)
        body: list[BodyItem] = []
        conditions: set[Literal] = set()
        for item in rule.body:
            literal = item.literal
            if literal.is_relation:
                if not holds(literal.atom, binding):  # type: ignore[arg-type]
                    return None
                continue
            ground = ground_literal(literal, binding)
            if decls.lookup(ground) is None:
                satisfied = interp.holds(ground)
                if satisfied == item.naf:
                    return None
                conditions.add(ground)
            body.append(BodyItem(ground, item.naf))
    except EvaluationError:
        return None

    for literal in head + tuple(item.literal for item in body):
        if not _respects_sorts(literal, interp, decls):
            return None

    return GroundRule(rule.kind, head, tuple(body), rule.index, None, frozenset(conditions))


def _respects_sorts(literal: Literal, interp: SortInterpretation, decls: DeclarationTable) -> bool:
    sorts = decls.lookup(literal)
    if sorts is None:
        return True
    return all(interp.contains(sort, arg) for sort, arg in zip(sorts, literal.args))


def ground_program(
    program: Program,
    interp: SortInterpretation,
    decls: DeclarationTable | None = None,
    name_symbol: str = DEFAULT_NAME_SYMBOL,
) -> GroundProgram:
    """Ground the program rules: the union of the sort-respecting instances of every rule.

    cr-rules are numbered in textual order from 1 and their instances named
    ``rn(i, t1, ..., tn)``.
    """
    started = time.perf_counter()
    table = decls if decls is not None else DeclarationTable.from_declarations(program.declarations)

    regular: list[GroundRule] = []
    cr: list[GroundRule] = []
    cr_index = 0
    for rule in program.rules:
        if rule.kind is RuleKind.CR:
            cr_index += 1
            cr.extend(ground_rule(rule, interp, table, cr_index, name_symbol))
        else:
            regular.extend(ground_rule(rule, interp, table))

    logger.debug(
        f"Grounded {len(program.rules)} rules into {len(regular)} regular and {len(cr)} cr "
        f"instances in {time.perf_counter() - started:.3f}s"
    )
    return GroundProgram(
        regular=tuple(regular),
        cr=tuple(cr),
        sort_facts=interp.sort_atoms,
    )


__all__ = ["candidate_sets", "ground_rule", "ground_program"]
