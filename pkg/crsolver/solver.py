"""Answer sets of ground SPARC programs.

An answer set of the program is an answer set of the regular rules plus
``alpha`` of the rules in some abductive support. Each reported set records
the names of the cr-rules in its support.
"""

from __future__ import annotations

import time
from dataclasses import replace

from loguru import logger

from aspcore import AnswerSet, AnswerSetBackend, SearchBackend, is_answer_set
from aspcore.base import order_answer_sets
from crsolver.support import AbductiveSupport, alpha_all, find_supports
from grounder.base import GroundProgram, GroundRule
from syntax.nodes import Literal


def sparc_answer_sets(
    ground: GroundProgram, limit: int = 0, backend: AnswerSetBackend | None = None
) -> list[AnswerSet]:
    """Answer sets of the regular rules plus alpha of each minimal abductive support.

    Args:
        ground: Ground program
        limit: Maximum number of answer sets (0 = all)
        backend: Answer-set engine (propagation search by default)

    Returns:
        Answer sets without sort atoms, ordered by cardinality then literals;
        a set reachable from several supports keeps the first support
    """
    engine = backend or SearchBackend()
    started = time.perf_counter()
    found: list[AnswerSet] = []
    for support in find_supports(ground, engine):
        for answer in engine.answer_sets(program_for(ground, support)):
            found.append(replace(answer, support=support.names))

    seen: dict[frozenset[Literal], AnswerSet] = {}
    for answer in found:
        seen.setdefault(answer.literals, answer)
    result = order_answer_sets(list(seen.values()))
    if limit:
        result = result[:limit]

    logger.debug(f"SPARC solve: {len(result)} answer sets in {time.perf_counter() - started:.3f}s")
    return result


def program_for(ground: GroundProgram, support: AbductiveSupport) -> list[GroundRule]:
    """Regular rules extended with the support's cr-rules made regular."""
    return list(ground.regular) + alpha_all(support.rules)


def witness_holds(ground: GroundProgram, answer: AnswerSet) -> bool:
    """Re-check that ``answer`` is an answer set of the regular rules plus its recorded support."""
    by_name = {rule.name: rule for rule in ground.cr}
    try:
        chosen = tuple(by_name[name] for name in answer.support)
    except KeyError:
        return False
    return is_answer_set(program_for(ground, AbductiveSupport(chosen)), answer.literals)


def present(answer: AnswerSet, ground: GroundProgram, show_sorts: bool = False) -> AnswerSet:
    """Add the sort-definition atoms to show with an answer set.

    By default only non-unary sort-definition atoms that a rule applied in
    the answer set relied on are shown (``t(a,b)`` for ``p(a,b) :- s3(a),
    t(a,b).``). ``show_sorts`` adds the whole answer set of the sort
    definition.
    """
    if show_sorts:
        return replace(answer, literals=answer.literals | frozenset(ground.sort_facts))

    names = set(answer.support)
    applied = list(ground.regular) + [rule for rule in ground.cr if rule.name in names]
    shown: set[Literal] = set()
    for rule in applied:
        if not rule.conditions:
            continue
        fires = all(lit in answer.literals for lit in rule.pos_body) and not any(
            lit in answer.literals for lit in rule.neg_body
        )
        if fires:
            shown.update(
                lit for lit in rule.conditions if len(lit.args) != 1 and not _under_not(rule, lit)
            )
    return replace(answer, literals=answer.literals | frozenset(shown))


def _under_not(rule: GroundRule, literal: Literal) -> bool:
    return any(item.naf and item.literal == literal for item in rule.body)


def with_sort_facts(answers: list[AnswerSet], ground: GroundProgram) -> list[AnswerSet]:
    """Answer sets extended by the whole sort-definition answer set."""
    facts = frozenset(ground.sort_facts)
    return [replace(answer, literals=answer.literals | facts) for answer in answers]


def format_support(answer: AnswerSet) -> str:
    return "{" + ", ".join(str(name) for name in answer.support) + "}"
