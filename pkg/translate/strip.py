"""Post-processing of counterpart answer sets."""

from __future__ import annotations

from aspcore.base import AnswerSet
from sortcheck.language import Language
from syntax.nodes import Literal, Term
from translate.translator import DEFAULT_APPL_SYMBOL


def strip_appl(answer: AnswerSet, appl: str = DEFAULT_APPL_SYMBOL) -> AnswerSet:
    """Drop every ``appl`` and ``-appl`` literal.

    The names inside positive ``appl`` literals become the support of the
    result, so a counterpart answer set keeps the cr-rules it applied.
    """
    kept: set[Literal] = set()
    applied: list[Term] = []
    for literal in answer.literals:
        if literal.is_relation or literal.predicate != appl:
            kept.add(literal)
        elif not literal.negated and len(literal.args) == 1:
            applied.append(literal.args[0])
    applied.sort(key=str)
    return AnswerSet(frozenset(kept), tuple(applied) or answer.support)


def restrict(answer: AnswerSet, language: Language) -> AnswerSet:
    """Keep the literals whose predicate belongs to ``language``."""
    return AnswerSet(
        frozenset(lit for lit in answer.literals if language.contains_literal(lit)),
        answer.support,
    )
