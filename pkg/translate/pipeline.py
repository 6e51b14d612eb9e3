"""Solving a SPARC program through its counterpart.

The counterpart text is re-parsed, grounded by the plain grounder and
solved with weak constraints, in process or by an external DLV.
"""

from __future__ import annotations

import time

from loguru import logger

from aspcore import AnswerSet, AnswerSetBackend, SearchBackend, WeakConstraint
from aspcore.base import order_answer_sets
from grounder.plain import ground_dlv
from sortcheck.checker import CheckedProgram
from syntax.lexer import tokenize
from syntax.parser import parse_rules
from translate.external import run_external_solver
from translate.strip import restrict, strip_appl
from translate.translator import CounterpartProgram, emit_dlv_text, translate


def counterpart_answer_sets(
    counterpart: CounterpartProgram,
    limit: int = 0,
    backend: AnswerSetBackend | None = None,
) -> list[AnswerSet]:
    """Optimal answer sets of the counterpart, ``appl`` literals included."""
    started = time.perf_counter()
    text = emit_dlv_text(counterpart)
    rules = parse_rules(tokenize(text, "<counterpart>"), "<counterpart>")
    regular, weak = ground_dlv(rules)
    engine = backend or SearchBackend()
    answers = engine.answer_sets_weak(regular, [WeakConstraint.from_rule(w) for w in weak], limit)
    logger.debug(
        f"Counterpart solve: {len(regular)} ground rules, {len(weak)} weak constraints, "
        f"{len(answers)} optimal answer sets in {time.perf_counter() - started:.3f}s"
    )
    return answers


def translated_answer_sets(
    checked: CheckedProgram,
    limit: int = 0,
    backend: AnswerSetBackend | None = None,
    external: bool = False,
    solver_path: str | None = None,
) -> list[AnswerSet]:
    """Counterpart answer sets with ``appl`` stripped, over the program's language.

    These include the atoms of the sort definition.

    Args:
        checked: Program that passed the sort check
        limit: Maximum number of answer sets (0 = all)
        backend: In-process engine
        external: Solve with a DLV executable instead
        solver_path: That executable (``settings.SOLVER_PATH`` when omitted)

    Returns:
        Answer sets ordered by cardinality then literals; the support of
        each lists the cr-rule names it applied
    """
    counterpart = translate(checked)
    if external:
        models = run_external_solver(emit_dlv_text(counterpart), solver_path)
        found = [AnswerSet(literals) for literals in models]
    else:
        found = counterpart_answer_sets(counterpart, limit, backend)

    result = order_answer_sets(
        [restrict(strip_appl(answer, counterpart.appl), checked.language) for answer in found]
    )
    return result[:limit] if limit else result


def solve_by_translation(
    checked: CheckedProgram,
    limit: int = 0,
    backend: AnswerSetBackend | None = None,
    external: bool = False,
) -> list[AnswerSet]:
    """Like :func:`translated_answer_sets`, without the sort-definition atoms.

    The result can be compared with the direct solver's answer sets.
    """
    sort_atoms = frozenset(checked.interpretation.sort_atoms)
    answers = translated_answer_sets(checked, 0, backend, external)
    result = order_answer_sets(
        [
            AnswerSet(frozenset(lit for lit in answer.literals if lit not in sort_atoms), answer.support)
            for answer in answers
        ]
    )
    return result[:limit] if limit else result
