"""Propagation-based search for answer sets of ground programs.

The search assigns truth values to the literals that occur in some rule
head (nothing else can be true). After each decision it propagates:

- forward: a rule whose body holds needs a true head literal
- backward: a rule whose head is false needs a false body
- support: a literal with no rule left that could support it is false
- consistency: a literal and its complement are never both true

Every total assignment is re-checked with the reduct-based answer-set test.
With weak constraints the search keeps the best violation count found so
far and cuts branches that already violate more.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from loguru import logger

from aspcore.base import AnswerSet, AnswerSetBackend, WeakConstraint, order_answer_sets, violations
from aspcore.semantics import is_answer_set, regular_only
from config.settings import settings
from grounder.base import GroundRule
from syntax.nodes import Literal, literal_key
from utils.exceptions import SearchCapacityError

Assignment = list  # list[bool | None] indexed by literal id


@dataclass(frozen=True)
class _Clause:
    head: tuple[int, ...]
    pos: tuple[int, ...]
    neg: tuple[int, ...]


class _LimitReached(Exception):
    pass


class _Problem:
    """Rules and weak constraints compiled to integer literal ids."""

    def __init__(self, rules: list[GroundRule], weaks: list[WeakConstraint]) -> None:
        heads = {lit for rule in rules for lit in rule.head}
        self.literals: list[Literal] = sorted(heads, key=literal_key)
        self.ids = {lit: i for i, lit in enumerate(self.literals)}

        self.clauses: list[_Clause] = []
        for rule in rules:
            compiled = self._compile(rule.head, rule.pos_body, rule.neg_body)
            if compiled is not None:
                self.clauses.append(compiled)

        self.weaks: list[_Clause] = []
        for weak in weaks:
            compiled = self._compile((), weak.pos_body, weak.neg_body)
            if compiled is not None:
                self.weaks.append(compiled)

        self.supporters: list[list[_Clause]] = [[] for _ in self.literals]
        for clause in self.clauses:
            for head in clause.head:
                self.supporters[head].append(clause)

        self.complements: list[int | None] = [
            self.ids.get(lit.complement()) for lit in self.literals
        ]

    def _compile(self, head, pos, neg) -> _Clause | None:
        if any(lit not in self.ids for lit in pos):
            return None
        return _Clause(
            tuple(self.ids[lit] for lit in head),
            tuple(self.ids[lit] for lit in pos),
            tuple(self.ids[lit] for lit in neg if lit in self.ids),
        )


def _body_state(clause: _Clause, values: Assignment) -> bool | None:
    """True when the body holds, False when it cannot, None while open."""
    state: bool | None = True
    for i in clause.pos:
        if values[i] is False:
            return False
        if values[i] is None:
            state = None
    for i in clause.neg:
        if values[i] is True:
            return False
        if values[i] is None:
            state = None
    return state


def _propagate(problem: _Problem, values: Assignment) -> bool:
    changed = True
    while changed:
        changed = False

        for clause in problem.clauses:
            body = _body_state(clause, values)
            if body is False:
                continue
            open_heads = [i for i in clause.head if values[i] is None]
            if any(values[i] is True for i in clause.head):
                continue
            if body is True:
                if not open_heads:
                    return False
                if len(open_heads) == 1:
                    values[open_heads[0]] = True
                    changed = True
                continue
            if open_heads:
                continue
            open_pos = [i for i in clause.pos if values[i] is None]
            open_neg = [i for i in clause.neg if values[i] is None]
            if len(open_pos) + len(open_neg) == 1:
                if open_pos:
                    values[open_pos[0]] = False
                else:
                    values[open_neg[0]] = True
                changed = True

        for lit_id, value in enumerate(values):
            if value is False:
                continue
            supported = any(
                _body_state(clause, values) is not False
                and not any(values[h] is True for h in clause.head if h != lit_id)
                for clause in problem.supporters[lit_id]
            )
            if not supported:
                if value is True:
                    return False
                values[lit_id] = False
                changed = True

        for lit_id, other in enumerate(problem.complements):
            if other is None or values[lit_id] is not True:
                continue
            if values[other] is True:
                return False
            if values[other] is None:
                values[other] = False
                changed = True

    return True


def _violated(problem: _Problem, values: Assignment) -> int:
    return sum(1 for weak in problem.weaks if _body_state(weak, values) is True)


class SearchBackend(AnswerSetBackend):
    """Answer-set search with propagation and weak-constraint branch-and-bound."""

    name = "search"

    def __init__(self, candidate_cap: int | None = None) -> None:
        self.candidate_cap = candidate_cap
        self.nodes = 0

    @property
    def cap(self) -> int:
        return self.candidate_cap if self.candidate_cap is not None else settings.CANDIDATE_CAP

    def answer_sets(self, rules: list[GroundRule], limit: int = 0) -> list[AnswerSet]:
        # search order is not answer-set order: collect everything, then truncate
        found = self._solve(regular_only(rules), [], 0)
        return found[:limit] if limit else found

    def is_consistent(self, rules: list[GroundRule]) -> bool:
        return bool(self._solve(regular_only(rules), [], 1))

    def answer_sets_weak(
        self, rules: list[GroundRule], weaks: list[WeakConstraint], limit: int = 0
    ) -> list[AnswerSet]:
        found = self._solve(regular_only(rules), list(weaks), 0)
        return found[:limit] if limit else found

    def _solve(self, rules: list[GroundRule], weaks: list[WeakConstraint], limit: int) -> list[AnswerSet]:
        started = time.perf_counter()
        problem = _Problem(rules, weaks)
        self.nodes = 0
        found: list[AnswerSet] = []
        best = [len(problem.weaks) + 1]
        cap = self.cap

        def visit(values: Assignment) -> None:
            self.nodes += 1
            if self.nodes > cap:
                raise SearchCapacityError(
                    f"answer-set search explored more than {cap} candidates "
                    "(raise SPARC_CANDIDATE_CAP or --candidate-cap)"
                )
            if not _propagate(problem, values):
                return
            if weaks and _violated(problem, values) > best[0]:
                return

            try:
                branch = values.index(None)
            except ValueError:
                self._record(problem, rules, weaks, values, found, best, limit)
                return

            for choice in (False, True):
                child = list(values)
                child[branch] = choice
                visit(child)

        try:
            visit([None] * len(problem.literals))
        except _LimitReached:
            pass

        result = order_answer_sets(found)
        logger.debug(
            f"Search: {len(problem.literals)} literals, {len(problem.clauses)} rules, "
            f"{self.nodes} nodes, {len(result)} answer sets in {time.perf_counter() - started:.3f}s"
        )
        return result

    @staticmethod
    def _record(problem, rules, weaks, values, found, best, limit) -> None:
        literals = frozenset(problem.literals[i] for i, value in enumerate(values) if value)
        if not is_answer_set(rules, literals):
            return
        if weaks:
            count = violations(weaks, literals)
            if count < best[0]:
                best[0] = count
                found.clear()
            if count > best[0]:
                return
        found.append(AnswerSet(literals))
        if limit and not weaks and len(found) >= limit:
            raise _LimitReached
