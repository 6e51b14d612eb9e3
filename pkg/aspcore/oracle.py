"""Brute-force answer-set oracle.

Enumerates every subset of the head literals, smallest first, and keeps
those passing the exhaustive answer-set test. Only usable on small programs;
it exists to cross-check the search engine.
"""

from __future__ import annotations

import itertools

from loguru import logger

from aspcore.base import AnswerSet, AnswerSetBackend, WeakConstraint, order_answer_sets, violations
from aspcore.semantics import is_answer_set, regular_only
from config.settings import settings
from grounder.base import GroundRule
from syntax.nodes import literal_key
from utils.exceptions import SearchCapacityError


class BruteForceBackend(AnswerSetBackend):
    """Subset-enumeration oracle for programs with few head literals."""

    name = "oracle"

    def __init__(self, literal_limit: int | None = None) -> None:
        self.literal_limit = literal_limit

    @property
    def limit(self) -> int:
        return self.literal_limit if self.literal_limit is not None else settings.ORACLE_LITERAL_LIMIT

    def answer_sets(self, rules: list[GroundRule], limit: int = 0) -> list[AnswerSet]:
        found = self._enumerate(regular_only(rules))
        return found[:limit] if limit else found

    def answer_sets_weak(
        self, rules: list[GroundRule], weaks: list[WeakConstraint], limit: int = 0
    ) -> list[AnswerSet]:
        found = self._enumerate(regular_only(rules))
        if not found or not weaks:
            return found[:limit] if limit else found
        counts = [violations(weaks, answer.literals) for answer in found]
        best = min(counts)
        optimal = [answer for answer, count in zip(found, counts) if count == best]
        return optimal[:limit] if limit else optimal

    def _enumerate(self, rules: list[GroundRule]) -> list[AnswerSet]:
        literals = sorted({lit for rule in rules for lit in rule.head}, key=literal_key)
        if len(literals) > self.limit:
            raise SearchCapacityError(
                f"oracle enumerates at most {self.limit} head literals, program has {len(literals)}"
            )
        found = [
            AnswerSet(frozenset(subset))
            for size in range(len(literals) + 1)
            for subset in itertools.combinations(literals, size)
            if is_answer_set(rules, frozenset(subset), exhaustive=True)
        ]
        logger.debug(f"Oracle: {len(literals)} literals, {len(found)} answer sets")
        return order_answer_sets(found)
