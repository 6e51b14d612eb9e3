"""Abductive supports: smallest sets of cr-rules whose regular versions restore consistency."""

from __future__ import annotations

import itertools
import time
from collections.abc import Iterable
from dataclasses import dataclass

from loguru import logger

from aspcore import AnswerSetBackend, SearchBackend
from grounder.base import GroundProgram, GroundRule
from syntax.nodes import Literal, RuleKind, Term, term_key


def alpha(rule: GroundRule) -> GroundRule:
    """The regular rule obtained by replacing ``:+`` with ``:-``."""
    if rule.kind is not RuleKind.CR:
        raise ValueError(f"alpha applies to cr-rules only, got '{rule}'")
    return rule.with_kind(RuleKind.REGULAR)


def alpha_all(rules: Iterable[GroundRule]) -> list[GroundRule]:
    return [alpha(rule) for rule in rules]


def _name_key(rule: GroundRule) -> tuple:
    return term_key(rule.name) if rule.name is not None else ()


@dataclass(frozen=True)
class AbductiveSupport:
    """A cardinality-minimal set of ground cr-rules restoring consistency."""

    rules: tuple[GroundRule, ...] = ()

    @property
    def names(self) -> tuple[Term, ...]:
        return tuple(rule.name for rule in self.rules if rule.name is not None)

    def __len__(self) -> int:
        return len(self.rules)

    def __str__(self) -> str:
        return "{" + ", ".join(str(name) for name in self.names) + "}"


def derivable_literals(rules: Iterable[GroundRule]) -> set[Literal]:
    """Literals some chain of rules could derive, ignoring ``not``."""
    derived: set[Literal] = set()
    pending = [rule for rule in rules if rule.head]
    changed = True
    while changed:
        changed = False
        remaining = []
        for rule in pending:
            if all(lit in derived for lit in rule.pos_body):
                derived.update(rule.head)
                changed = True
            else:
                remaining.append(rule)
        pending = remaining
    return derived


def active_cr_rules(ground: GroundProgram) -> list[GroundRule]:
    """cr-rules that could ever fire; the others are inert and left out of the search."""
    derivable = derivable_literals(list(ground.regular) + alpha_all(ground.cr))
    active = [rule for rule in ground.cr if all(lit in derivable for lit in rule.pos_body)]
    inert = [str(rule.name) for rule in ground.cr if rule not in active]
    if inert:
        logger.warning(f"Pruned {len(inert)} inert cr-rules: {', '.join(inert[:10])}")
    return sorted(active, key=_name_key)


def find_supports(
    ground: GroundProgram, backend: AnswerSetBackend | None = None
) -> list[AbductiveSupport]:
    """All abductive supports of the smallest cardinality that exists.

    Subsets of the cr-rules are tried by increasing size; at the first size
    with a consistent choice every consistent subset of that size is
    returned, ordered by the names of its rules.

    Returns:
        Supports (``[AbductiveSupport()]`` when the regular part is
        consistent, ``[]`` when nothing restores consistency)
    """
    engine = backend or SearchBackend()
    started = time.perf_counter()
    regular = list(ground.regular)
    candidates = active_cr_rules(ground)

    for size in range(len(candidates) + 1):
        found = [
            AbductiveSupport(chosen)
            for chosen in itertools.combinations(candidates, size)
            if engine.is_consistent(regular + alpha_all(chosen))
        ]
        if found:
            logger.debug(
                f"Found {len(found)} abductive supports of size {size} "
                f"in {time.perf_counter() - started:.3f}s"
            )
            return sorted(found, key=lambda s: tuple(_name_key(r) for r in s.rules))
        logger.debug(f"No abductive support of size {size}")

    logger.debug(f"No subset of {len(candidates)} cr-rules restores consistency")
    return []
