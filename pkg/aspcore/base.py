from abc import ABC, abstractmethod
from dataclasses import dataclass

from grounder.base import GroundRule
from syntax.nodes import Literal, RuleKind, Term, format_rule, literal_key


@dataclass(frozen=True)
class AnswerSet:
    """A consistent set of ground literals, with the cr-rule names that produced it."""

    literals: frozenset[Literal]
    support: tuple[Term, ...] = ()

    def sorted_literals(self) -> list[Literal]:
        return sorted(self.literals, key=literal_key)

    def sort_key(self) -> tuple:
        """Cardinality first, then literal order."""
        return (len(self.literals), tuple(literal_key(lit) for lit in self.sorted_literals()))

    def __contains__(self, literal: Literal) -> bool:
        return literal in self.literals

    def __len__(self) -> int:
        return len(self.literals)

    def __str__(self) -> str:
        return "{" + ", ".join(str(lit) for lit in self.sorted_literals()) + "}"


@dataclass(frozen=True)
class WeakConstraint:
    """``:~ pos, not neg.`` violated when pos holds and no neg literal does."""

    pos_body: tuple[Literal, ...] = ()
    neg_body: tuple[Literal, ...] = ()

    @classmethod
    def from_rule(cls, rule: GroundRule) -> "WeakConstraint":
        return cls(rule.pos_body, rule.neg_body)

    def violated_by(self, literals: frozenset[Literal] | set[Literal]) -> bool:
        return all(lit in literals for lit in self.pos_body) and not any(
            lit in literals for lit in self.neg_body
        )

    def __str__(self) -> str:
        body = [str(lit) for lit in self.pos_body] + [f"not {lit}" for lit in self.neg_body]
        return format_rule(RuleKind.WEAK, (), body)


def violations(weaks: list[WeakConstraint] | tuple[WeakConstraint, ...], literals: frozenset[Literal]) -> int:
    """Number of weak constraints ``literals`` violates."""
    return sum(1 for weak in weaks if weak.violated_by(literals))


def order_answer_sets(found: list[AnswerSet]) -> list[AnswerSet]:
    """Deduplicate and order by (cardinality, literal order)."""
    unique = {answer.literals: answer for answer in found}
    return sorted(unique.values(), key=AnswerSet.sort_key)


class AnswerSetBackend(ABC):
    """Abstract base class for ground answer-set engines."""

    name: str = "abstract"

    @abstractmethod
    def answer_sets(self, rules: list[GroundRule], limit: int = 0) -> list[AnswerSet]:
        """
        Answer sets of a ground regular program.

        Args:
            rules: Ground regular rules and constraints
            limit: Maximum number of answer sets (0 = all)

        Returns:
            Answer sets ordered by cardinality, then literal order
        """
        pass

    @abstractmethod
    def answer_sets_weak(
        self, rules: list[GroundRule], weaks: list[WeakConstraint], limit: int = 0
    ) -> list[AnswerSet]:
        """
        Answer sets violating the fewest weak constraints.

        Args:
            rules: Ground regular rules and constraints
            weaks: Ground weak constraints (all of weight 1)
            limit: Maximum number of answer sets (0 = all optimal ones)

        Returns:
            Optimal answer sets ordered like :meth:`answer_sets`
        """
        pass

    def is_consistent(self, rules: list[GroundRule]) -> bool:
        """Whether the program has at least one answer set."""
        return bool(self.answer_sets(rules, limit=1))
