"""Ground rules and ground programs shared by the grounders and the solvers."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from syntax.nodes import BodyItem, Literal, RuleKind, Term, format_rule


@dataclass(frozen=True)
class GroundRule:
    """A variable-free rule.

    ``body`` keeps the ground body in source order for printing; literals in
    ``conditions`` were already decided against the sort definition and are
    ignored by the solvers.
    """

    kind: RuleKind
    head: tuple[Literal, ...]
    body: tuple[BodyItem, ...] = ()
    origin: int = 0
    name: Term | None = None
    conditions: frozenset[Literal] = field(default=frozenset(), compare=False)

    @property
    def pos_body(self) -> tuple[Literal, ...]:
        return tuple(
            item.literal for item in self.body if not item.naf and item.literal not in self.conditions
        )

    @property
    def neg_body(self) -> tuple[Literal, ...]:
        return tuple(
            item.literal for item in self.body if item.naf and item.literal not in self.conditions
        )

    @property
    def is_constraint(self) -> bool:
        return not self.head

    @property
    def is_fact(self) -> bool:
        return len(self.head) == 1 and not self.pos_body and not self.neg_body

    def with_kind(self, kind: RuleKind) -> GroundRule:
        return replace(self, kind=kind)

    def __str__(self) -> str:
        return format_rule(self.kind, self.head, [str(item) for item in self.body])


def make_rule(
    head: tuple[Literal, ...] | list[Literal],
    pos: tuple[Literal, ...] | list[Literal] = (),
    neg: tuple[Literal, ...] | list[Literal] = (),
    kind: RuleKind = RuleKind.REGULAR,
    origin: int = 0,
    name: Term | None = None,
) -> GroundRule:
    """Build a ground rule from head, positive and ``not`` parts."""
    body = tuple(BodyItem(lit) for lit in pos) + tuple(BodyItem(lit, naf=True) for lit in neg)
    return GroundRule(kind, tuple(head), body, origin, name)


@dataclass(frozen=True)
class GroundProgram:
    """Ground program rules, split into regular rules and cr-rules.

    Attributes:
        regular: Ground regular rules
        cr: Ground cr-rules, each carrying its name term
        sort_facts: The answer set of the sort definition
    """

    regular: tuple[GroundRule, ...] = ()
    cr: tuple[GroundRule, ...] = ()
    sort_facts: tuple[Literal, ...] = ()

    @property
    def rules(self) -> list[GroundRule]:
        """All ground rules in origin order."""
        return sorted(self.regular + self.cr, key=lambda rule: rule.origin)

    def __len__(self) -> int:
        return len(self.regular) + len(self.cr)
