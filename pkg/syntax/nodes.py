"""AST node types for SPARC programs.

Terms, atoms, literals and rules are frozen dataclasses so they hash and
compare structurally; source spans ride along but never take part in
equality. Ground terms produced by evaluation simply carry no span.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import Enum
from typing import Union


@dataclass(frozen=True)
class Span:
    """Line/column range of a node in its source (1-based, end inclusive)."""

    line: int
    column: int
    end_line: int
    end_column: int

    def merge(self, other: Span | None) -> Span:
        if other is None:
            return self
        return Span(self.line, self.column, other.end_line, other.end_column)


def _span() -> Span | None:
    return field(default=None, compare=False, hash=False, repr=False)  # type: ignore[return-value]


# ── Terms ────────────────────────────────────────────────────────────────────

ARITH_PRECEDENCE = {"+": 1, "-": 1, "*": 2, "mod": 2}


@dataclass(frozen=True)
class Variable:
    name: str
    span: Span | None = _span()

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Nat:
    value: int
    span: Span | None = _span()

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class SymConst:
    name: str
    span: Span | None = _span()

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Func:
    functor: str
    args: tuple[Term, ...]
    span: Span | None = _span()

    def __str__(self) -> str:
        return f"{self.functor}({','.join(str(a) for a in self.args)})"


@dataclass(frozen=True)
class Arith:
    op: str
    lhs: Term
    rhs: Term
    span: Span | None = _span()

    def __str__(self) -> str:
        prec = ARITH_PRECEDENCE[self.op]
        left = _operand(self.lhs, prec, right=False)
        right = _operand(self.rhs, prec, right=True)
        if self.op == "mod":
            return f"{left} mod {right}"
        return f"{left}{self.op}{right}"


def _operand(term: Term, prec: int, right: bool) -> str:
    # left-associative: a right operand of equal precedence needs parentheses
    if isinstance(term, Arith):
        inner = ARITH_PRECEDENCE[term.op]
        if inner < prec or (right and inner == prec):
            return f"({term})"
    return str(term)


Term = Union[Variable, Nat, SymConst, Func, Arith]


# ── Atoms and literals ───────────────────────────────────────────────────────

ARITH_RELATIONS = ("=", "!=", ">", ">=", "<", "<=")
SYMBOLIC_RELATIONS = ("=", "!=")


@dataclass(frozen=True)
class Pred:
    symbol: str
    args: tuple[Term, ...] = ()
    span: Span | None = _span()

    @property
    def arity(self) -> int:
        return len(self.args)

    def __str__(self) -> str:
        if not self.args:
            return self.symbol
        return f"{self.symbol}({','.join(str(a) for a in self.args)})"


@dataclass(frozen=True)
class ArithRel:
    rel: str
    lhs: Term
    rhs: Term
    span: Span | None = _span()

    def __str__(self) -> str:
        return f"{self.lhs} {self.rel} {self.rhs}"


@dataclass(frozen=True)
class SymRel:
    rel: str
    lhs: Term
    rhs: Term
    span: Span | None = _span()

    def __str__(self) -> str:
        return f"{self.lhs} {self.rel} {self.rhs}"


Atom = Union[Pred, ArithRel, SymRel]


@dataclass(frozen=True)
class Literal:
    """An atom or its classical negation (``-`` and ``¬`` are the same symbol)."""

    atom: Atom
    negated: bool = False
    span: Span | None = _span()

    @property
    def is_relation(self) -> bool:
        return not isinstance(self.atom, Pred)

    @property
    def predicate(self) -> str:
        assert isinstance(self.atom, Pred)
        return self.atom.symbol

    @property
    def args(self) -> tuple[Term, ...]:
        assert isinstance(self.atom, Pred)
        return self.atom.args

    def complement(self) -> Literal:
        return Literal(self.atom, not self.negated)

    def __str__(self) -> str:
        return f"-{self.atom}" if self.negated else str(self.atom)


@dataclass(frozen=True)
class BodyItem:
    """A body element: a literal, optionally under default negation ``not``."""

    literal: Literal
    naf: bool = False

    def __str__(self) -> str:
        return f"not {self.literal}" if self.naf else str(self.literal)


# ── Rules and programs ───────────────────────────────────────────────────────


class RuleKind(str, Enum):
    """Rule forms: regular (``:-``), consistency-restoring (``:+``), weak (``:~``)."""

    REGULAR = "regular"
    CR = "cr"
    WEAK = "weak"


@dataclass(frozen=True)
class Rule:
    kind: RuleKind
    head: tuple[Literal, ...]
    body: tuple[BodyItem, ...] = ()
    index: int = 0
    span: Span | None = _span()

    @property
    def pos_body(self) -> tuple[Literal, ...]:
        return tuple(item.literal for item in self.body if not item.naf)

    @property
    def neg_body(self) -> tuple[Literal, ...]:
        return tuple(item.literal for item in self.body if item.naf)

    @property
    def is_fact(self) -> bool:
        return self.kind is RuleKind.REGULAR and len(self.head) == 1 and not self.body

    def __str__(self) -> str:
        return format_rule(self.kind, self.head, [str(b) for b in self.body])


def format_rule(kind: RuleKind, head: tuple[Literal, ...], body: list[str]) -> str:
    """Render one rule on one line in the source syntax."""
    head_text = " v ".join(str(h) for h in head)
    body_text = ", ".join(body)
    if kind is RuleKind.WEAK:
        return f":~ {body_text}."
    if kind is RuleKind.CR:
        return f"{head_text} :+ {body_text}." if body_text else f"{head_text} :+ ."
    if not body_text:
        return f"{head_text}."
    if not head_text:
        return f":- {body_text}."
    return f"{head_text} :- {body_text}."


@dataclass(frozen=True)
class Declaration:
    """``pred_symbol(sort,...,sort)`` from the predicates declaration part."""

    predicate: str
    sorts: tuple[str, ...]
    span: Span | None = _span()

    @property
    def arity(self) -> int:
        return len(self.sorts)

    def __str__(self) -> str:
        return f"{self.predicate}({','.join(self.sorts)})"


@dataclass(frozen=True)
class Program:
    """The three consecutive parts of a SPARC program."""

    sort_rules: tuple[Rule, ...] = ()
    declarations: tuple[Declaration, ...] = ()
    rules: tuple[Rule, ...] = ()
    sorts_span: Span | None = _span()
    declarations_span: Span | None = _span()
    rules_span: Span | None = _span()


# ── Helpers ──────────────────────────────────────────────────────────────────


def is_ground(term: Term) -> bool:
    """A ground term contains no variables and no arithmetic function symbols."""
    if isinstance(term, (Nat, SymConst)):
        return True
    if isinstance(term, Func):
        return all(is_ground(a) for a in term.args)
    return False


def term_variables(term: Term) -> Iterator[str]:
    """Yield variable names of ``term`` left to right (with repeats)."""
    if isinstance(term, Variable):
        yield term.name
    elif isinstance(term, Func):
        for arg in term.args:
            yield from term_variables(arg)
    elif isinstance(term, Arith):
        yield from term_variables(term.lhs)
        yield from term_variables(term.rhs)


def atom_terms(atom: Atom) -> tuple[Term, ...]:
    if isinstance(atom, Pred):
        return atom.args
    return (atom.lhs, atom.rhs)


def literal_variables(literal: Literal) -> Iterator[str]:
    for term in atom_terms(literal.atom):
        yield from term_variables(term)


def rule_variables(rule: Rule) -> list[str]:
    """Distinct variables in first-occurrence order: head, then body as written."""
    seen: dict[str, None] = {}
    for lit in rule.head:
        for name in literal_variables(lit):
            seen.setdefault(name, None)
    for item in rule.body:
        for name in literal_variables(item.literal):
            seen.setdefault(name, None)
    return list(seen)


def has_arith(term: Term) -> bool:
    if isinstance(term, Arith):
        return True
    if isinstance(term, Func):
        return any(has_arith(a) for a in term.args)
    return False


def term_key(term: Term) -> tuple:
    """Total order on terms: numbers, then constants, then function terms."""
    if isinstance(term, Nat):
        return (0, term.value)
    if isinstance(term, SymConst):
        return (1, term.name)
    if isinstance(term, Func):
        return (2, term.functor, len(term.args), tuple(term_key(a) for a in term.args))
    if isinstance(term, Variable):
        return (3, term.name)
    return (4, term.op, term_key(term.lhs), term_key(term.rhs))


def literal_key(literal: Literal) -> tuple:
    atom = literal.atom
    if isinstance(atom, Pred):
        return (0, atom.symbol, literal.negated, len(atom.args), tuple(term_key(a) for a in atom.args))
    return (1, type(atom).__name__, atom.rel, term_key(atom.lhs), term_key(atom.rhs))


def pred_literal(symbol: str, *args: Term, negated: bool = False) -> Literal:
    """Build a predicate literal; convenient for tests and generated rules."""
    return Literal(Pred(symbol, tuple(args)), negated)
