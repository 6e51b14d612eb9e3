"""Predicate declarations and their consistency with the program rules."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field

from loguru import logger

from logic.arithmetic import instantiate
from sortcheck.sorts import SortInterpretation
from sortcheck.strata import PredKey
from syntax.diagnostics import Diagnostic
from syntax.nodes import (
    Declaration,
    Literal,
    Rule,
    Span,
    SymConst,
    Func,
    Term,
    atom_terms,
    is_ground,
    term_variables,
)
from utils.exceptions import EvaluationError


@dataclass(frozen=True)
class DeclarationTable:
    """Argument sorts per declared (predicate, arity)."""

    sorts: dict[PredKey, tuple[str, ...]] = field(default_factory=dict)

    @classmethod
    def from_declarations(cls, declarations: tuple[Declaration, ...] | list[Declaration]) -> DeclarationTable:
        table: dict[PredKey, tuple[str, ...]] = {}
        for decl in declarations:
            table.setdefault((decl.predicate, decl.arity), decl.sorts)
        return cls(table)

    def lookup(self, literal: Literal) -> tuple[str, ...] | None:
        if literal.is_relation:
            return None
        return self.sorts.get((literal.predicate, len(literal.args)))

    def arities(self, symbol: str) -> list[int]:
        return sorted(arity for name, arity in self.sorts if name == symbol)

    def __contains__(self, key: PredKey) -> bool:
        return key in self.sorts

    def __len__(self) -> int:
        return len(self.sorts)


def validate_declarations(
    declarations: tuple[Declaration, ...] | list[Declaration],
    interp: SortInterpretation,
    rules: tuple[Rule, ...] | list[Rule],
    path: str = "<input>",
) -> list[Diagnostic]:
    """Check declarations against the sort definition and the program rules.

    Returns:
        Error diagnostics, followed by warnings about declared predicates
        that no rule uses
    """
    errors: list[Diagnostic] = []
    warnings: list[Diagnostic] = []
    sort_symbols = {name for name, _ in interp.predicates}

    def report(span: Span | None, message: str, severity: str = "error") -> None:
        line, column = (span.line, span.column) if span else (0, 0)
        target = errors if severity == "error" else warnings
        target.append(Diagnostic(line, column, message, severity, path))  # type: ignore[arg-type]

    seen: set[PredKey] = set()
    for decl in declarations:
        key = (decl.predicate, decl.arity)
        if key in seen:
            report(decl.span, f"duplicate declaration of {decl.predicate}/{decl.arity}")
        seen.add(key)
        if decl.predicate in sort_symbols:
            report(
                decl.span,
                f"declared predicate {decl.predicate} also occurs in the sort definition",
            )
        for sort in decl.sorts:
            if not interp.is_sort(sort):
                report(decl.span, f"unknown sort '{sort}' in declaration {decl}")

    table = DeclarationTable.from_declarations(declarations)
    used: set[PredKey] = set()

    for rule in rules:
        for literal in rule.head:
            if literal.predicate in sort_symbols:
                report(
                    literal.span or rule.span,
                    f"sort predicate {literal.predicate} cannot occur in the head of '{rule}'",
                )
                continue
            _check_declared(literal, table, rule, report, used)

        for item in rule.body:
            literal = item.literal
            if literal.is_relation:
                for term in atom_terms(literal.atom):
                    _check_defined(term, interp, literal, rule, report)
                continue
            key = (literal.predicate, len(literal.args))
            if literal.predicate in sort_symbols:
                if key not in interp.predicates:
                    report(
                        literal.span or rule.span,
                        f"{literal.predicate} is used with {len(literal.args)} arguments but the "
                        "sort definition uses another arity",
                    )
                elif literal.negated:
                    report(
                        literal.span or rule.span,
                        f"sort predicate {literal.predicate} cannot be classically negated",
                    )
                for term in literal.args:
                    _check_defined(term, interp, literal, rule, report)
                continue
            _check_declared(literal, table, rule, report, used)

        for literal in _declared_occurrences(rule, table):
            for sort, term in zip(table.lookup(literal) or (), literal.args):
                _check_ground_argument(term, sort, interp, literal, rule, report)

    for decl in declarations:
        if (decl.predicate, decl.arity) not in used:
            report(decl.span, f"predicate {decl} is declared but never used", "warning")
            logger.warning(f"{path}: predicate {decl} is declared but never used")

    return errors + warnings


def _check_declared(literal, table: DeclarationTable, rule: Rule, report, used: set[PredKey]) -> None:
    key = (literal.predicate, len(literal.args))
    if key in table:
        used.add(key)
        return
    arities = table.arities(literal.predicate)
    if arities:
        declared = ", ".join(f"{literal.predicate}/{n}" for n in arities)
        report(
            literal.span or rule.span,
            f"{literal.predicate} is used with {len(literal.args)} arguments but declared as {declared}",
        )
    else:
        report(literal.span or rule.span, f"predicate {literal.predicate}/{len(literal.args)} is not declared")


def _declared_occurrences(rule: Rule, table: DeclarationTable) -> Iterator[Literal]:
    for literal in rule.head:
        if table.lookup(literal) is not None:
            yield literal
    for item in rule.body:
        if table.lookup(item.literal) is not None:
            yield item.literal


def _check_ground_argument(
    term: Term, sort: str, interp: SortInterpretation, literal: Literal, rule: Rule, report
) -> None:
    if any(True for _ in term_variables(term)):
        return
    try:
        value = instantiate(term, {})
    except EvaluationError as exc:
        report(term.span or literal.span or rule.span, f"argument {term} of {literal}: {exc}")
        return
    if interp.is_sort(sort) and not interp.contains(sort, value):
        report(
            term.span or literal.span or rule.span,
            f"argument {term} of {literal} is not of sort {sort}",
        )


def _check_defined(term: Term, interp: SortInterpretation, literal: Literal, rule: Rule, report) -> None:
    if not isinstance(term, (SymConst, Func)) or not is_ground(term):
        return
    if not interp.is_defined_term(term):
        report(
            term.span or literal.span or rule.span,
            f"term {term} in {literal} is not defined by the sort definition",
        )


__all__ = ["DeclarationTable", "validate_declarations"]
