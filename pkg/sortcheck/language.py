"""The language a program is written in, as extracted from the program itself."""

from __future__ import annotations

from dataclasses import dataclass

from sortcheck.sorts import SortInterpretation
from sortcheck.strata import PredKey
from syntax.nodes import Literal, Nat, Program, Term, atom_terms, term_key


@dataclass(frozen=True)
class Language:
    """Ground terms and predicate symbols of a program.

    Natural numbers always belong to the language through the sort ``nat``;
    ``terms`` lists the ones the program defines or mentions.
    """

    terms: tuple[Term, ...]
    predicates: tuple[PredKey, ...]

    def has_predicate(self, symbol: str, arity: int) -> bool:
        return (symbol, arity) in self.predicates

    def contains_literal(self, literal: Literal) -> bool:
        """Whether ``literal`` is built from a predicate of this language."""
        if literal.is_relation:
            return False
        return self.has_predicate(literal.predicate, len(literal.args))

    def predicate_names(self) -> list[str]:
        return sorted({name for name, _ in self.predicates})


def extract_language(program: Program, interp: SortInterpretation) -> Language:
    """Terms defined by the sort definition plus numbers used, and all predicates.

    Predicates are those of the sort definition and those declared.
    """
    terms: set[Term] = set(interp.ground_terms)
    for rule in program.rules:
        for literal in list(rule.head) + [item.literal for item in rule.body]:
            for term in atom_terms(literal.atom):
                if isinstance(term, Nat):
                    terms.add(term)

    predicates = set(interp.predicates)
    predicates.update((decl.predicate, decl.arity) for decl in program.declarations)
    return Language(
        terms=tuple(sorted(terms, key=term_key)),
        predicates=tuple(sorted(predicates)),
    )
