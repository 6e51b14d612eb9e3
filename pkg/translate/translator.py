"""Compilation of a SPARC program into a weak-constraint counterpart.

The sort definition is copied verbatim. Every program rule gets the sort
atoms of its declared predicate arguments appended to its body. Regular
rules are emitted as they are; the ``i``-th cr-rule ``q :+ body.`` becomes

    appl(rn(i,X1,...,Xn)) v -appl(rn(i,X1,...,Xn)) :- body.
    :~ appl(rn(i,X1,...,Xn)), body.
    q :- appl(rn(i,X1,...,Xn)), body.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from loguru import logger

from sortcheck.checker import CheckedProgram
from sortcheck.declarations import DeclarationTable
from sortcheck.sorts import NAT
from syntax.nodes import (
    Arith,
    BodyItem,
    Func,
    Literal,
    Pred,
    Program,
    Rule,
    RuleKind,
    SymConst,
    Term,
    atom_terms,
)
from syntax.printer import format_rules
from translate.naming import DEFAULT_NAME_SYMBOL, name_cr_rule

DEFAULT_APPL_SYMBOL = "appl"


@dataclass(frozen=True)
class CounterpartProgram:
    """The emitted rule list and the fresh symbols it uses."""

    rules: tuple[Rule, ...]
    appl: str = DEFAULT_APPL_SYMBOL
    name_symbol: str = DEFAULT_NAME_SYMBOL

    @property
    def text(self) -> str:
        return emit_dlv_text(self)

    @property
    def weak_constraints(self) -> list[Rule]:
        return [rule for rule in self.rules if rule.kind is RuleKind.WEAK]


def program_symbols(program: Program) -> set[str]:
    """Every predicate, function and constant symbol (and sort name) of a program."""
    names: set[str] = set()
    for rule in program.sort_rules + program.rules:
        for literal in list(rule.head) + [item.literal for item in rule.body]:
            if isinstance(literal.atom, Pred):
                names.add(literal.atom.symbol)
            for term in atom_terms(literal.atom):
                names.update(_term_symbols(term))
    for decl in program.declarations:
        names.add(decl.predicate)
        names.update(decl.sorts)
    return names


def _term_symbols(term: Term) -> Iterator[str]:
    if isinstance(term, SymConst):
        yield term.name
    elif isinstance(term, Func):
        yield term.functor
        for arg in term.args:
            yield from _term_symbols(arg)
    elif isinstance(term, Arith):
        yield from _term_symbols(term.lhs)
        yield from _term_symbols(term.rhs)


def fresh_symbol(base: str, taken: set[str]) -> str:
    """``base``, or ``base1``, ``base2``, ... whichever is first unused."""
    if base not in taken:
        return base
    suffix = 1
    while f"{base}{suffix}" in taken:
        suffix += 1
    return f"{base}{suffix}"


def sort_atoms(rule: Rule, decls: DeclarationTable) -> list[Literal]:
    """``s_j(t_j)`` for every declared atom occurrence, head first, without repeats.

    Arguments of sort ``nat`` contribute nothing.
    """
    atoms: dict[Literal, None] = {}
    for literal in list(rule.head) + [item.literal for item in rule.body]:
        sorts = decls.lookup(literal)
        if sorts is None:
            continue
        for sort, arg in zip(sorts, literal.args):
            if sort != NAT:
                atoms.setdefault(Literal(Pred(sort, (arg,))), None)
    return list(atoms)


def translate(checked: CheckedProgram) -> CounterpartProgram:
    """Build the counterpart of a checked program.

    Args:
        checked: Program that passed the sort check

    Returns:
        CounterpartProgram whose answer sets, without ``appl`` literals,
        are the answer sets of the program plus the sort atoms
    """
    program = checked.program
    table = checked.declarations
    taken = program_symbols(program)
    appl = fresh_symbol(DEFAULT_APPL_SYMBOL, taken)
    name_symbol = fresh_symbol(DEFAULT_NAME_SYMBOL, taken | {appl})
    if appl != DEFAULT_APPL_SYMBOL or name_symbol != DEFAULT_NAME_SYMBOL:
        logger.info(f"Counterpart uses fresh symbols {appl}/{name_symbol}")

    emitted: list[Rule] = list(program.sort_rules)
    cr_index = 0
    for rule in program.rules:
        body = rule.body + tuple(BodyItem(atom) for atom in sort_atoms(rule, table))
        if rule.kind is not RuleKind.CR:
            emitted.append(Rule(rule.kind, rule.head, body))
            continue

        cr_index += 1
        name = name_cr_rule(rule, cr_index, name_symbol).term()
        applied = Literal(Pred(appl, (name,)))
        emitted.append(Rule(RuleKind.REGULAR, (applied, applied.complement()), body))
        emitted.append(Rule(RuleKind.WEAK, (), (BodyItem(applied),) + body))
        emitted.append(Rule(RuleKind.REGULAR, rule.head, (BodyItem(applied),) + body))

    numbered = tuple(
        Rule(rule.kind, rule.head, rule.body, index, rule.span) for index, rule in enumerate(emitted, 1)
    )
    logger.debug(f"Translated {len(program.rules)} rules ({cr_index} cr-rules) into {len(numbered)} rules")
    return CounterpartProgram(numbered, appl, name_symbol)


def emit_dlv_text(counterpart: CounterpartProgram) -> str:
    """Render the counterpart in DLV syntax, one rule per line."""
    return format_rules(counterpart.rules)
