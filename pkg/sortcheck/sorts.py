"""Validation and evaluation of the sort definition.

The sort definition must be safe and stratified; its unique answer set is
computed bottom-up one stratum at a time. Unary predicates of the answer set
name the defined sorts, ``nat`` is predefined and only ever tested for
membership.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from loguru import logger

from config.settings import settings
from logic.arithmetic import holds
from logic.unify import FactIndex, ground_literal, join
from sortcheck.strata import PredKey, pred_key, stratify
from syntax.diagnostics import Diagnostic
from syntax.nodes import (
    Arith,
    Func,
    Literal,
    Nat,
    Rule,
    SymConst,
    Term,
    Variable,
    atom_terms,
    literal_key,
    literal_variables,
    term_key,
    term_variables,
)
from utils.exceptions import (
    SortCheckError,
    SortNonTerminationError,
    SortRangeError,
    UndefinedArithmeticError,
)

NAT = "nat"


@dataclass(frozen=True)
class SortInterpretation:
    """The unique answer set S of the sort definition, viewed as sorts.

    Attributes:
        defined: Extension of every unary predicate of the sort definition
        sort_atoms: All atoms of S, sorted
        ground_terms: Terms defined by the sort definition (members of some sort)
        relations: Extensions of the non-unary predicates of the sort definition
    """

    defined: dict[str, frozenset[Term]] = field(default_factory=dict)
    sort_atoms: tuple[Literal, ...] = ()
    ground_terms: frozenset[Term] = frozenset()
    relations: dict[PredKey, frozenset[tuple[Term, ...]]] = field(default_factory=dict)

    @property
    def predicates(self) -> set[PredKey]:
        return {(name, 1) for name in self.defined} | set(self.relations)

    def is_sort(self, name: str) -> bool:
        return name == NAT or name in self.defined

    def contains(self, sort: str, term: Term) -> bool:
        """Membership test; ``nat`` accepts any natural number."""
        if sort == NAT:
            return isinstance(term, Nat)
        return term in self.defined.get(sort, frozenset())

    def members(self, sort: str) -> list[Term]:
        """Sorted extension of a defined sort (``nat`` has none to list)."""
        if sort == NAT:
            raise ValueError("nat is intensional and cannot be enumerated")
        return sorted(self.defined.get(sort, frozenset()), key=term_key)

    def sorts_of(self, term: Term) -> list[str]:
        names = [name for name in sorted(self.defined) if term in self.defined[name]]
        if isinstance(term, Nat):
            names.append(NAT)
        return names

    def holds(self, literal: Literal) -> bool:
        """Whether a ground literal over a sort-definition predicate is in S."""
        if literal.negated:
            return False
        args = literal.args
        if len(args) == 1 and literal.predicate in self.defined:
            return args[0] in self.defined[literal.predicate]
        return args in self.relations.get((literal.predicate, len(args)), frozenset())

    def is_defined_term(self, term: Term) -> bool:
        return isinstance(term, Nat) or term in self.ground_terms

    def table(self) -> list[str]:
        """``sort <name> = {t1,...,tk}`` lines, sorted by sort name."""
        return [
            f"sort {name} = {{{','.join(str(t) for t in self.members(name))}}}"
            for name in sorted(self.defined)
        ]


# ── validation ───────────────────────────────────────────────────────────────


def validate_sort_rules(rules: tuple[Rule, ...] | list[Rule], path: str = "<input>") -> list[Diagnostic]:
    """Check a sort definition against the conditions on sort programs.

    Returns:
        One diagnostic per violated condition (empty when the rules are fine)
    """
    errors: list[Diagnostic] = []

    def report(rule: Rule, message: str) -> None:
        line, column = (rule.span.line, rule.span.column) if rule.span else (0, 0)
        errors.append(Diagnostic(line, column, message, path=path))

    for rule in rules:
        if len(rule.head) != 1 or rule.head[0].negated:
            report(rule, f"sort definition rule '{rule}' must have one atom as head")
            continue
        if rule.head[0].is_relation:
            report(rule, f"head of '{rule}' is a relation atom")
            continue

        bindable = _bindable_variables(rule)
        for item in rule.body:
            if item.naf:
                for name in dict.fromkeys(literal_variables(item.literal)):
                    if name not in bindable:
                        report(
                            rule,
                            f"unsafe rule '{rule}': variable {name} occurs in the negative "
                            "part but in no positive atom",
                        )
            elif item.literal.is_relation:
                for name in dict.fromkeys(literal_variables(item.literal)):
                    if name not in bindable:
                        report(rule, f"variable {name} of relation '{item.literal}' is never bound")
        for name in dict.fromkeys(literal_variables(rule.head[0])):
            if name not in bindable:
                report(rule, f"head variable {name} of '{rule}' occurs in no positive body atom")

    if errors:
        return errors

    stratification = stratify(rules)
    if not stratification.is_stratified:
        names = ", ".join(f"{p}/{n}" for p, n in stratification.cycle)
        culprit = next(
            (r for r in rules if pred_key(r.head[0]) in set(stratification.cycle)), rules[0]
        )
        report(culprit, f"sort definition is not stratified: negation through {names}")

    if rules and not _constants(rules) and any(_has_variables(r) for r in rules):
        report(rules[0], "sort definition has an empty Herbrand universe (no ground term)")

    return errors


def _bindable_variables(rule: Rule) -> set[str]:
    """Variables bound by positive predicate atoms outside arithmetic."""
    names: set[str] = set()
    for item in rule.body:
        if item.naf or item.literal.is_relation:
            continue
        for arg in item.literal.args:
            names.update(_plain_variables(arg))
    return names


def _plain_variables(term: Term) -> Iterable[str]:
    if isinstance(term, Variable):
        yield term.name
    elif isinstance(term, Func):
        for arg in term.args:
            yield from _plain_variables(arg)


def _constants(rules: Iterable[Rule]) -> bool:
    for rule in rules:
        for literal in list(rule.head) + [item.literal for item in rule.body]:
            for term in atom_terms(literal.atom):
                if _mentions_constant(term):
                    return True
    return False


def _mentions_constant(term: Term) -> bool:
    if isinstance(term, (Nat, SymConst)):
        return True
    if isinstance(term, Func):
        return True
    if isinstance(term, Arith):
        return _mentions_constant(term.lhs) or _mentions_constant(term.rhs)
    return False


def _has_variables(rule: Rule) -> bool:
    return any(
        True
        for literal in list(rule.head) + [item.literal for item in rule.body]
        for term in atom_terms(literal.atom)
        for _ in term_variables(term)
    )


# ── evaluation ───────────────────────────────────────────────────────────────


def evaluate_sorts(
    rules: tuple[Rule, ...] | list[Rule],
    atom_cap: int | None = None,
    path: str = "<input>",
) -> SortInterpretation:
    """Compute the unique answer set of a validated sort definition.

    Args:
        rules: Sort definition rules (validated)
        atom_cap: Derived-atom limit; defaults to ``settings.ATOM_CAP``
        path: File name used in messages

    Raises:
        SortCheckError: The rules are not stratified
        SortNonTerminationError: More than ``atom_cap`` atoms were derived
        SortRangeError: A head argument evaluated to a negative integer
    """
    cap = atom_cap if atom_cap is not None else settings.ATOM_CAP
    stratification = stratify(rules)
    if not stratification.is_stratified:
        raise SortCheckError(validate_sort_rules(rules, path))

    index = FactIndex()
    for number, group in enumerate(stratification.strata, start=1):
        rounds = 0
        while True:
            rounds += 1
            added = 0
            for rule in group:
                for head in _fire(rule, index, path):
                    if index.add(head):
                        added += 1
                        if len(index) > cap:
                            raise SortNonTerminationError(number, cap)
            if not added:
                break
        logger.debug(f"Sort stratum {number}: {len(group)} rules, {rounds} rounds, {len(index)} atoms")

    return build_interpretation(rules, index)


def _fire(rule: Rule, index: FactIndex, path: str) -> list[Literal]:
    positives = [lit for lit in rule.pos_body if not lit.is_relation]
    relations = [lit for lit in rule.pos_body if lit.is_relation]
    heads: list[Literal] = []
    for binding in join(positives, index, {}):
        try:
            if not all(holds(lit.atom, binding) for lit in relations):  # type: ignore[arg-type]
                continue
        except (UndefinedArithmeticError, SortRangeError):
            continue
        if any(_naf_holds(lit, index, binding) for lit in rule.neg_body):
            continue
        try:
            heads.append(ground_literal(rule.head[0], binding))
        except UndefinedArithmeticError:
            continue
        except SortRangeError as exc:
            where = f"{path}:{rule.span.line}" if rule.span else path
            raise SortRangeError(f"{where}: rule '{rule}': {exc}") from exc
    return heads


def _naf_holds(literal: Literal, index: FactIndex, binding: dict[str, Term]) -> bool:
    try:
        return ground_literal(literal, binding) in index
    except (UndefinedArithmeticError, SortRangeError):
        return False


def build_interpretation(rules: Iterable[Rule], index: FactIndex) -> SortInterpretation:
    keys: set[PredKey] = set()
    for rule in rules:
        for literal in list(rule.head) + [item.literal for item in rule.body]:
            if not literal.is_relation:
                keys.add(pred_key(literal))

    defined: dict[str, set[Term]] = {name: set() for name, arity in keys if arity == 1}
    relations: dict[PredKey, set[tuple[Term, ...]]] = {k: set() for k in keys if k[1] != 1}
    for literal in index:
        if len(literal.args) == 1:
            defined[literal.predicate].add(literal.args[0])
        else:
            relations[pred_key(literal)].add(literal.args)

    ground_terms = frozenset(t for members in defined.values() for t in members)
    return SortInterpretation(
        defined={name: frozenset(members) for name, members in defined.items()},
        sort_atoms=tuple(sorted(index, key=literal_key)),
        ground_terms=ground_terms,
        relations={key: frozenset(rows) for key, rows in relations.items()},
    )


def undefined_terms(interp: SortInterpretation) -> list[tuple[Literal, Term]]:
    """Arguments of S atoms that no sort defines (natural numbers are always fine)."""
    missing = []
    for atom in interp.sort_atoms:
        for arg in atom.args:
            if not interp.is_defined_term(arg):
                missing.append((atom, arg))
    return missing
