"""One-way matching of rule atoms against ground facts, and fact indexing."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator

from logic.arithmetic import Binding, instantiate
from syntax.nodes import Arith, Func, Literal, Pred, Term, Variable, term_variables
from utils.exceptions import EvaluationError

FactKey = tuple[str, int]

_anonymous = itertools.count()


def match(pattern: Term, ground: Term, binding: Binding) -> Binding | None:
    """Extend ``binding`` so that ``pattern`` equals ``ground``, or return None.

    Arithmetic subterms are never inverted: they match only once all their
    variables are bound, by evaluating them.
    """
    if isinstance(pattern, Variable):
        bound = binding.get(pattern.name)
        if bound is None:
            extended = dict(binding)
            extended[pattern.name] = ground
            return extended
        return binding if bound == ground else None

    if isinstance(pattern, Func):
        if not isinstance(ground, Func) or ground.functor != pattern.functor:
            return None
        if len(ground.args) != len(pattern.args):
            return None
        return match_args(pattern.args, ground.args, binding)

    if isinstance(pattern, Arith):
        if any(name not in binding for name in term_variables(pattern)):
            return None
        try:
            value = instantiate(pattern, binding)
        except EvaluationError:
            return None
        return binding if value == ground else None

    return binding if pattern == ground else None


def match_args(
    patterns: tuple[Term, ...], grounds: tuple[Term, ...], binding: Binding
) -> Binding | None:
    current: Binding | None = binding
    for pattern, ground in zip(patterns, grounds):
        current = match(pattern, ground, current)
        if current is None:
            return None
    return current


def plain_variables(term: Term) -> list[str]:
    """Variables of ``term`` that sit outside arithmetic, left to right."""
    if isinstance(term, Variable):
        return [term.name]
    if isinstance(term, Func):
        return [name for arg in term.args for name in plain_variables(arg)]
    return []


def mask_arith(term: Term) -> Term:
    """Replace arithmetic subterms by fresh anonymous variables that match anything."""

    def mask(t: Term) -> Term:
        if isinstance(t, Arith):
            return Variable(f"_{next(_anonymous)}")
        if isinstance(t, Func):
            return Func(t.functor, tuple(mask(a) for a in t.args))
        return t

    return mask(term)


def ground_atom(atom: Pred, binding: Binding) -> Pred:
    """Instantiate a predicate atom; may raise an :class:`EvaluationError`."""
    return Pred(atom.symbol, tuple(instantiate(a, binding) for a in atom.args))


def ground_literal(literal: Literal, binding: Binding) -> Literal:
    assert isinstance(literal.atom, Pred)
    return Literal(ground_atom(literal.atom, binding), literal.negated)


class FactIndex:
    """Ground literals grouped by (predicate, arity, sign), in insertion order."""

    def __init__(self, literals: Iterable[Literal] = ()) -> None:
        self._by_key: dict[tuple[str, int, bool], dict[tuple[Term, ...], None]] = {}
        self._size = 0
        for literal in literals:
            self.add(literal)

    def add(self, literal: Literal) -> bool:
        """Insert a ground literal; return True if it was new."""
        key = (literal.predicate, len(literal.args), literal.negated)
        bucket = self._by_key.setdefault(key, {})
        if literal.args in bucket:
            return False
        bucket[literal.args] = None
        self._size += 1
        return True

    def __contains__(self, literal: Literal) -> bool:
        key = (literal.predicate, len(literal.args), literal.negated)
        return literal.args in self._by_key.get(key, {})

    def __len__(self) -> int:
        return self._size

    def __iter__(self) -> Iterator[Literal]:
        for (symbol, _, negated), bucket in self._by_key.items():
            for args in bucket:
                yield Literal(Pred(symbol, args), negated)

    def args_of(self, symbol: str, arity: int, negated: bool = False) -> list[tuple[Term, ...]]:
        return list(self._by_key.get((symbol, arity, negated), {}))

    def keys(self) -> set[FactKey]:
        return {(symbol, arity) for symbol, arity, _ in self._by_key}

    def candidates(self, literal: Literal, binding: Binding) -> Iterator[Binding]:
        """Bindings extending ``binding`` under which ``literal`` is in the index."""
        for args in self.args_of(literal.predicate, len(literal.args), literal.negated):
            extended = match_args(literal.args, args, binding)
            if extended is not None:
                yield extended


def join(literals: list[Literal], index: FactIndex, binding: Binding) -> Iterator[Binding]:
    """All bindings satisfying every positive predicate literal against ``index``.

    Literals whose arithmetic arguments still have unbound variables are
    postponed until the other literals bind them.
    """
    if not literals:
        yield binding
        return
    for position, literal in enumerate(literals):
        if _ready(literal, binding):
            rest = literals[:position] + literals[position + 1 :]
            for extended in index.candidates(literal, binding):
                yield from join(rest, index, extended)
            return


def _ready(literal: Literal, binding: Binding) -> bool:
    for arg in literal.args:
        if _has_unbound_arith(arg, binding):
            return False
    return True


def _has_unbound_arith(term: Term, binding: Binding) -> bool:
    if isinstance(term, Arith):
        return any(name not in binding for name in term_variables(term))
    if isinstance(term, Func):
        return any(_has_unbound_arith(a, binding) for a in term.args)
    return False
