"""Evaluation of terms and relation atoms under a variable binding.

Arithmetic runs over the integers, so intermediate values may be negative;
only a final value that lands in an atom argument or a comparison must be a
natural number.
"""

from __future__ import annotations

from syntax.nodes import Arith, ArithRel, Func, Nat, SymConst, SymRel, Term, Variable
from utils.exceptions import GroundingError, SortRangeError, UndefinedArithmeticError

Binding = dict[str, Term]

_COMPARE = {
    "=": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
}


def eval_int(term: Term, binding: Binding) -> int:
    """Integer value of an arithmetic term.

    Raises:
        UndefinedArithmeticError: ``mod`` by zero or a symbolic operand
        GroundingError: Unbound variable
    """
    if isinstance(term, Nat):
        return term.value
    if isinstance(term, Variable):
        value = _lookup(term, binding)
        if not isinstance(value, Nat):
            raise UndefinedArithmeticError(f"{term.name} = {value} is not a number")
        return value.value
    if isinstance(term, Arith):
        left = eval_int(term.lhs, binding)
        right = eval_int(term.rhs, binding)
        if term.op == "+":
            return left + right
        if term.op == "-":
            return left - right
        if term.op == "*":
            return left * right
        if right == 0:
            raise UndefinedArithmeticError(f"{term} divides by zero")
        return left % right
    raise UndefinedArithmeticError(f"symbolic term {term} has no integer value")


def instantiate(term: Term, binding: Binding) -> Term:
    """Apply ``binding`` and evaluate arithmetic, giving a ground term.

    Raises:
        SortRangeError: An arithmetic subterm evaluates to a negative integer
        UndefinedArithmeticError: See :func:`eval_int`
    """
    if isinstance(term, (Nat, SymConst)):
        return term
    if isinstance(term, Variable):
        return _lookup(term, binding)
    if isinstance(term, Func):
        return Func(term.functor, tuple(instantiate(a, binding) for a in term.args))
    value = eval_int(term, binding)
    if value < 0:
        raise SortRangeError(f"{term} evaluates to {value}, which is not a natural number")
    return Nat(value)


def holds(atom: ArithRel | SymRel, binding: Binding) -> bool:
    """Truth value of a ground-after-binding relation atom."""
    if isinstance(atom, ArithRel):
        left = eval_int(atom.lhs, binding)
        right = eval_int(atom.rhs, binding)
        if left < 0 or right < 0:
            raise SortRangeError(f"comparison {atom} uses a negative value")
        return _COMPARE[atom.rel](left, right)
    left_term = instantiate(atom.lhs, binding)
    right_term = instantiate(atom.rhs, binding)
    return _COMPARE[atom.rel](left_term, right_term)


def _lookup(variable: Variable, binding: Binding) -> Term:
    try:
        return binding[variable.name]
    except KeyError:
        raise GroundingError(f"variable {variable.name} is unbound") from None
