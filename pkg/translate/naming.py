"""Names of cr-rules: ``rn(i, X1, ..., Xn)``."""

from __future__ import annotations

from dataclasses import dataclass

from syntax.nodes import Func, Nat, Rule, RuleKind, Term, Variable, rule_variables

DEFAULT_NAME_SYMBOL = "rn"


@dataclass(frozen=True)
class RuleName:
    """Index of a cr-rule among the cr-rules, and its variables in first-occurrence order."""

    index: int
    variables: tuple[str, ...] = ()
    symbol: str = DEFAULT_NAME_SYMBOL

    def term(self) -> Func:
        """The non-ground name term ``rn(i, X1, ..., Xn)``."""
        return Func(self.symbol, (Nat(self.index), *(Variable(v) for v in self.variables)))

    def ground(self, values: tuple[Term, ...] | list[Term]) -> Func:
        """The name of the ground instance assigning ``values`` to the variables."""
        if len(values) != len(self.variables):
            raise ValueError(f"rule name {self} needs {len(self.variables)} values")
        return Func(self.symbol, (Nat(self.index), *values))

    def __str__(self) -> str:
        return str(self.term())


def name_cr_rule(rule: Rule, index: int, symbol: str = DEFAULT_NAME_SYMBOL) -> RuleName:
    """Name the ``index``-th cr-rule after its distinct variables, head first."""
    if rule.kind is not RuleKind.CR:
        raise ValueError(f"only cr-rules are named, got '{rule}'")
    return RuleName(index, tuple(rule_variables(rule)), symbol)
