"""Tests for term evaluation and matching."""

import pytest

from logic.arithmetic import eval_int, holds, instantiate
from logic.unify import FactIndex, join, mask_arith, match, plain_variables
from syntax.nodes import Arith, ArithRel, Func, Literal, Nat, Pred, SymConst, SymRel, Variable
from utils.exceptions import GroundingError, SortRangeError, UndefinedArithmeticError

X, Y = Variable("X"), Variable("Y")
a, b = SymConst("a"), SymConst("b")


def lit(symbol, *args, negated=False):
    return Literal(Pred(symbol, tuple(args)), negated)


class TestArithmetic:
    def test_eval_with_binding(self):
        term = Arith("+", X, Arith("*", Nat(2), Y))
        assert eval_int(term, {"X": Nat(1), "Y": Nat(3)}) == 7

    def test_intermediate_negative_allowed(self):
        term = Arith("+", Arith("-", Nat(1), Nat(3)), Nat(5))
        assert instantiate(term, {}) == Nat(3)

    def test_negative_result_is_out_of_range(self):
        with pytest.raises(SortRangeError):
            instantiate(Arith("-", Nat(1), Nat(2)), {})

    def test_mod_by_zero(self):
        with pytest.raises(UndefinedArithmeticError, match="divides by zero"):
            eval_int(Arith("mod", Nat(4), Nat(0)), {})

    def test_mod(self):
        assert eval_int(Arith("mod", Nat(7), Nat(3)), {}) == 1

    def test_symbolic_value_in_arithmetic(self):
        with pytest.raises(UndefinedArithmeticError, match="not a number"):
            eval_int(Arith("+", X, Nat(1)), {"X": a})

    def test_unbound_variable(self):
        with pytest.raises(GroundingError, match="X is unbound"):
            instantiate(X, {})

    def test_instantiate_function_term(self):
        term = Func("f", (X, Arith("+", Y, Nat(1))))
        assert instantiate(term, {"X": a, "Y": Nat(1)}) == Func("f", (a, Nat(2)))


class TestRelations:
    @pytest.mark.parametrize(
        "rel,expected",
        [("<", True), ("<=", True), (">", False), (">=", False), ("=", False), ("!=", True)],
    )
    def test_arithmetic_comparison(self, rel, expected):
        atom = ArithRel(rel, X, Arith("+", X, Nat(1)))
        assert holds(atom, {"X": Nat(2)}) is expected

    def test_symbolic_equality(self):
        assert holds(SymRel("!=", X, Y), {"X": a, "Y": b})
        assert not holds(SymRel("=", X, Y), {"X": a, "Y": b})

    def test_negative_comparison_operand(self):
        with pytest.raises(SortRangeError):
            holds(ArithRel("<", Arith("-", X, Nat(5)), Nat(1)), {"X": Nat(2)})


class TestMatch:
    def test_binds_variable(self):
        assert match(X, a, {}) == {"X": a}

    def test_respects_existing_binding(self):
        assert match(X, a, {"X": a}) == {"X": a}
        assert match(X, b, {"X": a}) is None

    def test_function_terms(self):
        pattern = Func("f", (X, Y))
        assert match(pattern, Func("f", (Nat(1), Nat(2))), {}) == {"X": Nat(1), "Y": Nat(2)}
        assert match(pattern, Func("g", (Nat(1), Nat(2))), {}) is None
        assert match(pattern, Func("f", (Nat(1),)), {}) is None

    def test_repeated_variable(self):
        pattern = Func("f", (X, X))
        assert match(pattern, Func("f", (a, a)), {}) == {"X": a}
        assert match(pattern, Func("f", (a, b)), {}) is None

    def test_arithmetic_needs_bound_variables(self):
        pattern = Arith("+", X, Nat(1))
        assert match(pattern, Nat(3), {}) is None
        assert match(pattern, Nat(3), {"X": Nat(2)}) == {"X": Nat(2)}
        assert match(pattern, Nat(4), {"X": Nat(2)}) is None

    def test_arithmetic_out_of_range_does_not_match(self):
        assert match(Arith("-", X, Nat(3)), Nat(0), {"X": Nat(1)}) is None

    def test_plain_variables_skip_arithmetic(self):
        term = Func("f", (X, Arith("+", Y, Nat(1)), Func("g", (Y,))))
        assert plain_variables(term) == ["X", "Y"]

    def test_mask_arith(self):
        masked = mask_arith(Func("f", (a, Arith("+", X, Nat(1)))))
        assert isinstance(masked, Func)
        assert masked.args[0] == a
        assert isinstance(masked.args[1], Variable)
        assert masked.args[1].name.startswith("_")


class TestFactIndex:
    def test_add_and_contains(self):
        index = FactIndex([lit("p", a), lit("p", b), lit("p", a, negated=True)])

        assert len(index) == 3
        assert lit("p", a) in index
        assert lit("p", a, negated=True) in index
        assert lit("q", a) not in index
        assert not index.add(lit("p", b))

    def test_iteration_keeps_insertion_order(self):
        facts = [lit("p", b), lit("q", a), lit("p", a)]
        assert list(FactIndex(facts)) == [lit("p", b), lit("p", a), lit("q", a)]

    def test_keys_ignore_sign(self):
        index = FactIndex([lit("p", a, negated=True), lit("r", a, b)])
        assert index.keys() == {("p", 1), ("r", 2)}

    def test_join(self):
        index = FactIndex([lit("e", a, b), lit("e", b, a), lit("v", b)])
        body = [lit("e", X, Y), lit("v", Y)]

        assert list(join(body, index, {})) == [{"X": a, "Y": b}]

    def test_join_postpones_arithmetic(self):
        index = FactIndex([lit("n", Nat(1)), lit("n", Nat(2)), lit("n", Nat(3))])
        body = [lit("n", Arith("+", X, Nat(1))), lit("n", X)]

        results = list(join(body, index, {}))
        assert results == [{"X": Nat(1)}, {"X": Nat(2)}]

    def test_join_empty_body(self):
        assert list(join([], FactIndex(), {"X": a})) == [{"X": a}]
