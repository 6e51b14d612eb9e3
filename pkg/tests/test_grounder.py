"""Tests for the sort-respecting grounder and the plain grounder."""

import itertools
from dataclasses import replace

import pytest

from grounder import GroundRule, candidate_sets, ground_dlv, ground_program, ground_rule
from logic.arithmetic import holds
from logic.unify import ground_literal
from sortcheck import check_source
from syntax import tokenize
from syntax.nodes import BodyItem, Func, Nat, RuleKind, SymConst, rule_variables, term_key
from syntax.parser import parse_rules
from utils.exceptions import EvaluationError, GroundingError, GroundingSafetyError


def printed(rules) -> str:
    return "".join(f"{rule}\n" for rule in rules)


def ground_source(sorts: str, declarations: str, rules: str):
    checked = check_source(
        f"sorts definition\n{sorts}\npredicates declaration\n{declarations}\nprogram rules\n{rules}\n"
    )
    return ground_program(checked.program, checked.interpretation, checked.declarations)


def flat(text: str):
    return parse_rules(tokenize(text))


class TestSortRespectingGrounding:
    def test_p1_matches_golden(self, grounded, golden):
        _, ground = grounded("p1")
        assert printed(ground.rules) == golden("p1.ground")

    def test_p2_matches_golden(self, grounded, golden):
        _, ground = grounded("p2")
        assert printed(ground.rules) == golden("p2.ground")

    def test_p2_sort_atoms_are_conditions(self, grounded):
        _, ground = grounded("p2")
        (rule,) = ground.regular

        assert {str(lit) for lit in rule.conditions} == {"s3(a)", "t(a,b)"}
        assert rule.pos_body == ()
        assert rule.is_fact

    def test_p1_candidates(self, checked):
        program = checked("p1")
        rule = program.program.rules[2]
        candidates = candidate_sets(rule, program.interpretation, program.declarations)

        assert candidates == {
            "X": {Nat(1), Nat(2)},
            "Y": {Func("f", (Nat(1), Nat(2))), Func("f", (Nat(2), Nat(1)))},
        }

    def test_p2_candidates_intersect_sort_atoms(self, checked):
        program = checked("p2")
        (rule,) = program.program.rules
        candidates = candidate_sets(rule, program.interpretation, program.declarations)

        assert candidates["X"] == {SymConst("a")}
        assert candidates["Y"] == {Nat(1), SymConst("b")}

    def test_instances_out_of_sort_are_dropped(self):
        ground = ground_source("s(1).\ns(2).", "p(s)\nq(s)", "p(1).\nq(X+1) :- p(X).")
        assert printed(ground.rules) == "p(1).\nq(2) :- p(1).\n"

    def test_negative_arithmetic_drops_instance(self):
        ground = ground_source("s(1).\ns(2).", "p(s)\nq(nat)", "q(X-2) :- p(X).")
        assert printed(ground.rules) == "q(0) :- p(2).\n"

    def test_relations_filter_instances(self):
        ground = ground_source("s(a).\ns(b).", "p(s,s)", "p(X,Y) :- X != Y.")
        assert printed(ground.rules) == "p(b,a).\np(a,b).\n"

    def test_negated_sort_atom_condition(self):
        ground = ground_source("s(a).\ns(b).\nt(a).", "p(s)", "p(X) :- not t(X).")
        (rule,) = ground.regular

        assert str(rule) == "p(b) :- not t(b)."
        assert rule.neg_body == ()

    def test_variable_ranging_over_nat_only_is_unsafe(self):
        with pytest.raises(GroundingSafetyError, match="X"):
            ground_source("s(a).", "p(nat)", "p(X).")

    def test_cr_rules_are_named(self, grounded):
        _, ground = grounded("e2_full")
        (cr,) = ground.cr

        assert cr.kind is RuleKind.CR
        assert str(cr.name) == "rn(1,a)"
        assert str(cr) == "-p(a) :+ c(a)."
        assert len(ground.regular) == 4

    def test_cr_rules_numbered_in_text_order(self):
        ground = ground_source("s(a).", "p(s)\nq(s)", "p(X) :+ .\nq(a).\nq(X) :+ p(X).")
        assert [str(rule.name) for rule in ground.cr] == ["rn(1,a)", "rn(2,a)"]

    def test_rules_follow_origin_order(self, grounded):
        _, ground = grounded("e2_full")
        assert [rule.origin for rule in ground.rules] == sorted(rule.origin for rule in ground.rules)

    def test_sort_facts_kept(self, grounded):
        _, ground = grounded("p1")
        assert [str(atom) for atom in ground.sort_facts][:2] == ["s1(1)", "s1(2)"]


MIXED_PROGRAM = (
    "sorts definition\n"
    "s1(1).\ns1(2).\ns2(a).\ns2(b).\ns3(f(a)).\nt(1,a).\n"
    "predicates declaration\n"
    "p(s1)\nq(s2)\nr(s1,s2)\nu(s3)\nw(s1)\n"
    "program rules\n"
    "r(X,Y) :- p(X), q(Y).\n"
    "w(Y) :- p(X), p(Y), Y = X + 1.\n"
    "w(X) :- p(X), X < 2.\n"
    "q(Y) :- t(X,Y), p(X).\n"
    "q(Y) :- q(Y), not s1(Y).\n"
    "u(f(Y)) :- q(Y).\n"
    ":- r(X,Y), not q(Y).\n"
    "p(X) :- s1(X), not w(X).\n"
    "-q(Y) :+ r(X,Y).\n"
)


def exhaustive_instances(rule, interp, decls) -> set[GroundRule]:
    """Instances over every substitution of ground terms, filtered afterwards."""
    names = rule_variables(rule)
    terms = sorted(interp.ground_terms, key=term_key)
    found: set[GroundRule] = set()
    for values in itertools.product(terms, repeat=len(names)):
        binding = dict(zip(names, values))
        try:
            if not all(holds(i.literal.atom, binding) for i in rule.body if i.literal.is_relation):
                continue
            head = tuple(ground_literal(lit, binding) for lit in rule.head)
            body = tuple(
                BodyItem(ground_literal(i.literal, binding), i.naf)
                for i in rule.body
                if not i.literal.is_relation
            )
        except EvaluationError:
            continue
        literals = head + tuple(item.literal for item in body)
        if not all(
            interp.contains(sort, arg)
            for lit in literals
            for sort, arg in zip(decls.lookup(lit) or (), lit.args)
        ):
            continue
        if any(decls.lookup(i.literal) is None and interp.holds(i.literal) == i.naf for i in body):
            continue
        found.add(GroundRule(rule.kind, head, body, rule.index))
    return found


class TestGroundingCompleteness:
    @pytest.mark.parametrize("name", ["p1", "p2", "e2_full", "weak_example"])
    def test_corpus_rules(self, checked, name):
        program = checked(name)
        interp, decls = program.interpretation, program.declarations
        assert len(interp.ground_terms) <= 6

        for rule in program.program.rules:
            instances = {replace(g, name=None) for g in ground_rule(rule, interp, decls, cr_index=1)}
            assert instances == exhaustive_instances(rule, interp, decls), str(rule)

    def test_relations_arithmetic_and_sort_conditions(self):
        program = check_source(MIXED_PROGRAM)
        interp, decls = program.interpretation, program.declarations
        assert len(interp.ground_terms) == 5

        for rule in program.program.rules:
            instances = {replace(g, name=None) for g in ground_rule(rule, interp, decls, cr_index=1)}
            expected = exhaustive_instances(rule, interp, decls)
            assert instances == expected, str(rule)
            assert expected, str(rule)


class TestPlainGrounding:
    def test_recursive_rules(self):
        regular, weak = ground_dlv(
            flat("e(1,2).\ne(2,3).\npath(X,Y) :- e(X,Y).\npath(X,Z) :- path(X,Y), e(Y,Z).\n")
        )

        assert weak == []
        assert "path(1,3) :- path(1,2), e(2,3)." in {str(rule) for rule in regular}

    def test_impossible_naf_literal_dropped(self):
        regular, _ = ground_dlv(flat("a :- not b.\n"))
        assert [str(rule) for rule in regular] == ["a."]

    def test_possible_naf_literal_kept(self):
        regular, _ = ground_dlv(flat("a :- not b.\nb :- not a.\n"))
        assert [str(rule) for rule in regular] == ["a :- not b.", "b :- not a."]

    def test_weak_constraints_separated(self):
        regular, weak = ground_dlv(flat("s(a).\ns(b).\n:~ s(X).\n"))

        assert [str(rule) for rule in regular] == ["s(a).", "s(b)."]
        assert [str(rule) for rule in weak] == [":~ s(a).", ":~ s(b)."]

    def test_relations_evaluated(self):
        regular, _ = ground_dlv(flat("n(1).\nn(2).\nm(X) :- n(X), X > 1.\n"))
        assert "m(2) :- n(2)." in {str(rule) for rule in regular}
        assert "m(1) :- n(1)." not in {str(rule) for rule in regular}

    def test_disjunctive_head(self):
        regular, _ = ground_dlv(flat("s(a).\np(X) v -p(X) :- s(X).\n"))
        assert "p(a) v -p(a) :- s(a)." in {str(rule) for rule in regular}

    def test_unsafe_rule(self):
        with pytest.raises(GroundingSafetyError, match="X"):
            ground_dlv(flat("p(X) :- not q(X).\n"))

    def test_cr_rule_rejected(self):
        with pytest.raises(GroundingError, match="must be translated"):
            ground_dlv(flat("s(a).\np(X) :+ s(X).\n"))
