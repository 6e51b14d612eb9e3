"""Tests for the ground answer-set engine."""

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from aspcore import (
    AnswerSet,
    BruteForceBackend,
    SearchBackend,
    WeakConstraint,
    get_backend,
    is_answer_set,
    is_consistent_set,
    least_model,
    reduct,
    violations,
)
from aspcore.semantics import is_head_cycle_free, shift
from config.settings import reset_settings
from grounder.base import make_rule
from syntax.nodes import RuleKind, pred_literal
from utils.exceptions import SearchCapacityError

a, b, c, d = (pred_literal(name) for name in "abcd")
neg_a = pred_literal("a", negated=True)


def names(answers) -> list[str]:
    return [str(answer) for answer in answers]


@pytest.fixture(params=["search", "oracle"])
def backend(request):
    return get_backend(request.param)


class TestSemantics:
    def test_least_model(self):
        rules = [make_rule([a]), make_rule([b], [a]), make_rule([d], [c])]
        assert least_model(rules) == {a, b}

    def test_least_model_ignores_constraints(self):
        assert least_model([make_rule([a]), make_rule([], [a])]) == {a}

    def test_reduct_drops_blocked_rules(self):
        rules = [make_rule([a], neg=[b]), make_rule([b], neg=[a])]
        reduced = reduct(rules, {a})

        assert [str(rule) for rule in reduced] == ["a."]

    def test_even_loop(self):
        rules = [make_rule([a], neg=[b]), make_rule([b], neg=[a])]

        assert is_answer_set(rules, {a})
        assert is_answer_set(rules, {b})
        assert not is_answer_set(rules, {a, b})
        assert not is_answer_set(rules, set())

    def test_inconsistent_set_rejected(self):
        rules = [make_rule([a]), make_rule([neg_a])]

        assert not is_consistent_set({a, neg_a})
        assert not is_answer_set(rules, {a, neg_a})

    def test_unsupported_literal_rejected(self):
        assert not is_answer_set([make_rule([a])], {a, b})

    def test_head_cycle_free_disjunction(self):
        rules = [make_rule([a, b])]

        assert is_head_cycle_free(rules)
        assert [str(rule) for rule in shift(rules)] == ["a :- not b.", "b :- not a."]
        assert is_answer_set(rules, {a})
        assert not is_answer_set(rules, {a, b})

    def test_disjunction_with_head_cycle(self):
        rules = [make_rule([a, b]), make_rule([a], [b]), make_rule([b], [a])]

        assert not is_head_cycle_free(rules)
        assert is_answer_set(rules, {a, b})
        assert not is_answer_set(rules, {a})

    def test_exhaustive_minimality_agrees(self):
        rules = [make_rule([a, b]), make_rule([a], [b]), make_rule([b], [a])]
        assert is_answer_set(rules, {a, b}, exhaustive=True)

    def test_weak_constraint_violation(self):
        weak = WeakConstraint.from_rule(make_rule([], [a], [b], kind=RuleKind.WEAK))

        assert weak.violated_by({a})
        assert not weak.violated_by({a, b})
        assert str(weak) == ":~ a, not b."
        assert violations([weak, weak], frozenset({a})) == 2


class TestAnswerSet:
    def test_str_sorts_literals(self):
        assert str(AnswerSet(frozenset({c, a, neg_a}))) == "{a, -a, c}"

    def test_empty(self):
        assert str(AnswerSet(frozenset())) == "{}"

    def test_sort_key_by_cardinality(self):
        small, large = AnswerSet(frozenset({d})), AnswerSet(frozenset({a, b}))
        assert sorted([large, small], key=AnswerSet.sort_key) == [small, large]


class TestBackends:
    def test_even_loop(self, backend):
        rules = [make_rule([a], neg=[b]), make_rule([b], neg=[a])]
        assert names(backend.answer_sets(rules)) == ["{a}", "{b}"]

    def test_constraint_eliminates(self, backend):
        rules = [make_rule([a], neg=[b]), make_rule([b], neg=[a]), make_rule([], [a])]
        assert names(backend.answer_sets(rules)) == ["{b}"]

    def test_inconsistent_program(self, backend):
        rules = [make_rule([a]), make_rule([neg_a])]

        assert backend.answer_sets(rules) == []
        assert not backend.is_consistent(rules)

    def test_odd_loop_has_no_answer_set(self, backend):
        assert backend.answer_sets([make_rule([a], neg=[a])]) == []

    def test_ordering_by_cardinality(self, backend):
        rules = [make_rule([b, a]), make_rule([c], [b])]
        assert names(backend.answer_sets(rules)) == ["{a}", "{b, c}"]

    def test_limit(self, backend):
        rules = [make_rule([a], neg=[b]), make_rule([b], neg=[a])]
        assert len(backend.answer_sets(rules, limit=1)) == 1

    def test_limit_keeps_smallest_answer_sets(self, backend):
        # branching a=false first reaches {b, c} before {a}
        rules = [make_rule([a], neg=[b]), make_rule([b], neg=[a]), make_rule([c], [b])]

        assert names(backend.answer_sets(rules, limit=1)) == ["{a}"]
        assert backend.is_consistent(rules)

    def test_weak_constraints_pick_optimal(self, backend):
        rules = [make_rule([a], neg=[b]), make_rule([b], neg=[a])]
        weaks = [WeakConstraint((a,))]

        assert names(backend.answer_sets_weak(rules, weaks)) == ["{b}"]

    def test_weak_constraints_count_violations(self, backend):
        rules = [make_rule([a, b]), make_rule([c, d])]
        weaks = [WeakConstraint((a,)), WeakConstraint((c,)), WeakConstraint((d,))]

        assert names(backend.answer_sets_weak(rules, weaks)) == ["{b, c}", "{b, d}"]

    def test_cr_rules_rejected(self, backend):
        with pytest.raises(ValueError, match="regular rule first"):
            backend.answer_sets([make_rule([a], kind=RuleKind.CR)])


class TestBackendSelection:
    def test_get_backend(self):
        assert isinstance(get_backend(), SearchBackend)
        assert isinstance(get_backend("oracle"), BruteForceBackend)

    def test_unknown_backend(self):
        with pytest.raises(ValueError, match="unknown backend 'clasp'"):
            get_backend("clasp")

    def test_search_capacity(self):
        rules = [make_rule([a], neg=[b]), make_rule([b], neg=[a])]
        with pytest.raises(SearchCapacityError, match="more than 1 candidates"):
            get_backend("search", cap=1).answer_sets(rules)

    def test_search_cap_from_settings(self, monkeypatch):
        monkeypatch.setenv("SPARC_CANDIDATE_CAP", "1")
        reset_settings()

        backend = SearchBackend()
        assert backend.cap == 1
        with pytest.raises(SearchCapacityError):
            backend.answer_sets([make_rule([a], neg=[b]), make_rule([b], neg=[a])])

    def test_oracle_literal_limit(self):
        with pytest.raises(SearchCapacityError, match="at most 1 head literals"):
            BruteForceBackend(literal_limit=1).answer_sets([make_rule([a, b])])


POOL = [a, neg_a, b, c, d]

literal_subsets = st.lists(st.sampled_from(POOL), max_size=2, unique=True)
rules_strategy = st.lists(
    st.tuples(literal_subsets, literal_subsets, literal_subsets).map(
        lambda parts: make_rule(parts[0], parts[1], parts[2])
    ),
    max_size=6,
)


@pytest.mark.property
class TestSearchMatchesOracle:
    @settings(max_examples=200, deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow])
    @given(rules=rules_strategy)
    def test_same_answer_sets(self, rules):
        assert names(SearchBackend().answer_sets(rules)) == names(BruteForceBackend().answer_sets(rules))

    @settings(max_examples=100, deadline=None, derandomize=True)
    @given(rules=rules_strategy, weak_literals=st.lists(st.sampled_from(POOL), max_size=3))
    def test_same_optimal_answer_sets(self, rules, weak_literals):
        weaks = [WeakConstraint((lit,)) for lit in weak_literals]
        expected = BruteForceBackend().answer_sets_weak(rules, weaks)
        assert names(SearchBackend().answer_sets_weak(rules, weaks)) == names(expected)
