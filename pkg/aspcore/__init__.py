"""Answer-set engine for ground programs.

Module-level helpers run on a backend chosen by name: ``search`` (default)
or ``oracle`` (brute force, small programs only).
"""
from __future__ import annotations

from aspcore.base import AnswerSet, AnswerSetBackend, WeakConstraint, violations
from aspcore.oracle import BruteForceBackend
from aspcore.search import SearchBackend
from aspcore.semantics import is_answer_set, is_consistent_set, least_model, reduct
from grounder.base import GroundRule

BACKENDS = {
    SearchBackend.name: SearchBackend,
    BruteForceBackend.name: BruteForceBackend,
}


def get_backend(name: str = "search", cap: int | None = None) -> AnswerSetBackend:
    """Instantiate a backend by name, optionally overriding its cap."""
    try:
        backend_cls = BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown backend '{name}', expected one of {sorted(BACKENDS)}") from None
    return backend_cls(cap)


def answer_sets(
    rules: list[GroundRule], limit: int = 0, backend: AnswerSetBackend | None = None
) -> list[AnswerSet]:
    return (backend or SearchBackend()).answer_sets(rules, limit)


def answer_sets_weak(
    rules: list[GroundRule],
    weaks: list[WeakConstraint],
    limit: int = 0,
    backend: AnswerSetBackend | None = None,
) -> list[AnswerSet]:
    return (backend or SearchBackend()).answer_sets_weak(rules, weaks, limit)


def is_consistent(rules: list[GroundRule], backend: AnswerSetBackend | None = None) -> bool:
    return (backend or SearchBackend()).is_consistent(rules)


__all__ = [
    "AnswerSet",
    "AnswerSetBackend",
    "WeakConstraint",
    "BruteForceBackend",
    "SearchBackend",
    "get_backend",
    "answer_sets",
    "answer_sets_weak",
    "is_consistent",
    "is_answer_set",
    "is_consistent_set",
    "least_model",
    "reduct",
    "violations",
]
