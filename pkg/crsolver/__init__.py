"""CR-Prolog semantics: abductive supports and SPARC answer sets."""
from crsolver.solver import present, sparc_answer_sets, witness_holds, with_sort_facts
from crsolver.support import AbductiveSupport, active_cr_rules, alpha, alpha_all, find_supports

__all__ = [
    "present",
    "sparc_answer_sets",
    "witness_holds",
    "with_sort_facts",
    "AbductiveSupport",
    "active_cr_rules",
    "alpha",
    "alpha_all",
    "find_supports",
]
