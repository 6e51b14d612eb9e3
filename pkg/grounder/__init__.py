"""Grounders: sort-respecting for SPARC programs, plain for counterparts."""
from grounder.base import GroundProgram, GroundRule, make_rule
from grounder.plain import ground_dlv
from grounder.sorted import candidate_sets, ground_program, ground_rule

__all__ = [
    "GroundProgram",
    "GroundRule",
    "make_rule",
    "ground_dlv",
    "candidate_sets",
    "ground_program",
    "ground_rule",
]
