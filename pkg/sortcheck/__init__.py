"""Sort definition evaluation and declaration checking."""
from sortcheck.checker import CheckedProgram, check_program, check_source, load_program
from sortcheck.declarations import DeclarationTable, validate_declarations
from sortcheck.language import Language, extract_language
from sortcheck.sorts import NAT, SortInterpretation, evaluate_sorts, validate_sort_rules

__all__ = [
    "CheckedProgram",
    "check_program",
    "check_source",
    "load_program",
    "DeclarationTable",
    "validate_declarations",
    "Language",
    "extract_language",
    "NAT",
    "SortInterpretation",
    "evaluate_sorts",
    "validate_sort_rules",
]
