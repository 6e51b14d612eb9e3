"""Full static check of a parsed program."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from pathlib import Path

from loguru import logger

from sortcheck.declarations import DeclarationTable, validate_declarations
from sortcheck.language import Language, extract_language
from sortcheck.sorts import SortInterpretation, evaluate_sorts, undefined_terms, validate_sort_rules
from syntax.diagnostics import Diagnostic
from syntax.lexer import tokenize
from syntax.nodes import Program
from syntax.parser import parse_program
from utils.exceptions import SortCheckError


@dataclass(frozen=True)
class CheckedProgram:
    """A program that passed every check, with everything derived from it."""

    program: Program
    interpretation: SortInterpretation
    declarations: DeclarationTable
    language: Language
    path: str = "<input>"
    warnings: tuple[Diagnostic, ...] = field(default=())


def check_program(program: Program, path: str = "<input>", atom_cap: int | None = None) -> CheckedProgram:
    """Validate the sort definition and the declarations, then evaluate the sorts.

    Args:
        program: Parsed program
        path: File name used in diagnostics
        atom_cap: Override for the sort-evaluation atom cap

    Returns:
        CheckedProgram

    Raises:
        SortCheckError: With every violated condition
        SortNonTerminationError: Sort evaluation exceeded the atom cap
        SortRangeError: A sort head evaluated to a negative number
    """
    started = time.perf_counter()

    errors = validate_sort_rules(program.sort_rules, path)
    if errors:
        raise SortCheckError(errors)

    interp = evaluate_sorts(program.sort_rules, atom_cap=atom_cap, path=path)

    for atom, term in undefined_terms(interp):
        span = program.sorts_span
        errors.append(
            Diagnostic(
                span.line if span else 0,
                span.column if span else 0,
                f"term {term} in {atom} is not defined by the sort definition",
                path=path,
            )
        )

    diagnostics = validate_declarations(program.declarations, interp, program.rules, path)
    errors.extend(d for d in diagnostics if d.severity == "error")
    warnings = tuple(d for d in diagnostics if d.severity == "warning")
    if errors:
        raise SortCheckError(errors)

    checked = CheckedProgram(
        program=program,
        interpretation=interp,
        declarations=DeclarationTable.from_declarations(program.declarations),
        language=extract_language(program, interp),
        path=path,
        warnings=warnings,
    )
    logger.debug(
        f"Checked {path}: {len(interp.defined)} sorts, {len(interp.sort_atoms)} sort atoms, "
        f"{len(checked.declarations)} declarations in {time.perf_counter() - started:.3f}s"
    )
    return checked


def check_source(source: str, path: str = "<input>", atom_cap: int | None = None) -> CheckedProgram:
    """Tokenize, parse and check program text."""
    return check_program(parse_program(tokenize(source, path), path), path, atom_cap)


def load_program(path: str | Path, atom_cap: int | None = None) -> CheckedProgram:
    """Read and check a ``.sp`` file."""
    file_path = Path(path)
    return check_source(file_path.read_text(encoding="utf-8"), str(file_path), atom_cap)
