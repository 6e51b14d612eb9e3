"""Custom exception hierarchy for the SPARC toolchain.

Every error raised by the parser, checker, grounder, solvers, translator and
benchmark generator derives from ``SparcError`` so the command-line front end
can map whole families onto exit codes.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from syntax.diagnostics import Diagnostic


# Base Exception
class SparcError(Exception):
    """Base exception for all SPARC toolchain errors."""

    pass


# Configuration Errors
class ConfigurationError(SparcError):
    """Base class for configuration-related errors."""

    pass


class InvalidSettingsError(ConfigurationError, ValueError):
    """Raised when settings validation fails."""

    pass


# Positioned source errors
class DiagnosticError(SparcError):
    """Base class for errors that carry positioned diagnostics."""

    def __init__(self, diagnostics: list[Diagnostic]) -> None:
        self.diagnostics = list(diagnostics)
        summary = diagnostics[0].format() if diagnostics else "unknown error"
        if len(diagnostics) > 1:
            summary += f" (and {len(diagnostics) - 1} more)"
        super().__init__(summary)


class SparcSyntaxError(DiagnosticError):
    """Raised when lexing or parsing fails."""

    pass


class SortCheckError(DiagnosticError):
    """Raised when the sort definition or the declarations are invalid."""

    pass


# Evaluation Errors
class EvaluationError(SparcError):
    """Base class for errors while evaluating sorts or arithmetic."""

    pass


class SortRangeError(EvaluationError):
    """Raised when a derived sort argument evaluates to a negative integer."""

    pass


class UndefinedArithmeticError(EvaluationError):
    """Raised when an arithmetic term has no value (``mod`` by zero, symbolic operand)."""

    pass


# Resource Errors
class CapacityError(SparcError):
    """Base class for configured resource caps being exceeded."""

    pass


class SortNonTerminationError(EvaluationError, CapacityError):
    """Raised when sort evaluation derives more atoms than the cap allows."""

    def __init__(self, stratum: int, cap: int) -> None:
        self.stratum = stratum
        self.cap = cap
        super().__init__(
            f"sort definition derived more than {cap} atoms in stratum {stratum}; "
            "the definition probably builds unbounded function terms"
        )


class SearchCapacityError(CapacityError):
    """Raised when the answer-set search explores more candidates than allowed."""

    pass


# Grounding Errors
class GroundingError(SparcError):
    """Base class for grounding errors."""

    pass


class GroundingSafetyError(GroundingError):
    """Raised when a rule variable has no finite defined sort to range over."""

    def __init__(self, variable: str, rule_text: str) -> None:
        self.variable = variable
        self.rule_text = rule_text
        super().__init__(
            f"variable {variable} in rule '{rule_text}' occurs in no position of a "
            "defined sort"
        )


# External Solver Errors
class ExternalSolverError(SparcError):
    """Base class for errors running an external answer-set solver."""

    pass


class ExternalSolverLaunchError(ExternalSolverError):
    """Raised when the external solver process cannot be started."""

    pass


class ExternalSolverExitError(ExternalSolverError):
    """Raised when the external solver exits with a nonzero status."""

    def __init__(self, returncode: int, stderr: str) -> None:
        self.returncode = returncode
        self.stderr = stderr
        super().__init__(f"external solver exited with status {returncode}: {stderr.strip()}")


class ExternalSolverOutputError(ExternalSolverError):
    """Raised when the external solver output cannot be parsed."""

    pass


# Benchmark Errors
class BenchError(SparcError):
    """Base class for benchmark generation errors."""

    pass


class InvalidBenchParametersError(BenchError, ValueError):
    """Raised when vertex count or density cannot produce an instance."""

    pass


class DisconnectedGraphError(BenchError):
    """Raised when no generated graph has a connected vertex pair."""

    pass
