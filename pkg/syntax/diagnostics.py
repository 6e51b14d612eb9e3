"""Positioned diagnostics reported by the parser and the checkers."""

from dataclasses import dataclass
from typing import Literal

Severity = Literal["error", "warning"]


@dataclass(frozen=True)
class Diagnostic:
    """One positioned message about a source file."""

    line: int
    column: int
    message: str
    severity: Severity = "error"
    path: str = "<input>"

    def format(self) -> str:
        """Render as ``file:line:col: severity: message``."""
        return f"{self.path}:{self.line}:{self.column}: {self.severity}: {self.message}"

    def with_path(self, path: str) -> "Diagnostic":
        return Diagnostic(self.line, self.column, self.message, self.severity, path)
