"""SPARC syntax: tokens, AST, parser and printer."""
from syntax.diagnostics import Diagnostic
from syntax.lexer import Token, TokenKind, tokenize
from syntax.parser import parse_arith, parse_literals, parse_program, parse_rules, parse_text
from syntax.printer import format_program, format_rules

__all__ = [
    "Diagnostic",
    "Token",
    "TokenKind",
    "tokenize",
    "parse_arith",
    "parse_literals",
    "parse_program",
    "parse_rules",
    "parse_text",
    "format_program",
    "format_rules",
]
