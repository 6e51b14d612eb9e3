"""Tokenizer for SPARC source text.

Lexical classes follow the SPARC grammar: identifiers start with a small
letter, variables with a capital letter, and both continue with letters and
digits only (no underscore). Natural numbers carry no leading
zeros. ``:-``/``←`` are rule arrows, ``:+`` is the consistency-restoring
arrow, ``:~`` opens a weak constraint (counterpart programs only). ``%``
starts a comment that runs to the end of the line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from loguru import logger

from syntax.diagnostics import Diagnostic
from utils.exceptions import SparcSyntaxError


class TokenKind(str, Enum):
    IDENT = "ident"
    VARIABLE = "var"
    NUMBER = "number"
    LPAREN = "("
    RPAREN = ")"
    LBRACE = "{"
    RBRACE = "}"
    COMMA = ","
    DOT = "."
    RULE_ARROW = "rule-arrow"
    CR_ARROW = "cr-arrow"
    WEAK_ARROW = "weak-arrow"
    OR = "or"
    NOT = "not"
    MINUS = "-"
    PLUS = "+"
    STAR = "*"
    MOD = "mod"
    EQ = "="
    NEQ = "!="
    LT = "<"
    LE = "<="
    GT = ">"
    GE = ">="
    EOF = "eof"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    lexeme: str
    line: int
    column: int

    @property
    def end_column(self) -> int:
        return self.column + max(len(self.lexeme), 1) - 1

    def __str__(self) -> str:
        return f"{self.kind.value} '{self.lexeme}' at {self.line}:{self.column}"


# Longest operators first so that ":-" wins over ":" and "<=" over "<".
_OPERATORS: list[tuple[str, TokenKind]] = [
    ("←+", TokenKind.CR_ARROW),
    (":-", TokenKind.RULE_ARROW),
    (":+", TokenKind.CR_ARROW),
    (":~", TokenKind.WEAK_ARROW),
    ("!=", TokenKind.NEQ),
    ("<=", TokenKind.LE),
    (">=", TokenKind.GE),
    ("←", TokenKind.RULE_ARROW),
    ("¬", TokenKind.MINUS),
    ("∨", TokenKind.OR),
    ("|", TokenKind.OR),
    ("(", TokenKind.LPAREN),
    (")", TokenKind.RPAREN),
    ("{", TokenKind.LBRACE),
    ("}", TokenKind.RBRACE),
    (",", TokenKind.COMMA),
    (".", TokenKind.DOT),
    ("-", TokenKind.MINUS),
    ("+", TokenKind.PLUS),
    ("*", TokenKind.STAR),
    ("=", TokenKind.EQ),
    ("<", TokenKind.LT),
    (">", TokenKind.GT),
]

_WORD = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NUMBER = re.compile(r"[0-9]+")

# Tokens after which a bare ``v`` reads as disjunction rather than a symbol.
_ENDS_TERM = {TokenKind.RPAREN, TokenKind.IDENT, TokenKind.NUMBER, TokenKind.VARIABLE}


def tokenize(source: str, path: str = "<input>") -> list[Token]:
    """Split ``source`` into tokens carrying kind, lexeme, line and column.

    Args:
        source: Program text
        path: File name used in diagnostics

    Returns:
        Token list (no end-of-file sentinel; empty input gives an empty list)

    Raises:
        SparcSyntaxError: On characters outside the lexical classes
    """
    tokens: list[Token] = []
    errors: list[Diagnostic] = []
    line, col, pos = 1, 1, 0
    length = len(source)

    while pos < length:
        ch = source[pos]

        if ch == "\n":
            line += 1
            col = 1
            pos += 1
            continue
        if ch.isspace():
            pos += 1
            col += 1
            continue
        if ch == "%":
            while pos < length and source[pos] != "\n":
                pos += 1
            continue

        word = _WORD.match(source, pos)
        if word:
            text = word.group()
            if "_" in text:
                errors.append(
                    Diagnostic(line, col, f"'_' is not allowed in identifier '{text}'", path=path)
                )
                pos = word.end()
                col += len(text)
                continue
            kind = _classify_word(text, tokens, source, word.end(), line)
            tokens.append(Token(kind, text, line, col))
            pos = word.end()
            col += len(text)
            continue

        number = _NUMBER.match(source, pos)
        if number:
            text = number.group()
            if len(text) > 1 and text[0] == "0":
                errors.append(
                    Diagnostic(line, col, f"natural number '{text}' has a leading zero", path=path)
                )
            tokens.append(Token(TokenKind.NUMBER, text, line, col))
            pos = number.end()
            col += len(text)
            continue

        for text, kind in _OPERATORS:
            if source.startswith(text, pos):
                tokens.append(Token(kind, text, line, col))
                pos += len(text)
                col += len(text)
                break
        else:
            errors.append(Diagnostic(line, col, f"invalid character '{ch}'", path=path))
            pos += 1
            col += 1

    if errors:
        raise SparcSyntaxError(errors)

    logger.debug(f"Tokenized {path}: {len(tokens)} tokens")
    return tokens


def _classify_word(
    text: str, tokens: list[Token], source: str, end: int, line: int
) -> TokenKind:
    if text[0].isupper():
        return TokenKind.VARIABLE
    if text == "not":
        return TokenKind.NOT
    if text == "mod":
        return TokenKind.MOD
    previous = tokens[-1] if tokens else None
    if text == "v" and previous and previous.kind in _ENDS_TERM and previous.line == line:
        if end >= len(source) or source[end] != "(":
            return TokenKind.OR
    return TokenKind.IDENT
