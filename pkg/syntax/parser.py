"""Recursive-descent parser for SPARC programs.

Grammar (one production per method):

    program      := 'sorts' 'definition' rule* 'predicates' 'declaration' decl*
                    'program' 'rules' rule*
    rule         := head '.' | head ':-' body '.' | ':-' body '.'
                  | literal ':+' [body] '.' | ':~' body '.'
    head         := literal ('v' literal)*
    body         := item (',' item)*
    item         := 'not' literal | literal | term rel term
    literal      := ['-'] ident ['(' term (',' term)* ')']
    term         := product (('+' | '-') product)*
    product      := primary (('*' | 'mod') primary)*
    primary      := number | variable | ident ['(' term (',' term)* ')'] | '(' term ')'
    decl         := ident '(' [ident (',' ident)*] ')' ['.']

Arithmetic follows the usual precedence ({*, mod} over {+, -}) and is left
associative. Errors are collected; after a malformed rule the parser skips
to the next period and keeps going so one run reports every problem.
"""

from __future__ import annotations

from loguru import logger

from syntax.diagnostics import Diagnostic
from syntax.lexer import Token, TokenKind, tokenize
from syntax.nodes import (
    Arith,
    ArithRel,
    BodyItem,
    Declaration,
    Func,
    Literal,
    Nat,
    Pred,
    Program,
    Rule,
    RuleKind,
    Span,
    SymConst,
    SymRel,
    Term,
    Variable,
)
from utils.exceptions import SparcSyntaxError

_RELATIONS = {
    TokenKind.EQ: "=",
    TokenKind.NEQ: "!=",
    TokenKind.LT: "<",
    TokenKind.LE: "<=",
    TokenKind.GT: ">",
    TokenKind.GE: ">=",
}

_SORTS_KEYWORD = ("sorts", "definition")
_PREDICATES_KEYWORD = ("predicates", "declaration")
_RULES_KEYWORD = ("program", "rules")
_PART_KEYWORDS = (_SORTS_KEYWORD, _PREDICATES_KEYWORD, _RULES_KEYWORD)


class _ParseFailure(Exception):
    """Internal signal: the current statement is malformed."""

    def __init__(self, token: Token, message: str) -> None:
        super().__init__(message)
        self.token = token
        self.message = message


class Parser:
    """Parser over a token list produced by :func:`tokenize`."""

    def __init__(self, tokens: list[Token], path: str = "<input>") -> None:
        self.path = path
        last_line = tokens[-1].line + 1 if tokens else 1
        self.tokens = list(tokens) + [Token(TokenKind.EOF, "", last_line, 1)]
        self.pos = 0
        self.errors: list[Diagnostic] = []

    # ── token helpers ────────────────────────────────────────────────────────

    def peek(self, offset: int = 0) -> Token:
        index = min(self.pos + offset, len(self.tokens) - 1)
        return self.tokens[index]

    def at(self, *kinds: TokenKind) -> bool:
        return self.peek().kind in kinds

    def advance(self) -> Token:
        token = self.peek()
        if token.kind is not TokenKind.EOF:
            self.pos += 1
        return token

    @property
    def previous(self) -> Token:
        return self.tokens[max(self.pos - 1, 0)]

    def expect(self, kind: TokenKind, what: str) -> Token:
        if not self.at(kind):
            token = self.peek()
            found = "end of input" if token.kind is TokenKind.EOF else f"'{token.lexeme}'"
            raise _ParseFailure(token, f"expected {what}, found {found}")
        return self.advance()

    def at_keyword(self, keyword: tuple[str, str]) -> bool:
        first, second = self.peek(), self.peek(1)
        return (
            first.kind is TokenKind.IDENT
            and first.lexeme == keyword[0]
            and second.kind is TokenKind.IDENT
            and second.lexeme == keyword[1]
        )

    def at_any_keyword(self) -> bool:
        return any(self.at_keyword(k) for k in _PART_KEYWORDS)

    def span_from(self, start: Token) -> Span:
        end = self.previous
        return Span(start.line, start.column, end.line, end.end_column)

    def error(self, token: Token, message: str) -> None:
        self.errors.append(Diagnostic(token.line, token.column, message, path=self.path))

    def synchronize(self) -> None:
        """Skip past the next period, stopping early at a part keyword."""
        while not self.at(TokenKind.EOF) and not self.at_any_keyword():
            if self.advance().kind is TokenKind.DOT:
                return

    # ── program ──────────────────────────────────────────────────────────────

    def parse_program(self) -> Program:
        sorts_span = self.expect_keyword(_SORTS_KEYWORD)
        sort_rules = self.parse_rule_section(sort_part=True)
        declarations_span = self.expect_keyword(_PREDICATES_KEYWORD)
        declarations = self.parse_declarations()
        rules_span = self.expect_keyword(_RULES_KEYWORD)
        rules = self.parse_rule_section(sort_part=False)

        if not self.at(TokenKind.EOF):
            self.error(self.peek(), f"unexpected '{self.peek().lexeme}' after program rules")

        if self.errors:
            raise SparcSyntaxError(self.errors)

        logger.debug(
            f"Parsed {self.path}: {len(sort_rules)} sort rules, "
            f"{len(declarations)} declarations, {len(rules)} program rules"
        )
        return Program(
            sort_rules=tuple(sort_rules),
            declarations=tuple(declarations),
            rules=tuple(rules),
            sorts_span=sorts_span,
            declarations_span=declarations_span,
            rules_span=rules_span,
        )

    def expect_keyword(self, keyword: tuple[str, str]) -> Span | None:
        if self.at_keyword(keyword):
            start = self.advance()
            self.advance()
            return self.span_from(start)
        self.error(self.peek(), f"missing part keyword '{' '.join(keyword)}'")
        return None

    def parse_rule_section(self, sort_part: bool) -> list[Rule]:
        rules: list[Rule] = []
        while not self.at(TokenKind.EOF) and not self.at_any_keyword():
            start = self.peek()
            try:
                rule = self.parse_rule(index=len(rules) + 1, allow_weak=False)
                if sort_part:
                    self.check_sort_rule(rule, start)
                rules.append(rule)
            except _ParseFailure as failure:
                self.error(failure.token, failure.message)
                self.synchronize()
        return rules

    def check_sort_rule(self, rule: Rule, start: Token) -> None:
        """Sort definitions are rules ``a0 :- a1,...,am, not am+1,...`` over atoms."""
        if rule.kind is not RuleKind.REGULAR:
            raise _ParseFailure(start, "sort definition allows only regular rules")
        if len(rule.head) != 1:
            raise _ParseFailure(start, "sort definition rules need exactly one head atom")
        literals = list(rule.head) + [item.literal for item in rule.body]
        if any(lit.negated for lit in literals):
            raise _ParseFailure(start, "classical negation is not allowed in the sort definition")

    # ── declarations ─────────────────────────────────────────────────────────

    def parse_declarations(self) -> list[Declaration]:
        declarations: list[Declaration] = []
        last_line = 0
        while not self.at(TokenKind.EOF) and not self.at_any_keyword():
            start = self.peek()
            try:
                if start.line <= last_line:
                    raise _ParseFailure(start, "declaration must be alone on its line")
                declaration = self.parse_declaration()
                last_line = self.previous.line
                declarations.append(declaration)
            except _ParseFailure as failure:
                self.error(failure.token, failure.message)
                last_line = failure.token.line
                self.synchronize_declaration(failure.token.line)
        return declarations

    def synchronize_declaration(self, line: int) -> None:
        while not self.at(TokenKind.EOF) and not self.at_any_keyword() and self.peek().line <= line:
            self.advance()

    def parse_declaration(self) -> Declaration:
        start = self.expect(TokenKind.IDENT, "predicate symbol")
        if not self.at(TokenKind.LPAREN):
            raise _ParseFailure(
                self.peek(),
                f"declaration of '{start.lexeme}' needs a sort list; "
                f"write {start.lexeme}() for a 0-ary predicate",
            )
        self.advance()
        sorts: list[str] = []
        if not self.at(TokenKind.RPAREN):
            sorts.append(self.expect(TokenKind.IDENT, "sort name").lexeme)
            while self.at(TokenKind.COMMA):
                self.advance()
                sorts.append(self.expect(TokenKind.IDENT, "sort name").lexeme)
        self.expect(TokenKind.RPAREN, "')' closing the sort list")
        if self.at(TokenKind.DOT):
            self.advance()
        span = self.span_from(start)
        following = self.peek()
        if following.kind is not TokenKind.EOF and following.line == self.previous.line:
            raise _ParseFailure(following, "declaration must be alone on its line")
        return Declaration(start.lexeme, tuple(sorts), span)

    # ── rules ────────────────────────────────────────────────────────────────

    def parse_rule(self, index: int, allow_weak: bool) -> Rule:
        start = self.peek()

        if self.at(TokenKind.WEAK_ARROW):
            if not allow_weak:
                raise _ParseFailure(start, "weak constraints are not part of SPARC programs")
            self.advance()
            body = self.parse_body()
            self.expect(TokenKind.DOT, "'.' ending the weak constraint")
            return Rule(RuleKind.WEAK, (), tuple(body), index, self.span_from(start))

        if self.at(TokenKind.RULE_ARROW):
            self.advance()
            body = self.parse_body()
            self.expect(TokenKind.DOT, "'.' ending the constraint")
            return Rule(RuleKind.REGULAR, (), tuple(body), index, self.span_from(start))

        head = [self.parse_head_literal()]
        while self.at(TokenKind.OR):
            self.advance()
            head.append(self.parse_head_literal())

        if self.at(TokenKind.DOT):
            self.advance()
            return Rule(RuleKind.REGULAR, tuple(head), (), index, self.span_from(start))

        if self.at(TokenKind.RULE_ARROW):
            self.advance()
            body = self.parse_body()
            self.expect(TokenKind.DOT, "'.' ending the rule")
            return Rule(RuleKind.REGULAR, tuple(head), tuple(body), index, self.span_from(start))

        if self.at(TokenKind.CR_ARROW):
            arrow = self.advance()
            if len(head) != 1:
                raise _ParseFailure(arrow, "a consistency-restoring rule has exactly one head literal")
            body = [] if self.at(TokenKind.DOT) else self.parse_body()
            self.expect(TokenKind.DOT, "'.' ending the cr-rule")
            return Rule(RuleKind.CR, tuple(head), tuple(body), index, self.span_from(start))

        token = self.peek()
        found = "end of input" if token.kind is TokenKind.EOF else f"'{token.lexeme}'"
        raise _ParseFailure(token, f"expected '.', ':-' or ':+' after rule head, found {found}")

    def parse_head_literal(self) -> Literal:
        token = self.peek()
        if self.at(TokenKind.NOT):
            raise _ParseFailure(token, "'not' cannot appear in a rule head")
        literal = self.parse_literal()
        if literal.is_relation:
            raise _ParseFailure(token, "relation atom cannot appear in a rule head")
        return literal

    def parse_body(self) -> list[BodyItem]:
        items = [self.parse_body_item()]
        while self.at(TokenKind.COMMA):
            self.advance()
            items.append(self.parse_body_item())
        return items

    def parse_body_item(self) -> BodyItem:
        if self.at(TokenKind.NOT):
            not_token = self.advance()
            literal = self.parse_literal()
            if literal.is_relation:
                raise _ParseFailure(not_token, "relation atoms cannot appear under 'not'")
            return BodyItem(literal, naf=True)
        return BodyItem(self.parse_literal(), naf=False)

    def parse_literal(self) -> Literal:
        start = self.peek()
        if self.at(TokenKind.MINUS):
            self.advance()
            atom = self.parse_pred_atom()
            return Literal(atom, negated=True, span=self.span_from(start))

        lhs = self.parse_term()
        if self.peek().kind in _RELATIONS:
            rel_token = self.advance()
            rhs = self.parse_term()
            atom = self.make_relation(rel_token, _RELATIONS[rel_token.kind], lhs, rhs, start)
            return Literal(atom, span=self.span_from(start))

        return Literal(self.term_to_atom(lhs, start), span=self.span_from(start))

    def parse_pred_atom(self) -> Pred:
        start = self.peek()
        term = self.parse_primary()
        return self.term_to_atom(term, start)

    def term_to_atom(self, term: Term, start: Token) -> Pred:
        if isinstance(term, SymConst):
            return Pred(term.name, (), self.span_from(start))
        if isinstance(term, Func):
            return Pred(term.functor, term.args, self.span_from(start))
        raise _ParseFailure(start, f"expected an atom, found term '{term}'")

    def make_relation(self, rel_token: Token, rel: str, lhs: Term, rhs: Term, start: Token):
        span = self.span_from(start)
        arithmetic = [_is_arithmetic(t) for t in (lhs, rhs)]
        symbolic = [_is_symbolic(t) for t in (lhs, rhs)]

        if rel not in ("=", "!="):
            if any(symbolic):
                raise _ParseFailure(rel_token, f"relation '{rel}' needs arithmetic terms")
            return ArithRel(rel, lhs, rhs, span)
        if any(arithmetic):
            if any(symbolic):
                raise _ParseFailure(
                    rel_token, f"relation '{rel}' compares an arithmetic and a symbolic term"
                )
            return ArithRel(rel, lhs, rhs, span)
        return SymRel(rel, lhs, rhs, span)

    # ── terms ────────────────────────────────────────────────────────────────

    def parse_term(self) -> Term:
        start = self.peek()
        left = self.parse_product()
        while self.at(TokenKind.PLUS, TokenKind.MINUS):
            op = self.advance()
            right = self.parse_product()
            left = self.make_arith(op, left, right, start)
        return left

    def parse_product(self) -> Term:
        start = self.peek()
        left = self.parse_primary()
        while self.at(TokenKind.STAR, TokenKind.MOD):
            op = self.advance()
            right = self.parse_primary()
            left = self.make_arith(op, left, right, start)
        return left

    def make_arith(self, op: Token, left: Term, right: Term, start: Token) -> Arith:
        for operand in (left, right):
            if _is_symbolic(operand):
                raise _ParseFailure(op, f"symbolic term '{operand}' in arithmetic expression")
        return Arith(op.lexeme, left, right, self.span_from(start))

    def parse_primary(self) -> Term:
        token = self.peek()

        if self.at(TokenKind.NUMBER):
            self.advance()
            return Nat(int(token.lexeme), self.span_from(token))

        if self.at(TokenKind.VARIABLE):
            self.advance()
            return Variable(token.lexeme, self.span_from(token))

        if self.at(TokenKind.IDENT):
            self.advance()
            if not self.at(TokenKind.LPAREN):
                return SymConst(token.lexeme, self.span_from(token))
            self.advance()
            if self.at(TokenKind.RPAREN):
                # p() is the explicit spelling of a 0-ary predicate
                self.advance()
                return SymConst(token.lexeme, self.span_from(token))
            args = [self.parse_term()]
            while self.at(TokenKind.COMMA):
                self.advance()
                args.append(self.parse_term())
            self.expect(TokenKind.RPAREN, f"')' closing the arguments of '{token.lexeme}'")
            return Func(token.lexeme, tuple(args), self.span_from(token))

        if self.at(TokenKind.LPAREN):
            self.advance()
            inner = self.parse_term()
            if not self.at(TokenKind.RPAREN):
                raise _ParseFailure(self.peek(), "unbalanced parentheses: expected ')'")
            self.advance()
            return inner

        found = "end of input" if token.kind is TokenKind.EOF else f"'{token.lexeme}'"
        raise _ParseFailure(token, f"expected a term, found {found}")

    # ── flat rule lists and literal sets ─────────────────────────────────────

    def parse_rule_list(self) -> list[Rule]:
        rules: list[Rule] = []
        while not self.at(TokenKind.EOF):
            try:
                rules.append(self.parse_rule(index=len(rules) + 1, allow_weak=True))
            except _ParseFailure as failure:
                self.error(failure.token, failure.message)
                self.synchronize()
        if self.errors:
            raise SparcSyntaxError(self.errors)
        return rules

    def parse_literal_set(self) -> list[Literal]:
        try:
            self.expect(TokenKind.LBRACE, "'{'")
            literals: list[Literal] = []
            if not self.at(TokenKind.RBRACE):
                literals.append(self.parse_ground_literal())
                while self.at(TokenKind.COMMA):
                    self.advance()
                    literals.append(self.parse_ground_literal())
            self.expect(TokenKind.RBRACE, "'}'")
            if not self.at(TokenKind.EOF):
                raise _ParseFailure(self.peek(), "unexpected text after '}'")
        except _ParseFailure as failure:
            self.error(failure.token, failure.message)
            raise SparcSyntaxError(self.errors) from None
        return literals

    def parse_ground_literal(self) -> Literal:
        literal = self.parse_literal()
        if literal.is_relation:
            raise _ParseFailure(self.previous, "relation atom in a literal set")
        return literal

    def parse_arith_only(self) -> Term:
        try:
            start = self.peek()
            term = self.parse_term()
            if not _is_arithmetic(term) and not isinstance(term, Variable):
                raise _ParseFailure(start, f"'{term}' is not an arithmetic term")
            if not self.at(TokenKind.EOF):
                token = self.peek()
                if token.kind is TokenKind.RPAREN:
                    raise _ParseFailure(token, "unbalanced parentheses: unexpected ')'")
                raise _ParseFailure(token, f"unexpected '{token.lexeme}' after arithmetic term")
        except _ParseFailure as failure:
            self.error(failure.token, failure.message)
            raise SparcSyntaxError(self.errors) from None
        return term


def _is_arithmetic(term: Term) -> bool:
    return isinstance(term, (Nat, Arith))


def _is_symbolic(term: Term) -> bool:
    return isinstance(term, (SymConst, Func))


# ── public entry points ──────────────────────────────────────────────────────


def parse_program(tokens: list[Token], path: str = "<input>") -> Program:
    """Parse a token stream into a :class:`Program`.

    Raises:
        SparcSyntaxError: With every diagnostic collected during the parse
    """
    return Parser(tokens, path).parse_program()


def parse_arith(tokens: list[Token], path: str = "<input>") -> Term:
    """Parse tokens forming exactly one arithmetic term."""
    return Parser(tokens, path).parse_arith_only()


def parse_rules(tokens: list[Token], path: str = "<input>") -> list[Rule]:
    """Parse a flat rule list (counterpart/DLV subset, weak constraints allowed)."""
    return Parser(tokens, path).parse_rule_list()


def parse_text(source: str, path: str = "<input>") -> Program:
    """Tokenize and parse program text in one call."""
    return parse_program(tokenize(source, path), path)


def parse_literals(text: str, path: str = "<output>") -> list[Literal]:
    """Parse a brace-delimited literal set such as ``{p(a), -q(b)}``."""
    return Parser(tokenize(text, path), path).parse_literal_set()
