"""Polynomial expression grammar: parsing and canonical printing.

    expr     := ('+' | '-')? term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' nat)?
    base     := rational | variable | '(' expr ')'
    rational := nat ('/' nat)?

Multiplication is always explicit ("x*y"; "xy" is a single identifier) and
'/' occurs only inside rational literals.  The canonical printer emits terms
in descending grevlex order with explicit '*' and '^', which the parser
round-trips exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Polynomial, Ring


class PolyParseError(ValueError):
    """Syntax or name error with 1-based line and column position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class _Token:
    kind: str  # "number" | "name" | one of "+-*^/()" | "end"
    text: str
    line: int
    col: int


def _tokenize(src: str) -> list[_Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(src):
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            tokens.append(_Token("number", src[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(src) and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(_Token("name", src[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in "+-*^/()":
            tokens.append(_Token(ch, ch, line, start_col))
            col += 1
            i += 1
            continue
        raise PolyParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], ring: Ring):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise PolyParseError(
                f"expected {kind!r}, found {tok.text or 'end of input'!r}",
                tok.line,
                tok.col,
            )
        self.pos += 1
        return tok

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek().kind in "+-":
            if self.take(self.peek().kind).kind == "-":
                sign = -1
        total = self.term() * sign
        while self.peek().kind in "+-":
            if self.take(self.peek().kind).kind == "-":
                total = total - self.term()
            else:
                total = total + self.term()
        return total

    def term(self) -> Polynomial:
        product = self.factor()
        while self.peek().kind == "*":
            self.take("*")
            product = product * self.factor()
        return product

    def factor(self) -> Polynomial:
        base = self.base()
        if self.peek().kind == "^":
            self.take("^")
            tok = self.take("number")
            return base ** int(tok.text)
        return base

    def base(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "number":
            return self.ring.const(self.rational())
        if tok.kind == "name":
            self.take("name")
            try:
                index = self.ring.index(tok.text)
            except KeyError:
                raise PolyParseError(
                    f"unknown variable {tok.text!r}", tok.line, tok.col
                ) from None
            return self.ring.var(index)
        if tok.kind == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner
        raise PolyParseError(
            f"expected a value, found {tok.text or 'end of input'!r}",
            tok.line,
            tok.col,
        )

    def rational(self) -> Fraction:
        num = self.take("number")
        if self.peek().kind == "/":
            self.take("/")
            den = self.take("number")
            if int(den.text) == 0:
                raise PolyParseError("zero denominator", den.line, den.col)
            return Fraction(int(num.text), int(den.text))
        return Fraction(int(num.text))


def parse_polynomial(src: str, ring: Ring) -> Polynomial:
    """Parse an expression into an exact polynomial over the ring."""
    parser = _Parser(_tokenize(src), ring)
    result = parser.expr()
    trailing = parser.peek()
    if trailing.kind != "end":
        raise PolyParseError(
            f"unexpected trailing input {trailing.text!r}", trailing.line, trailing.col
        )
    return result


def format_polynomial(p: Polynomial) -> str:
    """Canonical string: descending grevlex terms, explicit '*' and '^'."""
    return str(p)
