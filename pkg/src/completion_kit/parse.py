"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace is insignificant)::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | '+' unary | factor
    factor := base ('^' INTEGER)?
    base   := INTEGER | IDENTIFIER | '(' expr ')'

Multiplication must be written out: ``gj`` is one identifier, the product
is ``g*j``.  A leading minus negates the whole factor, so ``-a^2`` is
``-(a^2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .poly import Polynomial, RingSpec

__all__ = ["ParseError", "UnknownVariableError", "poly_parse", "identifiers"]


class ParseError(ValueError):
    """Syntax error; ``offset`` is the byte offset into the input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnknownVariableError(ParseError):
    def __init__(self, name: str, offset: int):
        super().__init__(f"unknown variable {name!r}", offset)
        self.name = name


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "ident", "op", "end"
    text: str
    offset: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        number, ident, op = m.groups()
        start = m.start(m.lastindex)
        if number is not None:
            tokens.append(_Token("int", number, start))
        elif ident is not None:
            tokens.append(_Token("ident", ident, start))
        else:
            if op not in "+-*^()":
                raise ParseError(f"unexpected character {op!r}", _byte_offset(text, start))
            tokens.append(_Token("op", op, start))
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


class _Parser:
    def __init__(self, text: str, ring: RingSpec):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.pos]

    def error(self, message: str, tok: _Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(message, _byte_offset(self.text, tok.offset))

    def accept(self, op: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == op:
            self.pos += 1
            return True
        return False

    def parse(self) -> Polynomial:
        result = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while True:
            if self.accept("+"):
                result = result + self.term()
            elif self.accept("-"):
                result = result - self.term()
            else:
                return result

    def term(self) -> Polynomial:
        result = self.unary()
        while self.accept("*"):
            result = result * self.unary()
        return result

    def unary(self) -> Polynomial:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.factor()

    def factor(self) -> Polynomial:
        base = self.base()
        if self.accept("^"):
            tok = self.tok
            if tok.kind != "int":
                raise self.error("expected a non-negative integer exponent")
            self.pos += 1
            return base ** int(tok.text)
        return base

    def base(self) -> Polynomial:
        tok = self.tok
        if tok.kind == "int":
            self.pos += 1
            return self.ring.const(int(tok.text))
        if tok.kind == "ident":
            if tok.text not in self.ring:
                raise UnknownVariableError(tok.text, _byte_offset(self.text, tok.offset))
            self.pos += 1
            return self.ring.var(tok.text)
        if self.accept("("):
            inner = self.expr()
            if not self.accept(")"):
                raise self.error("expected ')'")
            return inner
        if tok.kind == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {tok.text!r}")


def poly_parse(text: str, ring: RingSpec) -> Polynomial:
    """Parse ``text`` into a canonical polynomial over ``ring``."""
    return _Parser(text, ring).parse()


def identifiers(text: str) -> list[str]:
    """Identifiers in order of first appearance; used to infer a ring."""
    seen: dict[str, None] = {}
    for tok in _tokenize(text):
        if tok.kind == "ident":
            seen.setdefault(tok.text)
    return list(seen)
