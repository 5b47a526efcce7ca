"""
Tokenizer and polynomial expression parser.

The session language and `PolyRing.parse` share this code, so every error
carries the line and column of the offending token.
"""

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, NoReturn

from ..errors import ParseError, SemanticError

if TYPE_CHECKING:
    from .polynomial import PolyRing, Polynomial

SYMBOLS = set("=()[],;/+-*^")


class TokenKind(str, Enum):
    INT = "int"
    ID = "identifier"
    SYMBOL = "symbol"
    EOF = "end of input"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    """Split source text into tokens. `#` starts a comment running to end of line."""
    tokens: list[Token] = []
    line, column, i = 1, 1, 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line, column, i = line + 1, 1, i + 1
            continue
        if ch.isspace():
            column, i = column + 1, i + 1
            continue
        if ch == "#":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        start = i
        if ch.isdigit():
            while i < len(text) and text[i].isdigit():
                i += 1
            kind = TokenKind.INT
        elif ch.isalpha() or ch == "_":
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
            kind = TokenKind.ID
        elif ch in SYMBOLS:
            i += 1
            kind = TokenKind.SYMBOL
        else:
            raise ParseError("unexpected character", line, column, ch)
        tokens.append(Token(kind, text[start:i], line, column))
        column += i - start
    tokens.append(Token(TokenKind.EOF, "", line, column))
    return tokens


class TokenStream:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    @classmethod
    def from_text(cls, text: str) -> "TokenStream":
        return cls(tokenize(text))

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def next(self) -> Token:
        token = self.peek()
        if token.kind != TokenKind.EOF:
            self.pos += 1
        return token

    def at_end(self) -> bool:
        return self.peek().kind == TokenKind.EOF

    def check(self, text: str) -> bool:
        token = self.peek()
        return token.kind in (TokenKind.SYMBOL, TokenKind.ID) and token.text == text

    def accept(self, text: str) -> bool:
        if self.check(text):
            self.pos += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        if not self.check(text):
            self.fail(f"expected {text!r}")
        return self.next()

    def expect_kind(self, kind: TokenKind) -> Token:
        if self.peek().kind != kind:
            self.fail(f"expected {kind.value}")
        return self.next()

    def expect_end(self) -> None:
        if not self.at_end():
            self.fail("unexpected trailing input")

    def fail(self, message: str, token: Token | None = None) -> NoReturn:
        token = token or self.peek()
        raise ParseError(message, token.line, token.column, token.text or None)


def parse_polynomial(stream: TokenStream, ring: "PolyRing") -> "Polynomial":
    """
    Parse one polynomial expression.

    Grammar:
        expr   := term (("+" | "-") term)*
        term   := unary ("*" unary)*
        unary  := "-" unary | power
        power  := atom ("^" INT)?
        atom   := INT | variable | "(" expr ")"
    """
    return _expr(stream, ring)


def _expr(stream: TokenStream, ring: "PolyRing") -> "Polynomial":
    result = _term(stream, ring)
    while True:
        if stream.accept("+"):
            result = result + _term(stream, ring)
        elif stream.accept("-"):
            result = result - _term(stream, ring)
        else:
            return result


def _term(stream: TokenStream, ring: "PolyRing") -> "Polynomial":
    result = _unary(stream, ring)
    while stream.accept("*"):
        result = result * _unary(stream, ring)
    return result


def _unary(stream: TokenStream, ring: "PolyRing") -> "Polynomial":
    if stream.accept("-"):
        return -_unary(stream, ring)
    return _power(stream, ring)


def _power(stream: TokenStream, ring: "PolyRing") -> "Polynomial":
    base = _atom(stream, ring)
    if stream.accept("^"):
        exponent = stream.expect_kind(TokenKind.INT)
        return base ** int(exponent.text)
    return base


def _atom(stream: TokenStream, ring: "PolyRing") -> "Polynomial":
    token = stream.peek()
    if token.kind == TokenKind.INT:
        stream.next()
        return ring.constant(int(token.text))
    if token.kind == TokenKind.ID:
        stream.next()
        if token.text not in ring.variables:
            raise SemanticError(
                f"unknown variable {token.text}", token.line, token.column, token.text
            )
        return ring.gen(ring.variables.index(token.text))
    if stream.accept("("):
        inner = _expr(stream, ring)
        stream.expect(")")
        return inner
    stream.fail("expected a polynomial")
