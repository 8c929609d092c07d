"""Text grammars: word systems and polynomial expressions.

Word grammar (whitespace ignored):

    system := word (";" word)*
    word   := factor ("*" factor)*
    factor := "x" INDEX ("^" POWER)?

Polynomial grammar for parameterization entries: sums and differences of
products of rational constants, variables x1..xk, powers and parentheses.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .polyring import Poly
from .words import Word, WordSystem


class ParseError(ValueError):
    """Syntax or range error, carrying a character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?")


def parse_word(text: str, r: int, offset: int = 0) -> Word:
    letters: list[int] = []
    pos = 0
    stripped = text
    expect_factor = True
    while pos < len(stripped):
        ch = stripped[pos]
        if ch.isspace():
            pos += 1
            continue
        if not expect_factor:
            if ch == "*":
                pos += 1
                expect_factor = True
                continue
            raise ParseError(f"expected '*', found {ch!r}", offset + pos)
        m = _FACTOR.match(stripped, pos)
        if not m:
            raise ParseError(f"expected a factor like 'x1^2', found {ch!r}", offset + pos)
        index = int(m.group(1))
        power = int(m.group(2)) if m.group(2) else 1
        if index < 1:
            raise ParseError("generator indices start at 1", offset + pos)
        if index > r:
            raise ParseError(f"generator index {index} exceeds r = {r}", offset + pos)
        if power < 1:
            raise ParseError("powers must be >= 1", offset + pos)
        letters.extend([index] * power)
        pos = m.end()
        expect_factor = False
    if expect_factor:
        raise ParseError("empty word", offset + pos)
    return Word(tuple(letters))


def parse_words(text: str, m: int, r: int) -> WordSystem:
    """Parse a semicolon-separated word list into a WordSystem."""
    words = []
    offset = 0
    for chunk in text.split(";"):
        words.append(parse_word(chunk, r, offset))
        offset += len(chunk) + 1
    return WordSystem(m, r, tuple(words))


# -- polynomial expressions ------------------------------------------


class _PolyParser:
    _TOKEN = re.compile(
        r"\s*(?:(?P<num>\d+(?:\.\d+)?(?:/\d+)?)|(?P<var>x\d+)|(?P<op>[-+*^()]))"
    )

    def __init__(self, text: str, k: int):
        self.text = text
        self.k = k
        self.pos = 0
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = self._TOKEN.match(text, pos)
            if not m:
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), pos))
            pos = m.end()
        self.idx = 0

    def peek(self):
        return self.tokens[self.idx] if self.idx < len(self.tokens) else (None, None, len(self.text))

    def next(self):
        tok = self.peek()
        self.idx += 1
        return tok

    def parse(self) -> Poly:
        p = self.expr()
        kind, val, pos = self.peek()
        if kind is not None:
            raise ParseError(f"unexpected token {val!r}", pos)
        return p

    def expr(self) -> Poly:
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.next()
            sign = -1 if val == "-" else 1
        acc = self.term() * sign
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                nxt = self.term()
                acc = acc + nxt if val == "+" else acc - nxt
            else:
                return acc

    def term(self) -> Poly:
        acc = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.next()
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> Poly:
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.next()
            kind, val, pos = self.next()
            if kind != "num" or not val.isdigit():
                raise ParseError("exponent must be a nonnegative integer", pos)
            return base ** int(val)
        return base

    def atom(self) -> Poly:
        kind, val, pos = self.next()
        if kind == "num":
            try:
                return Poly.const(Fraction(val))
            except ValueError:
                raise ParseError(f"bad number {val!r}", pos) from None
        if kind == "var":
            j = int(val[1:])
            if not 1 <= j <= self.k:
                raise ParseError(f"variable {val} out of range (k = {self.k})", pos)
            return Poly.var(val)
        if kind == "op" and val == "(":
            p = self.expr()
            kind, val, pos = self.next()
            if val != ")":
                raise ParseError("expected ')'", pos)
            return p
        raise ParseError("expected a number, variable, or '('", pos)


def parse_poly(text: str, k: int) -> Poly:
    """Parse a polynomial in x1..xk."""
    return _PolyParser(text, k).parse()
