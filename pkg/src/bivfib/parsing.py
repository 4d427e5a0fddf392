"""Text form of polynomials.

Grammar (whitespace is insignificant)::

    poly   := term (('+' | '-') term)*
    term   := coeff ('*' factor)* | factor ('*' factor)*
    factor := var ('^' int)?
    var    := 'x' | 'y' | 's' | 'g' | 'a' | 'z1' | 'z2'
    coeff  := int | '(' int ('+' | '-') int 'i' ')'
    int    := '-'? [0-9]+

The first term may additionally carry a leading '-' before a factor
(``-x^2 + y``), which is how ``render`` writes a negative leading term whose
coefficient is suppressed.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, NamedTuple

from .errors import PolySyntaxError
from .gaussian import GaussianInt
from .poly import VARIABLES, MultiPoly

_TOKEN = re.compile(r"\s*(?:(?P<int>[0-9]+)|(?P<var>z1|z2|[xysga])|(?P<op>[-+*^()i]))")


class Token(NamedTuple):
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append(Token(kind, m.group(kind), start))
        pos = m.end()
    tokens.append(Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.peek()
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        raise PolySyntaxError(f"{message}, found {what}", tok.pos, self.text)

    def expect_op(self, op: str) -> Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != op:
            self.fail(f"expected {op!r}")
        return self.take()

    def parse_int(self) -> int:
        sign = 1
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.take()
            sign = -1
            tok = self.peek()
        if tok.kind != "int":
            self.fail("expected integer")
        self.take()
        return sign * int(tok.text)

    def parse_coeff(self):
        tok = self.peek()
        if tok.kind == "op" and tok.text == "(":
            self.take()
            re_part = self.parse_int()
            op = self.peek()
            if op.kind != "op" or op.text not in "+-":
                self.fail("expected '+' or '-' in Gaussian coefficient")
            self.take()
            im_part = self.parse_int()
            if op.text == "-":
                im_part = -im_part
            self.expect_op("i")
            self.expect_op(")")
            return GaussianInt(re_part, im_part)
        return self.parse_int()

    def parse_factor(self, exps: dict) -> None:
        tok = self.peek()
        if tok.kind != "var":
            self.fail("expected variable")
        self.take()
        e = 1
        if self.peek().kind == "op" and self.peek().text == "^":
            self.take()
            e = self.parse_int()
        exps[tok.text] = exps.get(tok.text, 0) + e

    def starts_coeff(self) -> bool:
        tok = self.peek()
        if tok.kind == "int":
            return True
        if tok.kind == "op" and tok.text == "(":
            return True
        return tok.kind == "op" and tok.text == "-" and self.peek(1).kind == "int"

    def parse_term(self, first: bool):
        exps: dict = {}
        coeff = 1
        if self.starts_coeff():
            coeff = self.parse_coeff()
        else:
            tok = self.peek()
            if first and tok.kind == "op" and tok.text == "-" and self.peek(1).kind == "var":
                self.take()
                coeff = -1
            self.parse_factor(exps)
        while self.peek().kind == "op" and self.peek().text == "*":
            self.take()
            self.parse_factor(exps)
        return exps, coeff

    def parse(self) -> MultiPoly:
        if self.peek().kind == "end":
            self.fail("empty polynomial")
        terms = [self.parse_term(first=True)]
        while True:
            tok = self.peek()
            if tok.kind == "end":
                break
            if tok.kind != "op" or tok.text not in "+-":
                self.fail("expected '+' or '-'")
            self.take()
            exps, coeff = self.parse_term(first=False)
            terms.append((exps, -coeff if tok.text == "-" else coeff))
        return MultiPoly.from_terms(terms)


def parse(text: str) -> MultiPoly:
    """Parse polynomial text; raises ``PolySyntaxError`` carrying the offending position."""
    return _Parser(text).parse()


def _monomial_text(exps: dict) -> str:
    parts = []
    for name in VARIABLES:
        e = exps.get(name)
        if e:
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def render(p: MultiPoly) -> str:
    """Canonical text: descending lexicographic term order, unit coefficients suppressed."""
    if p.is_zero():
        return "0"
    out = []
    for idx, (exps, c) in enumerate(p.terms()):
        mono = _monomial_text(exps)
        negative = False
        if c.im:
            body = str(c) if not mono else f"{c}*{mono}"
        else:
            value = c.re
            negative = value < 0
            mag = abs(value)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
        if idx == 0:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` (as used for evaluation points)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise PolySyntaxError(f"invalid rational {text!r}", 0, text) from exc

