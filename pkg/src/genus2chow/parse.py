"""Reading and writing polynomials in a small ASCII grammar.

The grammar accepts integer coefficients, named variables, ``+ - * ^`` and
parentheses, and is whitespace-insensitive.  Rendering produces the canonical
form used throughout reports: terms in descending monomial order, explicit
``*`` between factors, ``^`` for powers.
"""

from __future__ import annotations

import re
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .ring import IntPolynomial, Ring


class ParseError(ValueError):
    """A syntax or name error, with the 0-based position in the input."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {text[bad_at]!r}", bad_at)
        for kind in ("int", "name", "op"):
            value = m.group(kind)
            if value is not None:
                tokens.append((kind, value, m.start(kind)))
                break
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, ring: "Ring", text: str):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.at = 0

    def peek(self):
        return self.tokens[self.at]

    def advance(self):
        token = self.tokens[self.at]
        self.at += 1
        return token

    def expect_op(self, op: str):
        kind, value, pos = self.peek()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}", pos)
        self.advance()

    def parse(self) -> "IntPolynomial":
        poly = self.expression()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r}", pos)
        return poly

    def expression(self) -> "IntPolynomial":
        kind, value, _ = self.peek()
        negate = False
        if kind == "op" and value in "+-":
            self.advance()
            negate = value == "-"
        poly = self.term()
        if negate:
            poly = -poly
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                rhs = self.term()
                poly = poly - rhs if value == "-" else poly + rhs
            else:
                return poly

    def term(self) -> "IntPolynomial":
        poly = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                poly = poly * self.factor()
            else:
                return poly

    def factor(self) -> "IntPolynomial":
        base = self.primary()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            ekind, evalue, epos = self.peek()
            if ekind != "int":
                raise ParseError("expected integer exponent", epos)
            self.advance()
            return base ** int(evalue)
        return base

    def primary(self) -> "IntPolynomial":
        kind, value, pos = self.advance()
        if kind == "int":
            return self.ring.const(int(value))
        if kind == "name":
            if value not in self.ring:
                raise ParseError(f"unknown variable {value!r}", pos)
            return self.ring.var(value)
        if kind == "op" and value == "(":
            poly = self.expression()
            self.expect_op(")")
            return poly
        if kind == "op" and value == "-":
            return -self.primary()
        raise ParseError(f"expected a coefficient, variable or '('", pos)


def parse_polynomial(ring: "Ring", text: str) -> "IntPolynomial":
    """Parse ``text`` as a polynomial over ``ring``."""
    return _Parser(ring, text).parse()


def render_monomial(ring: "Ring", exps) -> str:
    parts = []
    for spec, e in zip(ring.variables, exps):
        if e == 1:
            parts.append(spec.name)
        elif e > 1:
            parts.append(f"{spec.name}^{e}")
    return "*".join(parts) if parts else "1"


def render_polynomial(poly: "IntPolynomial") -> str:
    """Canonical ASCII form: descending monomial order, explicit * and ^."""
    if not poly:
        return "0"
    pieces = []
    for exps, coeff in poly.terms():
        mono = render_monomial(poly.ring, exps)
        mag = abs(coeff)
        if mono == "1":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        pieces.append(("-" if coeff < 0 else "+", body))
    sign, body = pieces[0]
    out = body if sign == "+" else f"-{body}"
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
