"""Expression parser for non-commutative polynomials.

Grammar (whitespace insignificant):

    expr   :=  [sign] term { ('+' | '-') term }
    term   :=  atom { '*' atom }
    atom   :=  coeff | var ['^' INT] | '(' expr ')'
    coeff  :=  INT ['/' INT]
    var    :=  identifier declared in the alphabet

'*' is the non-commutative concatenation product; '^' repeats a single
variable.  Coefficients are integers or integer ratios, reduced into the
coefficient field (a ratio whose denominator vanishes mod p is rejected).
Errors carry the offending position and the expected-token set.
"""

from __future__ import annotations

import re
from typing import NamedTuple

from .errors import ParseError
from .freealg import FreeAlgebra, NCPoly

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()/]))"
)


class _Token(NamedTuple):
    kind: str  # "int" | "ident" | "op" | "end"
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_pos = len(text) - len(stripped)
            raise ParseError(f"unexpected character {text[bad_pos]!r}", bad_pos)
        kind = m.lastgroup
        tokens.append(_Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


def identifiers_in(text: str) -> list[str]:
    """Distinct identifiers in source order; used to infer an alphabet."""
    seen: dict[str, None] = {}
    for tok in _tokenize(text):
        if tok.kind == "ident":
            seen[tok.text] = None
    return list(seen)


class _Parser:
    def __init__(self, text: str, algebra: FreeAlgebra):
        self.text = text
        self.algebra = algebra
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> _Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != op:
            raise ParseError(f"unexpected {tok.text!r}" if tok.kind != "end" else "unexpected end of input", tok.pos, (repr(op),))
        return self.advance()

    def parse(self) -> NCPoly:
        poly = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"trailing input {tok.text!r}", tok.pos, ("'+'", "'-'", "'*'", "end of input"))
        return poly

    def expr(self) -> NCPoly:
        sign = 1
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.advance()
            sign = -1 if tok.text == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.advance()
                rhs = self.term()
                acc = acc - rhs if tok.text == "-" else acc + rhs
            else:
                return acc

    def term(self) -> NCPoly:
        acc = self.atom()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.advance()
                acc = acc * self.atom()
            else:
                return acc

    def atom(self) -> NCPoly:
        tok = self.peek()
        if tok.kind == "int":
            return self.coefficient()
        if tok.kind == "ident":
            self.advance()
            try:
                var = self.algebra.variable(tok.text)
            except KeyError:
                raise ParseError(f"unknown identifier {tok.text!r}", tok.pos) from None
            nxt = self.peek()
            if nxt.kind == "op" and nxt.text == "^":
                self.advance()
                exp_tok = self.peek()
                if exp_tok.kind != "int":
                    raise ParseError("exponent must be an integer", exp_tok.pos, ("INT",))
                self.advance()
                power = self.algebra.one()
                for _ in range(int(exp_tok.text)):
                    power = power * var
                return power
            return var
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            nxt = self.peek()
            if nxt.kind == "op" and nxt.text == "^":
                raise ParseError("'^' applies to a single variable", nxt.pos)
            return inner
        raise ParseError(
            f"unexpected {tok.text!r}" if tok.kind != "end" else "unexpected end of input",
            tok.pos,
            ("INT", "identifier", "'('"),
        )

    def coefficient(self) -> NCPoly:
        tok = self.advance()
        num = int(tok.text)
        nxt = self.peek()
        if nxt.kind == "op" and nxt.text == "/":
            self.advance()
            den_tok = self.peek()
            if den_tok.kind != "int":
                raise ParseError("denominator must be an integer", den_tok.pos, ("INT",))
            self.advance()
            den = int(den_tok.text)
            if den == 0:
                raise ParseError("zero denominator", den_tok.pos)
            from fractions import Fraction

            try:
                value = self.algebra.field.coerce(Fraction(num, den))
            except ZeroDivisionError:
                raise ParseError(
                    f"coefficient {num}/{den} is not reducible in {self.algebra.field!r}",
                    tok.pos,
                ) from None
            return self.algebra.one().scale(value)
        return self.algebra.one().scale(num)


def parse_expression(text: str, algebra: FreeAlgebra) -> NCPoly:
    """Parse expression text into an NCPoly over the given algebra."""
    return _Parser(text, algebra).parse()
