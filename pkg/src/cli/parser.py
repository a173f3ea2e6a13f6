"""
Text formats: a small tokenizer and recursive-descent parser for points, triples,
matrices, vertices, words and continued fractions

Expressions are rational functions in t built from integers, ``t``, ``a`` (the
generator of an extension field), ``+ - * / ^`` and parentheses. Juxtaposition
multiplies (``2t``, ``(a+1)t^3``), exponents may be negative (``t^-3``) and
``x/0`` is inf. Printing is done by the ``__str__`` of each type and parses back
to the same value.
"""

import re
from dataclasses import dataclass
from typing import List, Optional

from src.algebra import FieldElem, FieldSpec, Poly
from src.group import GammaElem, Generator, Word
from src.projective import ContinuedFraction, ProjPoint, Triple
from src.tree import Vertex
from src.utils.config import parse_field_size
from src.utils.errors import (
    DivisionByZero,
    FqtError,
    InfinityNotDecomposable,
    InvalidFieldSpec,
    ParseError,
)

_TOKEN = re.compile(r"(?P<int>\d+)|(?P<name>inf|[ta])|(?P<op>[-+*/^(),;\[\]])")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str, offset: int = 0) -> List[Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", offset + pos)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), offset + pos))
        pos = m.end()
    tokens.append(Token("end", "", offset + len(text)))
    return tokens


class _Parser:
    def __init__(self, spec: FieldSpec, text: str, offset: int = 0):
        self.spec = spec
        self.tokens = tokenize(text, offset)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.advance()
        if tok.text != text:
            found = repr(tok.text) if tok.kind != "end" else "end of input"
            raise ParseError(f"expected {text!r}, found {found}", tok.pos)
        return tok

    def finish(self) -> None:
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)

    def _arith(self, fn, pos: int) -> ProjPoint:
        try:
            return fn()
        except (InfinityNotDecomposable, DivisionByZero) as e:
            raise ParseError(str(e), pos)

    def point(self) -> ProjPoint:
        tok = self.peek()
        if tok.text == "inf":
            self.advance()
            return ProjPoint.infinity(self.spec)
        return self.expr()

    def expr(self) -> ProjPoint:
        value = self.term()
        while self.peek().text in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            if op.text == "+":
                value = self._arith(lambda: value + rhs, op.pos)
            else:
                value = self._arith(lambda: value - rhs, op.pos)
        return value

    def _starts_factor(self, tok: Token) -> bool:
        return tok.kind == "int" or tok.text in ("t", "a", "(")

    def term(self) -> ProjPoint:
        value = self.factor()
        while True:
            tok = self.peek()
            if tok.text in ("*", "/"):
                self.advance()
                rhs = self.factor()
                if tok.text == "*":
                    value = self._arith(lambda: value * rhs, tok.pos)
                else:
                    value = self._arith(lambda: value / rhs, tok.pos)
            elif self._starts_factor(tok):
                rhs = self.factor()
                value = self._arith(lambda: value * rhs, tok.pos)
            else:
                return value

    def factor(self) -> ProjPoint:
        tok = self.peek()
        if tok.text == "-":
            self.advance()
            return -self.factor()
        if tok.text == "+":
            self.advance()
            return self.factor()
        base = self.atom()
        if self.peek().text != "^":
            return base
        caret = self.advance()
        exponent = self.signed_int()
        return self._arith(lambda: _power(base, exponent), caret.pos)

    def signed_int(self) -> int:
        sign = 1
        while self.peek().text in ("-", "+"):
            if self.advance().text == "-":
                sign = -sign
        tok = self.advance()
        if tok.kind != "int":
            raise ParseError("expected an integer", tok.pos)
        return sign * int(tok.text)

    def atom(self) -> ProjPoint:
        tok = self.advance()
        spec = self.spec
        if tok.kind == "int":
            return ProjPoint.from_poly(Poly.constant(spec, int(tok.text)))
        if tok.text == "t":
            return ProjPoint.t_power(spec, 1)
        if tok.text == "a":
            if spec.k == 1:
                raise ParseError("'a' is only defined over an extension field", tok.pos)
            return ProjPoint.from_poly(Poly(spec, (spec.encode((0, 1)),)))
        if tok.text == "(":
            value = self.expr()
            self.expect(")")
            return value
        if tok.text == "inf":
            raise ParseError("inf can only stand alone as a point", tok.pos)
        found = repr(tok.text) if tok.kind != "end" else "end of input"
        raise ParseError(f"unexpected {found}", tok.pos)


def _power(base: ProjPoint, n: int) -> ProjPoint:
    if n < 0:
        if base.is_zero:
            raise DivisionByZero("negative power of 0")
        base, n = base.reciprocal(), -n
    result = ProjPoint.one(base.spec)
    for _ in range(n):
        result = result * base
    return result


def parse_point(spec: FieldSpec, text: str) -> ProjPoint:
    p = _Parser(spec, text)
    value = p.point()
    p.finish()
    return value


def parse_poly(spec: FieldSpec, text: str) -> Poly:
    value = parse_point(spec, text)
    if value.is_infinity or not value.is_polynomial:
        raise ParseError(f"{text!r} is not a polynomial", 0)
    return value.num


def parse_field_elem(spec: FieldSpec, text: str, offset: int = 0) -> FieldElem:
    p = _Parser(spec, text, offset)
    value = p.expr()
    p.finish()
    if not value.is_polynomial or not value.num.is_constant:
        raise ParseError(f"{text!r} is not a field element", offset)
    return FieldElem(spec, value.num.coefficient(0))


def parse_triple(spec: FieldSpec, text: str) -> Triple:
    p = _Parser(spec, text)
    p.expect("(")
    points = [p.point()]
    for _ in range(2):
        p.expect(",")
        points.append(p.point())
    p.expect(")")
    p.finish()
    return Triple(*points)


def parse_matrix(spec: FieldSpec, text: str) -> GammaElem:
    p = _Parser(spec, text)
    start = p.expect("[")
    entries = []
    for row in range(2):
        if row:
            p.expect(",")
        p.expect("[")
        entries.append(p.expr())
        p.expect(",")
        entries.append(p.expr())
        p.expect("]")
    p.expect("]")
    p.finish()
    try:
        return GammaElem.from_fractions(*entries)
    except DivisionByZero as e:
        raise ParseError(str(e), start.pos)


def parse_vertex(spec: FieldSpec, text: str) -> Vertex:
    p = _Parser(spec, text)
    p.expect("(")
    level = p.signed_int()
    p.expect(";")
    mark = p.peek()
    offset = p.expr()
    p.expect(")")
    p.finish()
    den = offset.den
    if not offset.is_zero and (den.is_zero or den.coeffs[:-1] != (0,) * int(den.degree)):
        raise ParseError("vertex offset must be a Laurent polynomial in t", mark.pos)
    shift = int(den.degree) if not offset.is_zero else 0
    return Vertex.make(spec, level, {e - shift: c for e, c in offset.num.terms()})


def parse_cf(spec: FieldSpec, text: str) -> ContinuedFraction:
    p = _Parser(spec, text)
    p.expect("[")
    quotients = [p.expr()]
    if p.peek().text == ";":
        p.advance()
        quotients.append(p.expr())
        while p.peek().text == ",":
            p.advance()
            quotients.append(p.expr())
    p.expect("]")
    p.finish()
    for q in quotients:
        if not q.is_polynomial:
            raise ParseError("partial quotients must be polynomials", 0)
    return ContinuedFraction(tuple(q.num for q in quotients))


def parse_word(spec: FieldSpec, text: str) -> Word:
    """Dot-separated tokens ``iota``, ``sigma:c``, ``u:f``, ``u:-f``; ``id`` is empty"""
    stripped = text.strip()
    if stripped in ("id", ""):
        return Word.identity(spec)
    tokens = []
    pos = 0
    for chunk in text.split("."):
        lead = len(chunk) - len(chunk.lstrip())
        item = chunk.strip()
        start = pos + lead
        name, sep, arg = item.partition(":")
        if name == "iota" and not sep:
            tokens.append(Generator.iota(spec))
        elif name == "sigma" and sep:
            tokens.append(Generator.sigma(parse_field_elem(spec, arg, start + 6)))
        elif name == "u" and sep:
            negated = arg.startswith("-")
            body = arg[1:] if negated else arg
            f = _parse_poly_at(spec, body, start + 2 + int(negated))
            tokens.append(Generator.u(f, negated))
        else:
            raise ParseError(f"unknown generator {item!r}", start)
        pos += len(chunk) + 1
    return Word(spec, tuple(tokens))


def _parse_poly_at(spec: FieldSpec, text: str, offset: int) -> Poly:
    p = _Parser(spec, text, offset)
    value = p.expr()
    p.finish()
    if not value.is_polynomial:
        raise ParseError(f"{text!r} is not a polynomial", offset)
    return value.num


def parse_field(q_text: str, modulus_text: Optional[str] = None) -> FieldSpec:
    """
    Field from ``--q`` and ``--modulus``; the modulus is a polynomial in ``a``
    over F_p, e.g. ``a^2+a+1`` for F_4
    """
    p, k = parse_field_size(q_text)
    if k == 1:
        if modulus_text:
            raise InvalidFieldSpec("--modulus is only used for extension fields")
        return FieldSpec(p)
    if not modulus_text:
        raise InvalidFieldSpec(f"q = {p}^{k} needs --modulus, an irreducible polynomial of degree {k} in a")
    base = FieldSpec(p)
    try:
        modulus = parse_poly(base, modulus_text.replace("a", "t"))
    except FqtError as e:
        raise InvalidFieldSpec(f"cannot read modulus {modulus_text!r}: {e}")
    return FieldSpec(p, k, modulus.coeffs)
