"""Parser for the .zdk problem file format.

A problem file declares a ring, an ideal and optionally named elements:

    ring Q[x,y] order degrevlex
    ideal = [3x^3 - x^2 + 1, x^2 - y]
    elem f = x + y

Coefficient-variable juxtaposition (3x^2) is accepted; # starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import ParseError, UnknownVariable
from .fields import GF, QQ
from .groebner import Ideal
from .poly import DEGLEX, DEGREVLEX, LEX, MultiPoly, Ring

_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+|\#[^\n]*)
  | (?P<int>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<sym>[\[\]=,+\-*^/])
""", re.VERBOSE)

_ORDERS = {"lex": LEX, "deglex": DEGLEX, "degrevlex": DEGREVLEX}


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            out.append(_Tok(m.lastgroup, m.group(), pos))
        pos = m.end()
    return out


class _Stream:
    def __init__(self, toks, length):
        self.toks = toks
        self.i = 0
        self.length = length

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self):
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of input", self.length)
        self.i += 1
        return t

    def expect(self, text):
        t = self.next()
        if t.text != text:
            raise ParseError(f"expected {text!r}, found {t.text!r}", t.pos)
        return t


@dataclass
class ProblemFile:
    ring: Ring
    ideal: Ideal
    elems: dict = dc_field(default_factory=dict)


def _parse_poly(s: _Stream, ring: Ring) -> MultiPoly:
    """Terms separated by + or -; stops at a token that cannot continue."""
    var_index = {name: i for i, name in enumerate(ring.names)}
    acc = ring.zero()
    sign = 1
    t = s.peek()
    if t is not None and t.text in "+-":
        s.next()
        sign = -1 if t.text == "-" else 1
    while True:
        acc = acc + _parse_term(s, ring, var_index).scale(sign)
        t = s.peek()
        if t is None or t.text not in "+-":
            return acc
        s.next()
        sign = -1 if t.text == "-" else 1


def _parse_term(s: _Stream, ring: Ring, var_index) -> MultiPoly:
    fld = ring.field
    t = s.peek()
    if t is None:
        raise ParseError("unexpected end of input", s.length)
    coeff = fld.one
    have_coeff = False
    if t.kind == "int":
        s.next()
        num = int(t.text)
        nxt = s.peek()
        if nxt is not None and nxt.text == "/":
            s.next()
            den_tok = s.next()
            if den_tok.kind != "int":
                raise ParseError("expected integer denominator", den_tok.pos)
            coeff = fld.coerce(Fraction(num, int(den_tok.text)))
        else:
            coeff = fld.coerce(num)
        have_coeff = True
        nxt = s.peek()
        if nxt is not None and nxt.text == "*":
            s.next()
    exps = [0] * ring.nvars
    have_var = False
    while True:
        t = s.peek()
        if t is None or t.kind != "ident":
            break
        s.next()
        i = var_index.get(t.text)
        if i is None:
            raise UnknownVariable(f"unknown variable {t.text!r}")
        e = 1
        nxt = s.peek()
        if nxt is not None and nxt.text == "^":
            s.next()
            etok = s.next()
            if etok.kind != "int":
                raise ParseError("expected integer exponent", etok.pos)
            e = int(etok.text)
        exps[i] += e
        have_var = True
        nxt = s.peek()
        if nxt is not None and nxt.text == "*":
            s.next()
            continue
        # juxtaposition: another variable may follow directly
        nxt = s.peek()
        if nxt is None or nxt.kind != "ident":
            break
    if not have_coeff and not have_var:
        raise ParseError(f"expected a term, found {t.text!r}" if t else
                         "expected a term", t.pos if t else s.length)
    return ring.from_terms([(tuple(exps), coeff)])


def _parse_ring(s: _Stream) -> Ring:
    s.expect("ring")
    t = s.next()
    if t.kind != "ident":
        raise ParseError("expected field (Q or F<p>)", t.pos)
    if t.text == "Q":
        fld = QQ
    elif t.text == "F":
        p = s.next()
        if p.kind != "int":
            raise ParseError("expected prime after F", p.pos)
        fld = GF(int(p.text))
    elif t.text.startswith("F") and t.text[1:].isdigit():
        fld = GF(int(t.text[1:]))
    else:
        raise ParseError(f"unknown field {t.text!r}", t.pos)
    s.expect("[")
    names = []
    while True:
        v = s.next()
        if v.kind != "ident":
            raise ParseError("expected variable name", v.pos)
        if v.text in names:
            raise ParseError(f"duplicate variable {v.text!r}", v.pos)
        names.append(v.text)
        t = s.next()
        if t.text == "]":
            break
        if t.text != ",":
            raise ParseError(f"expected ',' or ']', found {t.text!r}", t.pos)
    s.expect("order")
    o = s.next()
    if o.text not in _ORDERS:
        raise ParseError(f"unknown ordering {o.text!r}", o.pos)
    return Ring(fld, tuple(names), _ORDERS[o.text])


def parse_problem(text: str) -> ProblemFile:
    s = _Stream(_tokenize(text), len(text))
    ring = _parse_ring(s)
    s.expect("ideal")
    s.expect("=")
    s.expect("[")
    gens = []
    while True:
        gens.append(_parse_poly(s, ring))
        t = s.next()
        if t.text == "]":
            break
        if t.text != ",":
            raise ParseError(f"expected ',' or ']', found {t.text!r}", t.pos)
    pf = ProblemFile(ring, Ideal(ring, gens))
    while s.peek() is not None:
        s.expect("elem")
        name = s.next()
        if name.kind != "ident":
            raise ParseError("expected element name", name.pos)
        s.expect("=")
        pf.elems[name.text] = _parse_poly(s, ring)
    return pf


def parse_poly(text: str, ring: Ring) -> MultiPoly:
    s = _Stream(_tokenize(text), len(text))
    p = _parse_poly(s, ring)
    t = s.peek()
    if t is not None:
        raise ParseError(f"unexpected trailing input {t.text!r}", t.pos)
    return p
