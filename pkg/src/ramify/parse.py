"""Input grammar.

    input    := base (';' poly)*
    base     := 'laurent' '(' 'p' '=' INT [',' 'k' '=' residue] ')'
    residue  := 'Fp' | 'Fq' ':' wpoly | 'Fp(u)' | 'Fq(u)' ':' wpoly
    poly     := sum
    sum      := ['-'] product (('+' | '-') product)*
    product  := power (('*' | '/') power)*
    power    := atom ['^' ['-'] INT]
    atom     := INT | 't' | 'u' | 'w' | VAR | '(' sum ')'

VAR is a single uppercase letter (the polynomial variable). Whitespace is
ignored. Errors carry 1-based line and column.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import upoly
from .errors import DivisionByZero, InputError, ParseError
from .poly import KPoly
from .residue import GFq, PrimeField, RationalFunctionField, ResidueField
from .series import LaurentField, TSeries

_PUNCT = set("+-*/^(),;=:")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    line: int
    col: int


def tokenize(text: str) -> list:
    toks = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line, col = line + 1, 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            toks.append(Token("name", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in _PUNCT:
            toks.append(Token("op", ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(line, col, "a number, a name or an operator", ch)
    toks.append(Token("end", "", line, col))
    return toks


class _Cursor:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def advance(self) -> Token:
        t = self.toks[self.i]
        if t.kind != "end":
            self.i += 1
        return t

    def fail(self, expected: str):
        t = self.tok
        raise ParseError(t.line, t.col, expected, t.text or "end of input")

    def expect(self, kind: str, text: str | None = None) -> Token:
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            self.fail(repr(text) if text else kind)
        return self.advance()

    def at(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text


# -- polynomial values in one variable over a Laurent field -----------------------------------

class _Poly:
    """{degree: TSeries} during evaluation."""

    def __init__(self, K: LaurentField, terms=None):
        self.K = K
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_certified_zero()}

    @classmethod
    def const(cls, K, c: TSeries):
        return cls(K, {0: c})

    def is_const(self) -> bool:
        return all(k == 0 for k in self.terms)

    def constant(self) -> TSeries:
        return self.terms.get(0, self.K.zero())

    def __add__(self, o):
        out = dict(self.terms)
        for k, v in o.terms.items():
            out[k] = out[k] + v if k in out else v
        return _Poly(self.K, out)

    def __neg__(self):
        return _Poly(self.K, {k: -v for k, v in self.terms.items()})

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        out: dict = {}
        for a, x in self.terms.items():
            for b, y in o.terms.items():
                out[a + b] = out[a + b] + x * y if a + b in out else x * y
        return _Poly(self.K, out)


class PolyParser:
    def __init__(self, K: LaurentField, cur: _Cursor, var: str | None = None):
        self.K = K
        self.cur = cur
        self.var = var

    def parse_sum(self) -> _Poly:
        cur = self.cur
        if cur.at("+"):
            cur.fail("a term")
        neg = False
        if cur.at("-"):
            cur.advance()
            neg = True
        acc = self.parse_product()
        if neg:
            acc = -acc
        while cur.at("+") or cur.at("-"):
            op = cur.advance().text
            if cur.at("+") or cur.at("-"):
                cur.fail("a term")
            rhs = self.parse_product()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def parse_product(self) -> _Poly:
        cur = self.cur
        acc = self.parse_power()
        while cur.at("*") or cur.at("/"):
            op = cur.advance()
            rhs = self.parse_power()
            if op.text == "*":
                acc = acc * rhs
            else:
                if not rhs.is_const():
                    raise ParseError(op.line, op.col, "a divisor free of the polynomial variable", "/")
                c = rhs.constant()
                if c.is_certified_zero():
                    raise DivisionByZero(f"division by zero at line {op.line}, col {op.col}")
                inv = self.K.one() / c
                acc = acc * _Poly.const(self.K, inv)
        return acc

    def parse_power(self) -> _Poly:
        cur = self.cur
        base = self.parse_atom()
        if cur.at("^"):
            caret = cur.advance()
            neg = False
            if cur.at("-"):
                cur.advance()
                neg = True
            n = int(cur.expect("int").text)
            if neg:
                if not base.is_const():
                    raise ParseError(caret.line, caret.col, "a nonnegative exponent on the polynomial variable", "-")
                c = base.constant()
                if c.is_certified_zero():
                    raise DivisionByZero("negative power of zero")
                return _Poly.const(self.K, c ** (-n))
            out = _Poly.const(self.K, self.K.one())
            for _ in range(n):
                out = out * base
            return out
        return base

    def parse_atom(self) -> _Poly:
        cur = self.cur
        K = self.K
        t = cur.tok
        if t.kind == "int":
            cur.advance()
            return _Poly.const(K, K.from_int(int(t.text)))
        if cur.at("("):
            cur.advance()
            v = self.parse_sum()
            cur.expect("op", ")")
            return v
        if t.kind == "name":
            name = t.text
            if name == "t":
                cur.advance()
                return _Poly.const(K, K.t())
            gens = K.residue.gens
            if name in gens:
                cur.advance()
                return _Poly.const(K, K.const(gens[name]))
            if len(name) == 1 and name.isupper():
                if self.var is None:
                    self.var = name
                elif name != self.var:
                    cur.fail(f"the polynomial variable {self.var}")
                cur.advance()
                return _Poly(K, {1: K.one()})
            cur.fail("t, a residue generator, the polynomial variable or a number")
        cur.fail("a term")


def _to_kpoly(K: LaurentField, p: _Poly, var: str | None) -> KPoly:
    if not p.terms:
        return KPoly(K, (), var or "X")
    d = max(p.terms)
    return KPoly(K, tuple(p.terms.get(d - i, K.zero()) for i in range(d + 1)), var or "X")


def parse_poly(text: str, K: LaurentField) -> KPoly:
    cur = _Cursor(tokenize(text))
    pp = PolyParser(K, cur)
    val = pp.parse_sum()
    if cur.tok.kind != "end":
        cur.fail("an operator or end of input")
    return _to_kpoly(K, val, pp.var)


def parse_series(text: str, K: LaurentField) -> TSeries:
    f = parse_poly(text, K)
    if f.degree > 0:
        raise InputError("expected an element of the base field, not a polynomial")
    return f.coeffs[0] if f.coeffs else K.zero()


# -- base fields --------------------------------------------------------------------------------------

def _parse_wpoly(cur: _Cursor, p: int) -> tuple:
    Fp = PrimeField(p)
    start = cur.tok
    pp = _WParser(Fp, cur)
    coeffs = pp.parse_sum()
    m = upoly.trim(Fp, coeffs)
    if not m or m[-1] != 1:
        raise ParseError(start.line, start.col, "a monic polynomial in w", start.text)
    return m


class _WParser:
    """Polynomials in w over F_p, as ascending tuples."""

    def __init__(self, Fp: PrimeField, cur: _Cursor):
        self.F = Fp
        self.cur = cur

    def parse_sum(self):
        F, cur = self.F, self.cur
        if cur.at("+"):
            cur.fail("a term")
        neg = False
        if cur.at("-"):
            cur.advance()
            neg = True
        acc = self.parse_product()
        if neg:
            acc = upoly.neg(F, acc)
        while cur.at("+") or cur.at("-"):
            op = cur.advance().text
            rhs = self.parse_product()
            acc = upoly.add(F, acc, rhs) if op == "+" else upoly.sub(F, acc, rhs)
        return acc

    def parse_product(self):
        acc = self.parse_power()
        while self.cur.at("*"):
            self.cur.advance()
            acc = upoly.mul(self.F, acc, self.parse_power())
        return acc

    def parse_power(self):
        base = self.parse_atom()
        if self.cur.at("^"):
            self.cur.advance()
            n = int(self.cur.expect("int").text)
            out = (1,)
            for _ in range(n):
                out = upoly.mul(self.F, out, base)
            return out
        return base

    def parse_atom(self):
        cur = self.cur
        t = cur.tok
        if t.kind == "int":
            cur.advance()
            return upoly.trim(self.F, [int(t.text) % self.F.p])
        if t.kind == "name" and t.text == "w":
            cur.advance()
            return (0, 1)
        if cur.at("("):
            cur.advance()
            v = self.parse_sum()
            cur.expect("op", ")")
            return v
        cur.fail("w, a number or '('")


def _parse_base(cur: _Cursor) -> LaurentField:
    cur.expect("name", "laurent")
    cur.expect("op", "(")
    cur.expect("name", "p")
    cur.expect("op", "=")
    ptok = cur.expect("int")
    p = int(ptok.text)
    try:
        Fp = PrimeField(p)
    except InputError:
        raise ParseError(ptok.line, ptok.col, "a prime", ptok.text)
    res: ResidueField = Fp
    if cur.at(","):
        cur.advance()
        cur.expect("name", "k")
        cur.expect("op", "=")
        t = cur.tok
        if t.kind != "name" or t.text not in ("Fp", "Fq"):
            cur.fail("Fp or Fq")
        cur.advance()
        with_u = False
        if cur.at("("):
            cur.advance()
            cur.expect("name", "u")
            cur.expect("op", ")")
            with_u = True
        if t.text == "Fq":
            cur.expect("op", ":")
            start = cur.tok
            m = _parse_wpoly(cur, p)
            try:
                const = GFq(p, m)
            except InputError as exc:
                raise ParseError(start.line, start.col, "an irreducible monic polynomial in w", exc.message)
        else:
            const = Fp
        res = RationalFunctionField(const) if with_u else const
    cur.expect("op", ")")
    return LaurentField(res)


def parse_base(text: str) -> LaurentField:
    cur = _Cursor(tokenize(text))
    K = _parse_base(cur)
    if cur.tok.kind != "end":
        cur.fail("end of input")
    return K


def parse_input(text: str, build_fields=None):
    """Split ``base; poly; poly...`` and parse.

    The first polynomial is parsed over the base; later ones need the field
    presented by the previous steps, supplied by ``build_fields(K, polys)``
    which is called with each new polynomial and returns the next field.
    Without it all polynomials are parsed over the base.
    """
    cur = _Cursor(tokenize(text))
    K = _parse_base(cur)
    polys = []
    field = K
    while cur.at(";"):
        cur.advance()
        pp = PolyParser(field, cur)
        val = pp.parse_sum()
        P = _to_kpoly(field, val, pp.var)
        polys.append(P)
        if build_fields is not None:
            field = build_fields(P)
    if cur.tok.kind != "end":
        cur.fail("';' or end of input")
    return K, polys


def format_base(K: LaurentField) -> str:
    return K.describe()
