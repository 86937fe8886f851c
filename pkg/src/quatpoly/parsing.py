"""Text forms for quaternions and polynomials.

Quaternion literals follow `a + b*i + c*j + d*k` with decimal or p/q
components (a coefficient juxtaposed to a unit, like `2k` or `0.8j`, is also
accepted).  Polynomial expressions allow `z`, `+ - * /`, integer powers and
parenthesized factors; the only implicit multiplication is between a closing
and an opening parenthesis, so factored input reads `(z - i)*(z - j)` or
`(z - i)(z - j)`.  Division accepts a plain numeric right-hand side only.

On the exact backend, parse and print are mutually inverse.
"""

from __future__ import annotations

import re

from .polynomials import QPolynomial, const_poly, one_poly, zero_poly
from .quaternions import Quaternion, quat
from .scalars import Context, EXACT, RATIONAL_TYPES

_TOKEN_RE = re.compile(
    r"\s*(?:"
    r"(?P<num>\d+\.\d+|\.\d+|\d+)(?P<unit_after>[ijk])?"
    r"|(?P<unit>[ijk])"
    r"|(?P<z>z)"
    r"|(?P<op>[-+*/^()])"
    r")"
)


class ParseError(ValueError):
    pass


def _tokenize(text: str):
    text = text.replace("−", "-").replace("⋅", "*")
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            tail = text[pos:].strip()
            if not tail:
                break
            raise ParseError(f"unexpected input at {tail[:12]!r}")
        pos = m.end()
        if m.group("num") is not None:
            if m.group("unit_after"):
                out.append(("numunit", (m.group("num"), m.group("unit_after"))))
            else:
                out.append(("num", m.group("num")))
        elif m.group("unit"):
            out.append(("unit", m.group("unit")))
        elif m.group("z"):
            out.append(("z", "z"))
        else:
            out.append(("op", m.group("op")))
    return out


_UNIT_AXIS = {"i": 1, "j": 2, "k": 3}


class _Parser:
    def __init__(self, tokens, ctx: Context):
        self.toks = tokens
        self.pos = 0
        self.ctx = ctx

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None)

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, val = self.next()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}")

    def parse(self) -> QPolynomial:
        e = self.expr()
        if self.pos != len(self.toks):
            raise ParseError("trailing input")
        return e

    def expr(self) -> QPolynomial:
        node = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                rhs = self.term()
                node = node + rhs if val == "+" else node - rhs
            else:
                return node

    def term(self) -> QPolynomial:
        node = self.unary()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.next()
                node = node * self.unary()
            elif kind == "op" and val == "/":
                self.next()
                nkind, nval = self.next()
                if nkind != "num":
                    raise ParseError("the right-hand side of '/' must be a number")
                s = self.ctx.scalar(_num_value(nval, self.ctx))
                if s == 0:
                    raise ParseError("division by zero")
                node = node * const_poly(quat(self.ctx.scalar(1) / s, ctx=self.ctx))
            elif (kind == "op" and val == "("
                  and self.pos > 0 and self.toks[self.pos - 1] == ("op", ")")):
                # implicit multiplication, only between ')' and '('
                node = node * self.unary()
            else:
                return node

    def unary(self) -> QPolynomial:
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.next()
            inner = self.unary()
            return inner if val == "+" else -inner
        return self.power()

    def power(self) -> QPolynomial:
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.next()
            nkind, nval = self.next()
            if nkind != "num" or not nval.isdigit():
                raise ParseError("exponent must be a nonnegative integer")
            return base ** int(nval)
        return base

    def atom(self) -> QPolynomial:
        kind, val = self.next()
        if kind == "num":
            return const_poly(quat(_num_value(val, self.ctx), ctx=self.ctx))
        if kind == "unit":
            comps = [0, 0, 0, 0]
            comps[_UNIT_AXIS[val]] = 1
            return const_poly(quat(*comps, ctx=self.ctx))
        if kind == "numunit":
            text, unit = val
            comps = [0, 0, 0, 0]
            comps[_UNIT_AXIS[unit]] = _num_value(text, self.ctx)
            return const_poly(quat(*comps, ctx=self.ctx))
        if kind == "z":
            return QPolynomial((quat(0, ctx=self.ctx), quat(1, ctx=self.ctx)))
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected token {val!r}")


def _num_value(text: str, ctx: Context):
    if "." in text:
        if ctx.is_exact:
            from fractions import Fraction
            return Fraction(text)
        return float(text)
    return int(text)


def parse_poly(text: str, ctx: Context = EXACT) -> QPolynomial:
    return _Parser(_tokenize(text), ctx).parse()


def parse_quaternion(text: str, ctx: Context = EXACT) -> Quaternion:
    p = parse_poly(text, ctx)
    if p.degree > 0:
        raise ParseError("expected a quaternion literal, got a polynomial in z")
    c = p.constant()
    return c if c is not None else quat(0, ctx=ctx)


# -- printing ---------------------------------------------------------------


def scalar_str(s) -> str:
    if isinstance(s, float):
        return repr(s)
    return str(s)


def quat_str(q: Quaternion) -> str:
    parts = []
    for comp, sym in ((q.w, ""), (q.x, "i"), (q.y, "j"), (q.z, "k")):
        if comp == 0:
            continue
        neg = comp < 0
        mag = -comp if neg else comp
        if sym and mag == 1:
            body = sym
        elif sym:
            body = f"{scalar_str(mag)}*{sym}"
        else:
            body = scalar_str(mag)
        parts.append(("-" if neg else "+", body))
    if not parts:
        return "0"
    sign, body = parts[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def poly_str(f: QPolynomial) -> str:
    if f.is_zero():
        return "0"
    terms = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if c.is_exactly_zero():
            continue
        zpart = "z" if k == 1 else (f"z^{k}" if k > 1 else "")
        is_one = c.w == 1 and c.x == 0 and c.y == 0 and c.z == 0
        if zpart and is_one:
            terms.append(zpart)
        elif zpart:
            terms.append(f"{zpart}*({quat_str(c)})")
        else:
            terms.append(f"({quat_str(c)})")
    return " + ".join(terms)


# -- JSON-facing scalar/quaternion encodings ---------------------------------


def scalar_json(s):
    """Exact rationals as 'p/q' strings, floats as JSON numbers."""
    if isinstance(s, RATIONAL_TYPES):
        return str(s)
    return float(s)


def quat_json(q: Quaternion) -> str:
    return quat_str(q)


def poly_json(f: QPolynomial) -> dict:
    return {"coeffs": [quat_str(c) for c in f.coeffs]}
