"""Parser for rational-function expressions.

Grammar (whitespace is ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' exponent)?
    exponent := ('+' | '-')? INT | '(' ('+' | '-')? INT ')'
    atom   := INT | 'x' | 'zeta(' INT (',' INT)? ')' | 'root(' num ',' INT ')' | '(' expr ')'
    num    := INT ('/' INT)?

``root(r, k)`` is the positive real k-th root of r > 0; k must divide a power
of the session radix p.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

from .constants import AlgConst
from .errors import ParseError, UnsupportedRadicalIndex
from .ratfun import RatFun

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]+)|(.))")


def _tokenize(s: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            out.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), start))
        elif m.group(3) is not None:
            if m.group(3) not in "+-*/^(),":
                raise ParseError(f"unexpected character {m.group(3)!r}", start)
            out.append(("op", m.group(3), start))
        pos = m.end()
    out.append(("end", "", len(s)))
    return out


def _divides_p_power(k: int, p: int) -> bool:
    while k > 1:
        g = gcd(k, p)
        if g == 1:
            return False
        k //= g
    return True


class _Parser:
    def __init__(self, s: str, p: int | None):
        self.toks = _tokenize(s)
        self.i = 0
        self.p = p

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value: str):
        t = self.take()
        if t[1] != value:
            raise ParseError(f"expected {value!r}, found {t[1] or 'end of input'!r}", t[2])
        return t

    def integer(self) -> int:
        t = self.take()
        if t[0] != "int":
            raise ParseError(f"expected an integer, found {t[1] or 'end of input'!r}", t[2])
        return int(t[1])

    def signed_integer(self) -> int:
        sign = 1
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            if self.take()[1] == "-":
                sign = -sign
        return sign * self.integer()

    def parse(self) -> RatFun:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        out = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"unexpected {t[1]!r}", t[2])
        return out

    def expr(self) -> RatFun:
        out = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> RatFun:
        out = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            _, op, pos = self.take()
            rhs = self.unary()
            if op == "*":
                out = out * rhs
            else:
                if rhs.is_zero():
                    raise ParseError("division by zero", pos)
                out = out / rhs
        return out

    def unary(self) -> RatFun:
        t = self.peek()
        if t[0] == "op" and t[1] in ("+", "-"):
            self.take()
            v = self.unary()
            return -v if t[1] == "-" else v
        return self.power()

    def power(self) -> RatFun:
        base = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            t = self.take()
            if self.peek()[1] == "(":
                self.take()
                n = self.signed_integer()
                self.expect(")")
            else:
                n = self.signed_integer()
            if n < 0 and base.is_zero():
                raise ParseError("zero raised to a negative power", t[2])
            base = base**n
        return base

    def atom(self) -> RatFun:
        t = self.take()
        kind, val, pos = t
        if kind == "int":
            return RatFun.const(int(val))
        if kind == "name":
            if val == "x":
                return RatFun.x()
            if val == "zeta":
                self.expect("(")
                n = self.integer()
                if n < 1:
                    raise ParseError("zeta order must be positive", pos)
                j = 1
                if self.peek()[1] == ",":
                    self.take()
                    j = self.signed_integer()
                self.expect(")")
                return RatFun.const(AlgConst.zeta(n, j))
            if val == "root":
                self.expect("(")
                r = Fraction(self.integer())
                if self.peek()[1] == "/":
                    self.take()
                    d = self.integer()
                    if d == 0:
                        raise ParseError("zero denominator in radicand", pos)
                    r /= d
                self.expect(",")
                kpos = self.peek()[2]
                k = self.integer()
                self.expect(")")
                if r <= 0:
                    raise ParseError("radicand must be positive", pos)
                if k < 1:
                    raise ParseError("root index must be positive", kpos)
                if self.p is not None and not _divides_p_power(k, self.p):
                    raise UnsupportedRadicalIndex(f"root index {k} does not divide a power of p = {self.p}")
                return RatFun.const(AlgConst.radical(r, k))
            raise ParseError(f"unknown name {val!r}", pos)
        if kind == "op" and val == "(":
            out = self.expr()
            self.expect(")")
            return out
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)


def parse_expr(s: str, p: int | None = None) -> RatFun:
    """Parse an expression into an exact rational function."""
    return _Parser(s, p).parse()
