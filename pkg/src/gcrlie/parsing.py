"""Recursive-descent parser for element and polynomial literals.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ['^' uint]
    atom   := uint | name | '(' expr ')'
"""

from __future__ import annotations

import re

from .errors import FieldError, ParseError
from .fields import p_add, p_divmod, p_mul, p_neg, p_pow, p_scale, p_sub

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m.end() == pos:  # pragma: no cover
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start, text)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _ElementAlgebra:
    def __init__(self, F):
        self.F = F
        self.names = F.variables()

    def const(self, n):
        return self.F.from_int(n)

    def var(self, name):
        return self.names.get(name)

    def add(self, a, b):
        return self.F.add(a, b)

    def sub(self, a, b):
        return self.F.sub(a, b)

    def neg(self, a):
        return self.F.neg(a)

    def mul(self, a, b):
        return self.F.mul(a, b)

    def div(self, a, b, pos, text):
        if b == self.F.zero:
            raise ParseError("division by zero", pos, text)
        return self.F.div(a, b)

    def pow(self, a, e):
        return self.F.pow(a, e)


class _PolyAlgebra:
    """Payload polynomials over ``F`` in the indeterminate ``var``."""

    def __init__(self, F, var):
        self.F = F
        self.var_name = var
        self.names = F.variables()

    def const(self, n):
        c = self.F.from_int(n)
        return () if c == self.F.zero else (c,)

    def var(self, name):
        if name == self.var_name:
            return (self.F.zero, self.F.one)
        c = self.names.get(name)
        if c is None:
            return None
        return () if c == self.F.zero else (c,)

    def add(self, a, b):
        return p_add(self.F, a, b)

    def sub(self, a, b):
        return p_sub(self.F, a, b)

    def neg(self, a):
        return p_neg(self.F, a)

    def mul(self, a, b):
        return p_mul(self.F, a, b)

    def div(self, a, b, pos, text):
        if not b:
            raise ParseError("division by zero", pos, text)
        if len(b) == 1:
            return p_scale(self.F, self.F.inv(b[0]), a)
        q, r = p_divmod(self.F, a, b)
        if r:
            raise ParseError("polynomial division is not exact", pos, text)
        return q

    def pow(self, a, e):
        return p_pow(self.F, a, e)


class _Parser:
    def __init__(self, text, algebra):
        self.text = text
        self.alg = algebra
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok[2], self.text)

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty literal")
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return value

    def expr(self):
        sign = None
        if self.peek()[0] in ("+", "-"):
            sign = self.take()[0]
        value = self.term()
        if sign == "-":
            value = self.alg.neg(value)
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = self.alg.add(value, rhs) if op == "+" else self.alg.sub(value, rhs)
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] in ("*", "/"):
            op_tok = self.take()
            rhs = self.factor()
            if op_tok[0] == "*":
                value = self.alg.mul(value, rhs)
            else:
                value = self.alg.div(value, rhs, op_tok[2], self.text)
        return value

    def factor(self):
        value = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "int":
                self.fail("exponent must be a non-negative integer")
            self.take()
            value = self.alg.pow(value, tok[1])
        return value

    def atom(self):
        tok = self.peek()
        kind = tok[0]
        if kind == "int":
            self.take()
            return self.alg.const(tok[1])
        if kind == "name":
            self.take()
            value = self.alg.var(tok[1])
            if value is None:
                self.fail(f"unknown variable {tok[1]!r}", tok)
            return value
        if kind == "(":
            self.take()
            value = self.expr()
            if self.peek()[0] != ")":
                self.fail("expected ')'")
            self.take()
            return value
        if kind == "end":
            self.fail("unexpected end of input")
        self.fail(f"unexpected token {tok[1]!r}")


def parse_element(F, text):
    """Parse ``text`` as an element of ``F``."""
    from .fields import FieldElement
    if not isinstance(text, str):
        raise ParseError(f"element literal must be a string, got {type(text).__name__}")
    try:
        return FieldElement(F, _Parser(text, _ElementAlgebra(F)).parse())
    except FieldError as exc:
        raise ParseError(str(exc), None, text) from exc


def parse_polynomial_payload(F, text, var):
    """Parse ``text`` as a payload polynomial over ``F`` in ``var``."""
    if not isinstance(text, str):
        raise ParseError("polynomial literal must be a string")
    try:
        return _Parser(text, _PolyAlgebra(F, var)).parse()
    except FieldError as exc:
        raise ParseError(str(exc), None, text) from exc
