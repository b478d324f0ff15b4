"""Element and scalar expressions.

Grammar:
    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := rational | 'h' ('^' nat)? | ident ('^' nat)?
            | 'exp' '(' expr ')' | '(' expr ')' | '-' factor

Identifiers resolve against a presentation's generators; 'h' and 'exp'
are reserved.  exp() requires an argument of h-valuation >= 1.  Scalar
mode accepts the same grammar with identifiers forbidden.

Printing is the inverse: parse(print(e)) reproduces e exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ExpressionSyntaxError, UnknownGenerator
from .freealg import Element, Monomial
from .hopf import Presentation, element_exp, element_power, multiply
from .series import HSeries, exp as series_exp

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*^()/]))")


class _Tokens:
    def __init__(self, src: str):
        self.src = src
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(src):
            m = _TOKEN.match(src, pos)
            if not m or m.end() == m.start():
                if src[pos:].strip():
                    raise ExpressionSyntaxError(
                        f"unexpected character {src[pos]!r}", pos)
                break
            if m.group(1):
                self.toks.append(("num", m.group(1), m.start(1)))
            elif m.group(2):
                self.toks.append(("ident", m.group(2), m.start(2)))
            else:
                self.toks.append(("op", m.group(3), m.start(3)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None,
                                                                  len(self.src))

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, val, pos = self.next()
        if kind != "op" or val != op:
            raise ExpressionSyntaxError(f"expected {op!r}", pos)


class _Evaluator:
    """Shared recursive-descent evaluation; scalar mode has no generators."""

    def __init__(self, P: Presentation | None, order: int):
        self.P = P
        self.order = order

    # scalar embedding helpers -------------------------------------------------

    def from_scalar(self, s: HSeries):
        if self.P is None:
            return s
        return self.P.unit().scaled(s)

    def mul(self, a, b):
        if self.P is None:
            return a * b
        return multiply(a, b, self.P)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def power(self, a, k: int):
        if self.P is None:
            out = HSeries.one(self.order)
            for _ in range(k):
                out = out * a
            return out
        return element_power(a, k, self.P)

    def exp(self, a):
        if self.P is None:
            return series_exp(a)
        return element_exp(a, self.P)

    def h(self, k: int):
        return self.from_scalar(HSeries.h_power(k, self.order))

    def ident(self, name: str, pos: int):
        if self.P is None:
            raise ExpressionSyntaxError(
                f"identifier {name!r} not allowed in a scalar expression",
                pos)
        if name not in self.P.gen_index:
            raise UnknownGenerator(
                f"{name!r} is not a generator of {self.P.name!r} "
                f"(generators: {', '.join(self.P.generators)})")
        return self.P.gen(name)

    def rational(self, num: int):
        return self.from_scalar(HSeries.const(num, self.order))

    def rational_frac(self, num: int, den: int):
        return self.from_scalar(HSeries.const(Fraction(num, den), self.order))


def _parse_expr(t: _Tokens, ev: _Evaluator):
    acc = _parse_term(t, ev)
    while True:
        kind, val, _ = t.peek()
        if kind == "op" and val in "+-":
            t.next()
            rhs = _parse_term(t, ev)
            acc = ev.add(acc, rhs if val == "+" else ev.neg(rhs))
        else:
            return acc


def _parse_term(t: _Tokens, ev: _Evaluator):
    acc = _parse_factor(t, ev)
    while True:
        kind, val, _ = t.peek()
        if kind == "op" and val == "*":
            t.next()
            acc = ev.mul(acc, _parse_factor(t, ev))
        else:
            return acc


def _parse_nat(t: _Tokens) -> int:
    kind, val, pos = t.next()
    if kind != "num":
        raise ExpressionSyntaxError("expected a natural number exponent", pos)
    return int(val)


def _parse_factor(t: _Tokens, ev: _Evaluator):
    kind, val, pos = t.next()
    if kind == "op" and val == "-":
        return ev.neg(_parse_factor(t, ev))
    if kind == "op" and val == "(":
        inner = _parse_expr(t, ev)
        t.expect_op(")")
        return inner
    if kind == "num":
        num = int(val)
        k2, v2, _ = t.peek()
        if k2 == "op" and v2 == "/":
            t.next()
            k3, v3, p3 = t.next()
            if k3 != "num":
                raise ExpressionSyntaxError("expected a denominator", p3)
            return ev.rational_frac(num, int(v3))
        return ev.rational(num)
    if kind == "ident" and val == "exp":
        t.expect_op("(")
        inner = _parse_expr(t, ev)
        t.expect_op(")")
        return ev.exp(inner)
    if kind == "ident" and val == "h":
        k2, v2, _ = t.peek()
        if k2 == "op" and v2 == "^":
            t.next()
            return ev.h(_parse_nat(t))
        return ev.h(1)
    if kind == "ident":
        base = ev.ident(val, pos)
        k2, v2, _ = t.peek()
        if k2 == "op" and v2 == "^":
            t.next()
            return ev.power(base, _parse_nat(t))
        return base
    raise ExpressionSyntaxError("expected a factor", pos)


def _run_parser(src: str, ev: _Evaluator):
    t = _Tokens(src)
    out = _parse_expr(t, ev)
    kind, _, pos = t.peek()
    if kind is not None:
        raise ExpressionSyntaxError("trailing input", pos)
    return out


def parse_element(src: str, P: Presentation) -> Element:
    """Parse an element expression over P's generators, normal-formed."""
    return _run_parser(src, _Evaluator(P, P.h_order)).truncate(
        P.h_order, P.degree_cap)


def parse_scalar(src: str, order: int) -> HSeries:
    """Parse a generator-free expression into a truncated series."""
    return _run_parser(src, _Evaluator(None, order))


# -- printing (fixed point of the parser) ----------------------------------------


def scalar_to_expr(s: HSeries) -> str:
    if s.is_zero():
        return "0"
    parts = []
    for k, c in s.items():
        if k < 0:
            raise ValueError("cannot print Laurent series as an expression")
        bits = []
        if c != 1 or k == 0:
            bits.append(str(c))
        if k == 1:
            bits.append("h")
        elif k > 1:
            bits.append(f"h^{k}")
        parts.append("*".join(bits))
    return " + ".join(parts)


def _monomial_to_expr(m: Monomial, P: Presentation) -> str:
    bits = []
    for i, e in enumerate(m.exponents):
        if e == 1:
            bits.append(P.generators[i])
        elif e > 1:
            bits.append(f"{P.generators[i]}^{e}")
    return "*".join(bits)


def element_to_expr(a: Element, P: Presentation) -> str:
    if a.is_zero():
        return "0"
    parts = []
    for m, c in a.sorted_terms():
        cs = scalar_to_expr(c)
        ms = _monomial_to_expr(m, P)
        if not ms:
            parts.append(f"({cs})" if ("+" in cs or "*" in cs) else cs)
        elif cs == "1":
            parts.append(ms)
        elif "+" in cs:
            parts.append(f"({cs})*{ms}")
        else:
            parts.append(f"{cs}*{ms}")
    return " + ".join(parts)
