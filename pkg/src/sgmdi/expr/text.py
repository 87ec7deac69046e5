"""Integrand mini-language: parser and printer.

Grammar (EBNF)::

    expr    = term { ("+" | "-") term } ;
    term    = unary { ("*" | "/") unary } ;
    unary   = ("-" | "+") unary | power ;
    power   = atom [ "^" unary ] ;            (* right associative *)
    atom    = number | "pi" | "e" | "d" | index | variable
            | func "(" expr ")"
            | ("sum" | "prod") "(" name "=" expr ".." expr "," expr ")"
            | "(" expr ")" ;
    variable = "x" digits | "x_" (digits | name) ;
    func    = "exp" | "sin" | "cos" | "sqrt" ;

Variables are 1-based in text (``x1`` is coordinate 0). Exponents must
fold to an integer constant, or to 0.5 which is read as ``sqrt``.
Inside ``sum``/``prod`` the index name is bound to each integer of the
inclusive range and may appear as a number or as ``x_i``; an empty range
gives 0 (sum) or 1 (prod). ``d`` is the dimension supplied to
:func:`parse`.

The printer emits text that parses back to the identical node.
"""

import math
import re

from . import core
from .core import ADD, CONST, COS, EXP, MUL, POW, RECIP, SIN, SQRT, VAR
from ..errors import ExprSyntaxError, UnboundDimension

__all__ = ["parse", "to_text"]

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+(?:\.\d+)?|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>\.\.|[-+*/^(),=])
""", re.VERBOSE)

_FUNCS = {"exp": core.exp, "sin": core.sin, "cos": core.cos, "sqrt": core.sqrt}


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    """Recursive descent to a small AST, then evaluation to canonical Expr."""

    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ExprSyntaxError(msg, self.text, tok[2])

    def expect(self, value):
        tok = self.next()
        if tok[1] != value:
            raise self.error(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok)
        return tok

    def parse(self):
        node = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.next()[1]
            node = ("bin", op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek()[1] in ("*", "/"):
            op = self.next()[1]
            node = ("bin", op, node, self.unary())
        return node

    def unary(self):
        if self.peek()[1] == "-":
            self.next()
            return ("neg", self.unary())
        if self.peek()[1] == "+":
            self.next()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            tok = self.next()
            return ("pow", base, self.unary(), tok)
        return base

    def atom(self):
        tok = self.next()
        kind, value, _ = tok
        if kind == "num":
            return ("num", float(value))
        if value == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind != "name":
            raise self.error(f"unexpected {value or 'end of input'!r}", tok)
        if value == "pi":
            return ("num", math.pi)
        if value == "e":
            return ("num", math.e)
        if value == "d":
            return ("dim", tok)
        if value in _FUNCS:
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            return ("call", value, arg)
        if value in ("sum", "prod"):
            self.expect("(")
            name = self.next()
            if name[0] != "name":
                raise self.error("index name expected", name)
            self.expect("=")
            lo = self.expr()
            self.expect("..")
            hi = self.expr()
            self.expect(",")
            body = self.expr()
            self.expect(")")
            return ("red", value, name[1], lo, hi, body, tok)
        m = re.fullmatch(r"x(\d+)|x_(\d+)|x_([A-Za-z][A-Za-z0-9]*)", value)
        if m:
            if m.group(3) == "d":
                return ("var", ("dim", tok), tok)
            if m.group(3) is not None:
                return ("var", ("idx", m.group(3), tok), tok)
            return ("var", ("num", float(m.group(1) or m.group(2))), tok)
        if self.peek()[1] == "(":
            raise self.error(f"unknown function {value!r}", tok)
        return ("idx", value, tok)


def _int_of(node, env, d, text, tok):
    v = _build(node, env, d, text)
    if v.kind != CONST or not float(v.value).is_integer():
        raise ExprSyntaxError("integer constant expected", text, tok[2])
    return int(v.value)


def _build(node, env, d, text):
    tag = node[0]
    if tag == "num":
        return core.const(node[1])
    if tag == "dim":
        if d is None:
            raise UnboundDimension("the expression uses d but no dimension was given")
        return core.const(d)
    if tag == "idx":
        name, tok = node[1], node[2]
        if name not in env:
            raise ExprSyntaxError(f"unknown name {name!r}", text, tok[2])
        return core.const(env[name])
    if tag == "var":
        tok = node[2]
        i = _int_of(node[1], env, d, text, tok)
        if i < 1:
            raise ExprSyntaxError("variables are numbered from 1", text, tok[2])
        if d is not None and i > d:
            raise ExprSyntaxError(f"x{i} exceeds the dimension {d}", text, tok[2])
        return core.var(i - 1)
    if tag == "neg":
        return core.neg(_build(node[1], env, d, text))
    if tag == "bin":
        a = _build(node[2], env, d, text)
        b = _build(node[3], env, d, text)
        return {"+": core.add, "-": core.sub, "*": core.mul, "/": core.div}[node[1]](a, b)
    if tag == "pow":
        base = _build(node[1], env, d, text)
        ex = _build(node[2], env, d, text)
        tok = node[3]
        if ex.kind != CONST:
            raise ExprSyntaxError("exponent must be a constant", text, tok[2])
        k = ex.value
        if k == 0.5:
            return core.sqrt(base)
        if k == -0.5:
            return core.recip(core.sqrt(base))
        if not k.is_integer():
            raise ExprSyntaxError("only integer exponents (or 0.5) are supported",
                                  text, tok[2])
        return core.powi(base, int(k))
    if tag == "call":
        return _FUNCS[node[1]](_build(node[2], env, d, text))
    if tag == "red":
        _, op, name, lo, hi, body, tok = node
        a = _int_of(lo, env, d, text, tok)
        b = _int_of(hi, env, d, text, tok)
        parts = []
        for i in range(a, b + 1):
            parts.append(_build(body, {**env, name: i}, d, text))
        if op == "sum":
            return core.add(*parts) if parts else core.ZERO
        return core.mul(*parts) if parts else core.ONE
    raise AssertionError(tag)


def parse(text, d=None):
    """Parse integrand text into a canonical :class:`Expr`.

    Parameters
    ----------
    text : str
    d : int, optional
        Dimension bound to the name ``d`` (required when the text uses it).
    """
    return _build(_Parser(text).parse(), {}, d, text)


def _num(v):
    s = repr(float(v))
    return f"({s})" if s.startswith("-") else s


def to_text(e):
    """Parseable text for ``e`` (round-trips to the same node)."""
    memo = {}

    def wrap(n):
        s = go(n)
        return s if n.kind in (CONST, VAR, EXP, SIN, COS, SQRT) else f"({s})"

    def go(n):
        r = memo.get(n)
        if r is not None:
            return r
        k = n.kind
        if k == CONST:
            r = _num(n.value)
        elif k == VAR:
            r = f"x{n.value + 1}"
        elif k == ADD:
            r = " + ".join(wrap(a) if a.kind == ADD else go(a) for a in n.args)
        elif k == MUL:
            # the coefficient goes last: read left to right, a leading
            # coefficient would be distributed over a following Add
            args = n.args[1:] + n.args[:1] if n.args[0].kind == CONST else n.args
            r = "*".join(wrap(a) for a in args)
        elif k == RECIP:
            r = f"1/{wrap(n.args[0])}"
        elif k == POW:
            r = f"{wrap(n.args[0])}^{n.value}"
        else:
            r = f"{k}({go(n.args[0])})"
        memo[n] = r
        return r

    return go(e)
