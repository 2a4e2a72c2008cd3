"""Scalar expressions in one variable ``t``.

Grammar (lowest to highest precedence)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-'? power
    power  := atom ('^' number)?
    atom   := number | 'pi' | 'e' | 't' | func '(' expr ')' | '(' expr ')'

with ``func`` one of sin, cos, tan, exp, log, sqrt.  Trees evaluate over any
scalar kind the ``scalars`` module understands, so evaluating at a
hyper-dual seed yields exact first and second derivatives.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Any, Union

from . import scalars
from .scalars import DomainError

FUNCTION_NAMES = ("sin", "cos", "tan", "exp", "log", "sqrt")
CONSTANTS = {"pi": math.pi, "e": math.e}


class ParseError(ValueError):
    """Malformed expression; ``offset`` is the byte position of the failure."""

    def __init__(self, message: str, offset: int, expected: str = ""):
        self.message = message
        self.offset = offset
        self.expected = expected
        hint = f" (expected {expected})" if expected else ""
        super().__init__(f"{message} at offset {offset}{hint}")


class EvalError(DomainError):
    """Domain failure raised while evaluating a node."""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} at offset {offset}")


@dataclass(frozen=True)
class Num:
    value: float
    offset: int = 0


@dataclass(frozen=True)
class Const:
    name: str
    offset: int = 0


@dataclass(frozen=True)
class Var:
    offset: int = 0


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    offset: int = 0


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"
    offset: int = 0


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: float
    offset: int = 0


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Expr"
    offset: int = 0


Expr = Union[Num, Const, Var, Neg, BinOp, Pow, Call]

_TOKEN = re.compile(r"\s*(?:(?P<num>[0-9]+(?:\.[0-9]+)?)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))")


@dataclass(frozen=True)
class _Tok:
    kind: str  # 'num', 'ident', 'op', 'end', 'bad'
    text: str
    offset: int


def tokenize(src: str) -> list[_Tok]:
    """Tokens with byte offsets; an unlexable character becomes a final 'bad' token."""
    toks = []
    pos = 0
    while True:
        m = _TOKEN.match(src, pos)
        if m is None:
            rest = src[pos:]
            stripped = rest.lstrip()
            at = len(src[: pos + len(rest) - len(stripped)].encode("utf-8"))
            toks.append(_Tok("end" if not stripped else "bad", stripped[:1], at))
            return toks
        kind = m.lastgroup
        start = m.start(kind)
        toks.append(_Tok(kind, m.group(kind), len(src[:start].encode("utf-8"))))
        pos = m.end()


class _Parser:
    def __init__(self, src: str):
        self.toks = tokenize(src)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, expected: str):
        tok = self.tok
        if tok.kind == "bad":
            raise ParseError(f"unexpected character {tok.text!r}", tok.offset,
                             "a number, name, operator or parenthesis")
        what = "end of input" if tok.kind == "end" else f"{tok.text!r}"
        raise ParseError(f"unexpected {what}", tok.offset, expected)

    def expect_op(self, op: str):
        if self.tok.kind == "op" and self.tok.text == op:
            return self.advance()
        self.fail(f"'{op}'")

    def parse(self) -> Expr:
        node = self.expr()
        if self.tok.kind != "end":
            self.fail("an operator or end of input")
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance()
            node = BinOp(op.text, node, self.term(), op.offset)
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.advance()
            node = BinOp(op.text, node, self.factor(), op.offset)
        return node

    def factor(self) -> Expr:
        if self.tok.kind == "op" and self.tok.text == "-":
            op = self.advance()
            return Neg(self.power(), op.offset)
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            op = self.advance()
            if self.tok.kind != "num":
                self.fail("a numeric exponent")
            return Pow(base, float(self.advance().text), op.offset)
        return base

    def atom(self) -> Expr:
        tok = self.tok
        if tok.kind == "num":
            self.advance()
            return Num(float(tok.text), tok.offset)
        if tok.kind == "ident":
            if tok.text == "t":
                self.advance()
                return Var(tok.offset)
            if tok.text in CONSTANTS:
                self.advance()
                return Const(tok.text, tok.offset)
            if tok.text in FUNCTION_NAMES:
                self.advance()
                self.expect_op("(")
                arg = self.expr()
                self.expect_op(")")
                return Call(tok.text, arg, tok.offset)
            raise ParseError(f"unknown name {tok.text!r}", tok.offset,
                             "t, pi, e or one of " + ", ".join(FUNCTION_NAMES))
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            node = self.expr()
            self.expect_op(")")
            return node
        self.fail("a number, t, pi, e, a function call or '('")


def parse(src: str) -> Expr:
    """Parse ``src`` into an expression tree or raise :class:`ParseError`."""
    return _Parser(src).parse()


def evaluate(e: Expr, t: Any) -> Any:
    """Evaluate ``e`` at ``t`` (real, dual or hyper-dual)."""
    if isinstance(e, Num):
        return e.value
    if isinstance(e, Var):
        return t
    if isinstance(e, Const):
        return CONSTANTS[e.name]
    try:
        if isinstance(e, Neg):
            return -evaluate(e.operand, t)
        if isinstance(e, BinOp):
            a = evaluate(e.left, t)
            b = evaluate(e.right, t)
            if e.op == "+":
                return a + b
            if e.op == "-":
                return a - b
            if e.op == "*":
                return a * b
            return a * scalars.reciprocal(b)
        if isinstance(e, Pow):
            return scalars.power(evaluate(e.base, t), e.exponent)
        if isinstance(e, Call):
            return scalars.FUNCTIONS[e.func](evaluate(e.arg, t))
    except EvalError:
        raise
    except (DomainError, ZeroDivisionError, OverflowError) as exc:
        raise EvalError(str(exc), e.offset) from exc
    raise TypeError(f"not an expression node: {e!r}")


# ``eval`` is the contract name; ``evaluate`` avoids shadowing the builtin internally.
eval = evaluate  # noqa: A001


def _fmt_num(v: float) -> str:
    if float(v).is_integer() and abs(v) < 1e15:
        return str(int(v))
    return repr(float(v))


def to_source(e: Expr) -> str:
    """Canonical, fully parenthesized text that parses back to an equal tree."""
    if isinstance(e, Num):
        s = _fmt_num(e.value)
        if "e" in s or "inf" in s or "nan" in s:
            raise ValueError(f"literal {e.value!r} has no grammar representation")
        return s
    if isinstance(e, Var):
        return "t"
    if isinstance(e, Const):
        return e.name
    if isinstance(e, Neg):
        return f"(-{to_source(e.operand)})" if isinstance(e.operand, (Num, Var, Const, Call)) \
            else f"(-({to_source(e.operand)}))"
    if isinstance(e, BinOp):
        return f"({to_source(e.left)} {e.op} {to_source(e.right)})"
    if isinstance(e, Pow):
        return f"({to_source(e.base)})^{_fmt_num(e.exponent)}"
    if isinstance(e, Call):
        return f"{e.func}({to_source(e.arg)})"
    raise TypeError(f"not an expression node: {e!r}")


def strip_offsets(e: Expr) -> Expr:
    """Copy of ``e`` with every offset zeroed, for structural comparison."""
    if isinstance(e, Num):
        return Num(e.value)
    if isinstance(e, Var):
        return Var()
    if isinstance(e, Const):
        return Const(e.name)
    if isinstance(e, Neg):
        return Neg(strip_offsets(e.operand))
    if isinstance(e, BinOp):
        return BinOp(e.op, strip_offsets(e.left), strip_offsets(e.right))
    if isinstance(e, Pow):
        return Pow(strip_offsets(e.base), e.exponent)
    return Call(e.func, strip_offsets(e.arg))


def compile_expr(src: str):
    """Parse once and return a callable ``f(t)`` over any scalar kind."""
    tree = parse(src)
    return lambda t: evaluate(tree, t)
