"""Claim language: lexer, recursive-descent parser, interval evaluator, certifier.

Grammar (see docs/grammar.md)::

    claim   = sum [ cmp sum ] ;
    cmp     = "<" | ">" | "~=" [ "[" number "]" ] ;
    sum     = product { ( "+" | "-" ) product } ;
    product = unary { ( "*" | "/" ) unary } ;
    unary   = "-" unary | power ;
    power   = atom [ "^" unary ] ;
    atom    = number | const | func "(" sum ")" | "(" sum ")" ;
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import cinterval as ci
from . import mpreal as mr
from .cinterval import CInterval
from .errors import ExprSyntaxError, NonRealComparand, UnknownIdentifier
from .mpreal import RInterval

CONSTANTS = ("pi", "e", "i")
FUNCTIONS = ("exp", "ln", "sin", "cos", "sqrt", "abs", "re", "im", "conj")


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    text: str

    @property
    def value(self) -> Fraction:
        return Fraction(self.text)


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Expr"


@dataclass(frozen=True)
class Compare:
    op: str
    left: "Expr"
    right: "Expr"
    eps: str | None = None


Expr = Num | Const | Neg | Binary | Call | Compare


def pretty(node: Expr) -> str:
    """Fully parenthesized text that reparses to the same tree."""
    if isinstance(node, Num):
        return node.text
    if isinstance(node, Const):
        return node.name
    if isinstance(node, Neg):
        return f"(-{pretty(node.operand)})"
    if isinstance(node, Binary):
        return f"({pretty(node.left)} {node.op} {pretty(node.right)})"
    if isinstance(node, Call):
        return f"{node.func}({pretty(node.arg)})"
    if isinstance(node, Compare):
        op = node.op if node.eps is None else f"{node.op}[{node.eps}]"
        return f"{pretty(node.left)} {op} {pretty(node.right)}"
    raise TypeError(node)


# ---------------------------------------------------------------------------
# Lexer and parser
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>~=|[-+*/^()<>\[\]])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int  # byte offset into the UTF-8 source


def tokenize(src: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {src[pos]!r}", _byte_offset(src, pos))
        if m.lastgroup != "ws":
            tokens.append(Token(m.lastgroup, m.group(), _byte_offset(src, pos)))
        pos = m.end()
    tokens.append(Token("end", "", len(src.encode())))
    return tokens


def _byte_offset(src: str, index: int) -> int:
    return len(src[:index].encode())


class _Parser:
    def __init__(self, src: str):
        self.tokens = tokenize(src)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.take()
        if tok.text != text:
            raise ExprSyntaxError(f"expected {text!r}, found {tok.text or 'end of input'!r}",
                                  tok.offset)
        return tok

    def claim(self) -> Expr:
        left = self.sum()
        tok = self.peek()
        if tok.text in ("<", ">", "~="):
            self.take()
            eps = None
            if tok.text == "~=" and self.peek().text == "[":
                self.take()
                num = self.take()
                if num.kind != "num":
                    raise ExprSyntaxError("expected tolerance literal", num.offset)
                eps = num.text
                self.expect("]")
            right = self.sum()
            left = Compare(tok.text, left, right, eps)
        end = self.peek()
        if end.kind != "end":
            raise ExprSyntaxError(f"unexpected token {end.text!r}", end.offset)
        return left

    def sum(self) -> Expr:
        node = self.product()
        while self.peek().text in ("+", "-"):
            op = self.take().text
            node = Binary(op, node, self.product())
        return node

    def product(self) -> Expr:
        node = self.unary()
        while self.peek().text in ("*", "/"):
            op = self.take().text
            node = Binary(op, node, self.unary())
        return node

    def unary(self) -> Expr:
        if self.peek().text == "-":
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.peek().text == "^":
            self.take()
            return Binary("^", base, self.unary())
        return base

    def atom(self) -> Expr:
        tok = self.take()
        if tok.kind == "num":
            return Num(tok.text)
        if tok.kind == "ident":
            if tok.text in CONSTANTS:
                return Const(tok.text)
            if tok.text in FUNCTIONS:
                self.expect("(")
                arg = self.sum()
                self.expect(")")
                return Call(tok.text, arg)
            raise UnknownIdentifier(f"unknown identifier {tok.text!r}", tok.offset)
        if tok.text == "(":
            node = self.sum()
            self.expect(")")
            return node
        raise ExprSyntaxError(f"unexpected {tok.text or 'end of input'!r}", tok.offset)


def parse(src: str) -> Expr:
    return _Parser(src).claim()


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

def _integer_exponent(node: Expr) -> int | None:
    if isinstance(node, Num):
        v = node.value
        return int(v) if v.denominator == 1 else None
    if isinstance(node, Neg):
        n = _integer_exponent(node.operand)
        return None if n is None else -n
    return None


def _call(func: str, z: CInterval) -> CInterval:
    if func == "exp":
        return ci.cexp(z)
    if func == "ln":
        return ci.cln(z)
    if func == "sin":
        return ci.csin(z)
    if func == "cos":
        return ci.ccos(z)
    if func == "sqrt":
        return ci.csqrt(z)
    if func == "abs":
        return CInterval.real(ci.cabs(z))
    if func == "re":
        return CInterval.real(z.re)
    if func == "im":
        return CInterval.real(z.im)
    if func == "conj":
        return ci.conj(z)
    raise ValueError(func)


def evaluate(node: Expr | str, p: int) -> CInterval:
    """Enclosure of the exact value of an expression at ``p`` bits."""
    if isinstance(node, str):
        node = parse(node)
    if p < mr.MIN_PRECISION:
        raise ValueError(f"precision must be >= {mr.MIN_PRECISION}")
    return _eval(node, p)


def _eval(node: Expr, p: int) -> CInterval:
    if isinstance(node, Num):
        return CInterval.real(RInterval.point(node.value, p))
    if isinstance(node, Const):
        if node.name == "pi":
            return CInterval.real(mr.const_pi(p))
        if node.name == "e":
            return CInterval.real(mr.const_e(p))
        return CInterval.i(p)
    if isinstance(node, Neg):
        return -_eval(node.operand, p)
    if isinstance(node, Binary):
        if node.op == "^":
            return _power(node, p)
        a, b = _eval(node.left, p), _eval(node.right, p)
        return ci.carith(a, b, node.op)
    if isinstance(node, Call):
        return _call(node.func, _eval(node.arg, p))
    if isinstance(node, Compare):
        raise TypeError("comparisons are certified, not evaluated; use certify()")
    raise TypeError(node)


def _power(node: Binary, p: int) -> CInterval:
    n = _integer_exponent(node.right)
    if n is not None:
        return _eval(node.left, p) ** n
    exponent = _eval(node.right, p)
    if node.left == Const("e"):
        return ci.cexp(exponent)
    base = _eval(node.left, p)
    if base.is_real() and exponent.is_real() and base.re.lo.man > 0:
        return CInterval.real(mr.pow_real(base.re, exponent.re))
    return ci.cpow(base, exponent)


# ---------------------------------------------------------------------------
# Certification
# ---------------------------------------------------------------------------

class VerdictKind(str, enum.Enum):
    CERTIFIED_TRUE = "CertifiedTrue"
    CERTIFIED_FALSE = "CertifiedFalse"
    CONSISTENT_WITHIN = "ConsistentWithin"
    UNDECIDED = "Undecided"


@dataclass
class Verdict:
    kind: VerdictKind
    lhs: CInterval | None = None
    rhs: CInterval | None = None
    precision_used: int = 0
    eps: Fraction | None = None
    extras: dict = field(default_factory=dict)

    @property
    def decided(self) -> bool:
        return self.kind in (VerdictKind.CERTIFIED_TRUE, VerdictKind.CERTIFIED_FALSE)

    def __str__(self) -> str:
        if self.kind is VerdictKind.CONSISTENT_WITHIN and self.eps is not None:
            return f"ConsistentWithin({float(self.eps):.3g})"
        return self.kind.value


def _require_real(z: CInterval, p: int, side: str) -> RInterval:
    bound = Fraction(1, 1 << (p // 2))
    if not z.im.contains_zero() or z.im.width_fraction() > bound:
        raise NonRealComparand(f"{side} side is not real within 2^-{p // 2}: im = {z.im}")
    return z.re


def decide(op: str, lhs: RInterval, rhs: RInterval, eps: Fraction | None = None) -> VerdictKind:
    """Strict-separation decision for one comparison at fixed enclosures."""
    if op == ">":
        op, lhs, rhs = "<", rhs, lhs
    if op == "<":
        if lhs.hi < rhs.lo:
            return VerdictKind.CERTIFIED_TRUE
        if lhs.lo >= rhs.hi:
            return VerdictKind.CERTIFIED_FALSE
        return VerdictKind.UNDECIDED
    if op == "~=":
        diff = lhs - rhs
        lo, hi = diff.lo.to_fraction(), diff.hi.to_fraction()
        if -eps < lo and hi < eps:
            return VerdictKind.CERTIFIED_TRUE
        if lo >= eps or hi <= -eps:
            return VerdictKind.CERTIFIED_FALSE
        return VerdictKind.UNDECIDED
    raise ValueError(f"unknown comparison {op!r}")


def certify(claim: Expr | str, p_start: int = 128, p_max: int = 512,
            eps: Fraction | str | None = None) -> Verdict:
    """Decide a top-level comparison by strict enclosure separation.

    Precision doubles from ``p_start`` until the claim is decided or
    ``p_max`` is reached.  ``eps`` (for ``~=``) overrides a bracketed literal;
    the default is ``2**-(p_start/2)``.
    """
    node = parse(claim) if isinstance(claim, str) else claim
    if not isinstance(node, Compare):
        raise TypeError("certify() needs a comparison at the top level")
    tol = None
    if node.op == "~=":
        if eps is not None:
            tol = Fraction(eps)
        elif node.eps is not None:
            tol = Fraction(node.eps)
        else:
            tol = Fraction(1, 1 << (p_start // 2))
    p = p_start
    while True:
        lhs = evaluate(node.left, p)
        rhs = evaluate(node.right, p)
        a = _require_real(lhs, p, "left")
        b = _require_real(rhs, p, "right")
        kind = decide(node.op, a, b, tol)
        if kind is not VerdictKind.UNDECIDED or p >= p_max:
            return Verdict(kind, lhs, rhs, p, tol)
        p = min(2 * p, p_max)
