"""Arithmetic expressions: tokenizer, parser, printer and evaluator.

Grammar, loosest binding first::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' unary)?          # right associative
    atom   := NUMBER | NAME | NAME '(' expr ')' | '(' expr ')'

Numbers are decimal literals and become exact rationals (``3.14`` is
``157/50``).  Error offsets are byte offsets into the UTF-8 source.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Union

from . import creal as cr
from . import elementary as el
from .creal import CReal, DomainError

__all__ = [
    "Expr",
    "Num",
    "Const",
    "Apply",
    "BinOp",
    "ParseError",
    "FUNCTIONS",
    "CONSTANTS",
    "parse",
    "to_source",
    "evaluate",
]


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Apply:
    func: str
    arg: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


Expr = Union[Num, Const, Apply, BinOp]

FUNCTIONS = (
    "neg", "abs", "sqrt", "exp", "ln", "sin", "cos", "tan", "atan", "asin",
    "acos", "sinh", "cosh", "tanh", "asinh", "acosh", "atanh",
)
CONSTANTS = ("pi", "e")


# Tokenizer

@dataclass(frozen=True)
class _Token:
    kind: str  # "num", "name", "op", "end"
    text: str
    offset: int


_TOKEN_RE = re.compile(r"\s*(?:(\d+(?:\.\d*)?|\.\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(source: str) -> Iterator[_Token]:
    def byte_offset(i):
        return len(source[:i].encode())

    pos = 0
    while True:
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            break
        off = byte_offset(m.start(m.lastindex))
        number, name, op = m.groups()
        if number is not None:
            yield _Token("num", number, off)
        elif name is not None:
            yield _Token("name", name, off)
        elif op in "+-*/^()":
            yield _Token("op", op, off)
        else:
            raise ParseError(f"unexpected character {op!r}", off)
        pos = m.end()
    yield _Token("end", "", byte_offset(len(source)))


# Parser

class _Parser:
    def __init__(self, source: str):
        self.tokens: List[_Token] = list(_tokenize(source))
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def at_op(self, *ops) -> bool:
        return self.tok.kind == "op" and self.tok.text in ops

    def expect(self, op: str):
        if not self.at_op(op):
            found = self.tok.text or "end of input"
            raise ParseError(f"expected {op!r}, found {found!r}", self.tok.offset)
        self.advance()

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.offset)
        return e

    def expr(self) -> Expr:
        left = self.term()
        while self.at_op("+", "-"):
            op = self.advance().text
            left = BinOp(op, left, self.term())
        return left

    def term(self) -> Expr:
        left = self.unary()
        while self.at_op("*", "/"):
            op = self.advance().text
            left = BinOp(op, left, self.unary())
        return left

    def unary(self) -> Expr:
        if self.at_op("-"):
            self.advance()
            return Apply("neg", self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.at_op("^"):
            self.advance()
            return BinOp("^", base, self.unary())
        return base

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "num":
            self.advance()
            return Num(Fraction(t.text))
        if t.kind == "name":
            self.advance()
            if self.at_op("("):
                if t.text not in FUNCTIONS:
                    raise ParseError(f"unknown function {t.text!r}", t.offset)
                self.advance()
                arg = self.expr()
                self.expect(")")
                return Apply(t.text, arg)
            if t.text not in CONSTANTS:
                raise ParseError(f"unknown identifier {t.text!r}", t.offset)
            return Const(t.text)
        if self.at_op("("):
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        found = t.text or "end of input"
        raise ParseError(f"unexpected {found!r}", t.offset)


def parse(source: str) -> Expr:
    """Parse ``source`` into an expression tree; raises :class:`ParseError`."""
    return _Parser(source).parse()


def _decimal(q: Fraction) -> str:
    d, twos, fives = q.denominator, 0, 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1 or q < 0:
        raise ValueError(f"{q} has no decimal literal")
    places = max(twos, fives)
    if places == 0:
        return str(q.numerator)
    scaled = q.numerator * 10 ** places // q.denominator
    whole, frac = divmod(scaled, 10 ** places)
    return f"{whole}.{frac:0{places}d}"


def to_source(e: Expr) -> str:
    """Render ``e`` fully parenthesised, so that ``parse(to_source(e)) == e``."""
    if isinstance(e, Num):
        return _decimal(e.value)
    if isinstance(e, Const):
        return e.name
    if isinstance(e, Apply):
        return f"{e.func}({to_source(e.arg)})"
    return f"({to_source(e.left)}{e.op}{to_source(e.right)})"


# Evaluation

_FOLD_MAX_EXPONENT = 4096


def _literal(e: Expr) -> Optional[Fraction]:
    """Exact value of a constant rational subexpression, else ``None``.

    Folds numbers, ``neg``, ``abs``, the four operations and small integer
    powers; anything involving a constant, a transcendental function or a
    zero divisor is left to the real evaluator.
    """
    if isinstance(e, Num):
        return e.value
    if isinstance(e, Apply):
        if e.func not in ("neg", "abs"):
            return None
        inner = _literal(e.arg)
        if inner is None:
            return None
        return -inner if e.func == "neg" else abs(inner)
    if isinstance(e, BinOp):
        a = _literal(e.left)
        b = _literal(e.right) if a is not None else None
        if b is None:
            return None
        if e.op == "+":
            return a + b
        if e.op == "-":
            return a - b
        if e.op == "*":
            return a * b
        if e.op == "/":
            return a / b if b else None
        if b.denominator == 1 and abs(b) <= _FOLD_MAX_EXPONENT and (a or b >= 0):
            return a ** int(b)
    return None


class _Evaluator:
    def __init__(self, radius: Fraction, max_halvings: Optional[int]):
        self.radius = radius
        self.max_halvings = max_halvings

    def __call__(self, e: Expr) -> CReal:
        if isinstance(e, Num):
            return cr.from_rational(e.value)
        if isinstance(e, Const):
            return el.pi() if e.name == "pi" else el.e(self.radius)
        if isinstance(e, Apply):
            return self.apply(e)
        return self.binop(e)

    def binop(self, e: BinOp) -> CReal:
        if e.op == "^":
            return self.power(e)
        x, y = self(e.left), self(e.right)
        if e.op == "+":
            return cr.add(x, y)
        if e.op == "-":
            return cr.sub(x, y)
        if e.op == "*":
            return cr.mult(x, y)
        return cr.divide(x, y, self.max_halvings)

    def power(self, e: BinOp) -> CReal:
        n = _literal(e.right)
        if n is not None and n.denominator == 1:
            x = self(e.left)
            if n >= 0:
                return cr.power_int(x, int(n))
            return cr.recip(cr.power_int(x, int(-n)), self.max_halvings)
        base = _literal(e.left)
        if base is not None and base <= 0:
            raise DomainError(f"non-integer power of non-positive base {base}")
        return el.pow_real(self(e.left), self(e.right), self.radius, self.max_halvings)

    def apply(self, e: Apply) -> CReal:
        f = e.func
        lit = _literal(e.arg)
        if lit is not None:
            if f == "ln" and lit <= 0:
                raise DomainError(f"ln of non-positive literal {lit}")
            if f == "sqrt" and lit < 0:
                raise DomainError(f"sqrt of negative literal {lit}")
            if f in ("asin", "acos", "atanh") and abs(lit) >= 1:
                raise DomainError(f"{f} needs |x| < 1, got {lit}")
            if f == "acosh" and lit < 1:
                raise DomainError(f"acosh needs x >= 1, got {lit}")
        x = self(e.arg)
        r, k = self.radius, self.max_halvings
        if f == "neg":
            return cr.negate(x)
        if f == "abs":
            return cr.abs_real(x)
        if f == "sqrt":
            return el.sqrt_real(x)
        if f == "exp":
            return el.exp_real(x, r)
        if f == "ln":
            return el.ln_real(x, k)
        if f == "sin":
            return el.sin_real(x, r)
        if f == "cos":
            return el.cos_real(x, r)
        if f == "tan":
            return el.tan(x, r, k)
        if f == "atan":
            return el.arctan_real(x)
        if f == "asin":
            return el.arcsin(x, k)
        if f == "acos":
            return el.arccos(x, k)
        if f == "sinh":
            return el.sinh(x, r)
        if f == "cosh":
            return el.cosh(x, r)
        if f == "tanh":
            return el.tanh(x, r)
        if f == "asinh":
            return el.arcsinh(x, k)
        if f == "acosh":
            return el.arccosh(x, k)
        if f == "atanh":
            return el.arctanh(x, k)
        raise ValueError(f"unknown function {f!r}")


def evaluate(e: Expr, radius: Fraction = el.SERIES_RADIUS,
             max_halvings: Optional[int] = cr.DEFAULT_MAX_HALVINGS) -> CReal:
    """Build the real number denoted by ``e``.

    Division and partial functions search for an apartness witness with at
    most ``max_halvings`` gauge halvings and raise
    :class:`~exact_reals.creal.SeparationError` beyond that.
    """
    return _Evaluator(radius, max_halvings)(e)
