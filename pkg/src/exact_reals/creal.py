"""Real numbers as the completion of the rationals.

A :class:`CReal` wraps a regular function ``Fraction -> Fraction`` together
with a memoised integer approximation.  Every operation lifts a uniformly
continuous rational function through :mod:`exact_reals.completion`, and
every input is compressed first so that intermediate rationals stay small.
"""

import enum
from contextlib import contextmanager
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

from . import completion as cpl
from .completion import UniformMap, const_modulus, identity_modulus
from .rational import _coprime, approx, as_rational, round_nearest

__all__ = [
    "CReal",
    "SeparationError",
    "DomainError",
    "Ordering",
    "DEFAULT_MAX_HALVINGS",
    "make_real",
    "from_rational",
    "compress",
    "squish",
    "compression",
    "add",
    "sub",
    "negate",
    "translate",
    "scale",
    "mult",
    "abs_real",
    "max_rational",
    "min_rational",
    "prove_nonzero",
    "recip_with_witness",
    "recip",
    "divide",
    "power_int",
    "poly_eval",
    "sum_list",
    "compare_approx",
    "bound",
]

DEFAULT_MAX_HALVINGS = 5000

_ONE = Fraction(1)
_HALF = Fraction(1, 2)


class SeparationError(ArithmeticError):
    """A real could not be shown apart from zero within the halving cap."""


class DomainError(ValueError):
    """An argument lies outside the domain of a partial function."""


class Ordering(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    INDISTINGUISHABLE = "indistinguishable"


# answers remembered per real; queries repeat when a value is shared
_MEMO_SIZE = 64


class CReal:
    """A constructive real number.

    Calling a ``CReal`` with a gauge ``eps`` returns a rational within
    ``eps`` of the number.  Use :func:`make_real` or :func:`from_rational`
    to construct one.
    """

    __slots__ = ("_raw", "_int_approx", "_memo")

    def __init__(self, raw: cpl.Approximator):
        self._raw = raw
        self._int_approx: Optional[int] = None
        self._memo: Dict[Tuple[int, int], Fraction] = {}

    @property
    def int_approx(self) -> int:
        """Nearest integer to the answer at gauge 1/2, computed on first use."""
        if self._int_approx is None:
            self._int_approx = round_nearest(self.approximate(_HALF))
        return self._int_approx

    def approximate(self, eps: Fraction) -> Fraction:
        # gauges of 1 or more get the integer approximation, keeping x regular
        if eps.numerator >= eps.denominator:
            return Fraction(self.int_approx)
        # keyed on the integer pair: hashing a Fraction costs a modular inverse
        key = (eps.numerator, eps.denominator)
        memo = self._memo
        value = memo.get(key)
        if value is None:
            if len(memo) >= _MEMO_SIZE:
                memo.clear()
            value = memo[key] = self._raw(eps)
        return value

    __call__ = approximate

    def __repr__(self):
        return f"<CReal ~{self.int_approx}>"

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _coerce(other))

    def __rsub__(self, other):
        return sub(_coerce(other), self)

    def __mul__(self, other):
        if isinstance(other, CReal):
            return mult(self, other)
        return scale(as_rational(other), self)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, CReal):
            return divide(self, other)
        return scale(1 / as_rational(other), self)

    def __rtruediv__(self, other):
        return divide(_coerce(other), self)

    def __neg__(self):
        return negate(self)

    def __abs__(self):
        return abs_real(self)

    def __pow__(self, n):
        if isinstance(n, int) and n >= 0:
            return power_int(self, n)
        return NotImplemented


def _coerce(value) -> CReal:
    return value if isinstance(value, CReal) else from_rational(as_rational(value))


def make_real(x: cpl.Approximator) -> CReal:
    """Package a regular function as a :class:`CReal`.

    Queries at gauges of 1 or more are answered with the integer
    approximation, which keeps the function regular.
    """
    return CReal(x)


def from_rational(a) -> CReal:
    return make_real(cpl.unit(as_rational(a)))


def bound(x: CReal) -> Fraction:
    """A rational ``c`` with ``|x| <= c``."""
    return Fraction(abs(x.int_approx) + 1)


# Compression

_compress_enabled = True


@contextmanager
def compression(enabled: bool):
    """Temporarily switch input compression on or off (testing aid).

    The setting is read when an operation is constructed, not when it is
    queried.
    """
    global _compress_enabled
    saved = _compress_enabled
    _compress_enabled = enabled
    try:
        yield
    finally:
        _compress_enabled = saved


def _halve(eps: Fraction) -> Fraction:
    n, d = eps.numerator, eps.denominator
    return _coprime(n >> 1, d) if n & 1 == 0 else _coprime(n, d << 1)


def compress(x: cpl.Approximator) -> cpl.Approximator:
    """Equivalent approximator whose outputs are the simplest rationals allowed."""
    def compressed(eps):
        half = _halve(eps)
        return approx(x(half), half)
    return compressed


def squish(x: CReal) -> cpl.Approximator:
    return compress(x.approximate) if _compress_enabled else x.approximate


def lift(f: UniformMap, x: CReal) -> CReal:
    return make_real(cpl.map(f, squish(x)))


def lift_bind(f: UniformMap, x: CReal) -> CReal:
    return make_real(cpl.bind(f, squish(x)))


def lift2(f: UniformMap, x: CReal, y: CReal) -> CReal:
    return make_real(cpl.map2(f, squish(x), squish(y)))


# Linear and order maps

def clamp(lo: Optional[Fraction], hi: Optional[Fraction]):
    """Projection onto ``[lo, hi]``; either end may be open (``None``)."""
    # compare by cross-multiplication, skipping Fraction's operator dispatch
    if lo is not None:
        lo_n, lo_d = lo.numerator, lo.denominator
    if hi is not None:
        hi_n, hi_d = hi.numerator, hi.denominator

    def clamped(b):
        n, d = b.numerator, b.denominator
        if lo is not None and n * lo_d < lo_n * d:
            return lo
        if hi is not None and n * hi_d > hi_n * d:
            return hi
        return b
    return clamped


NEGATE = UniformMap(identity_modulus, lambda b: -b, "Q")
ABS = UniformMap(identity_modulus, abs, "Q")


def translate_map(a: Fraction) -> UniformMap:
    return UniformMap(identity_modulus, lambda b: a + b, "Q")


def scale_map(a: Fraction) -> UniformMap:
    if a == 0:
        return UniformMap(const_modulus, lambda b: Fraction(0), "Q")
    inv = 1 / abs(a)
    return UniformMap(lambda eps: eps * inv, lambda b: a * b, "Q")


def max_map(a: Fraction) -> UniformMap:
    return UniformMap(identity_modulus, clamp(a, None), f"Q -> [{a}, inf)")


def min_map(a: Fraction) -> UniformMap:
    return UniformMap(identity_modulus, clamp(None, a), f"Q -> (-inf, {a}]")


def negate(x: CReal) -> CReal:
    return lift(NEGATE, x)


def translate(a, x: CReal) -> CReal:
    return lift(translate_map(as_rational(a)), x)


def scale(a, x: CReal) -> CReal:
    a = as_rational(a)
    if a == 0:
        return from_rational(0)
    return lift(scale_map(a), x)


def abs_real(x: CReal) -> CReal:
    return lift(ABS, x)


def max_rational(a, x: CReal) -> CReal:
    return lift(max_map(as_rational(a)), x)


def min_rational(a, x: CReal) -> CReal:
    return lift(min_map(as_rational(a)), x)


# Binary arithmetic

PLUS = UniformMap(identity_modulus, translate_map, "Q -> Q -> Q")


def add(x: CReal, y: CReal) -> CReal:
    return lift2(PLUS, x, y)


def sub(x: CReal, y: CReal) -> CReal:
    return add(x, negate(y))


def mult_map(c: Fraction) -> UniformMap:
    """``a -> (b -> a*b)`` with ``b`` clamped to ``[-c, c]``."""
    inv_c = 1 / c
    keep = clamp(-c, c)

    def partial(a):
        if a == 0:
            return UniformMap(const_modulus, lambda b: Fraction(0), f"[-{c}, {c}]")
        inv_a = 1 / abs(a)
        return UniformMap(lambda eps: eps * inv_a, lambda b: a * keep(b), f"[-{c}, {c}]")

    return UniformMap(lambda eps: eps * inv_c, partial, f"Q -> [-{c}, {c}] -> Q")


def mult(x: CReal, y: CReal) -> CReal:
    """Product ``x*y``, computed as ``y*x`` with ``x`` clamped by its bound."""
    return lift2(mult_map(bound(x)), y, x)


# Apartness and reciprocal

def prove_nonzero(x: CReal, max_halvings: Optional[int] = None) -> Fraction:
    """Find a rational ``t`` with ``0 < |t| <= |x|`` and the sign of ``x``.

    Gauges 1, 1/2, 1/4, ... are tried in turn.  Without ``max_halvings``
    this never returns when ``x`` is zero.
    """
    g = _ONE
    k = 0
    while True:
        r = x(g)
        high = r + g
        if high < 0:
            return high
        low = r - g
        if low > 0:
            return low
        if max_halvings is not None and k >= max_halvings:
            raise SeparationError(
                f"cannot separate from zero at precision 2^-{k}")
        g *= _HALF
        k += 1


def recip_map(t: Fraction) -> UniformMap:
    """Reciprocal on ``[t, inf)`` (``t > 0``) or ``(-inf, t]`` (``t < 0``)."""
    if t == 0:
        raise ValueError("witness must be nonzero")
    t2 = t * t
    if t > 0:
        return UniformMap(lambda eps: eps * t2, lambda b: 1 / (b if b > t else t),
                          f"[{t}, inf)")
    return UniformMap(lambda eps: eps * t2, lambda b: 1 / (b if b < t else t),
                      f"(-inf, {t}]")


def recip_with_witness(x: CReal, t) -> CReal:
    return lift(recip_map(as_rational(t)), x)


def recip(x: CReal, max_halvings: Optional[int] = DEFAULT_MAX_HALVINGS) -> CReal:
    return recip_with_witness(x, prove_nonzero(x, max_halvings))


def divide(x: CReal, y: CReal, max_halvings: Optional[int] = DEFAULT_MAX_HALVINGS) -> CReal:
    return mult(x, recip(y, max_halvings))


# Powers and polynomials

def power_map(c: Fraction, n: int) -> UniformMap:
    """``b -> b**n`` on ``[-c, c]``."""
    if n < 0:
        raise ValueError("exponent must be non-negative")
    if n == 0:
        return UniformMap(const_modulus, lambda b: _ONE, "Q")
    keep = clamp(-c, c)
    # 1 / (n c^(n-1)), normalised once
    inv_slope = Fraction(c.denominator ** (n - 1), n * c.numerator ** (n - 1))
    if n == 2:
        def apply(b):
            b = keep(b)
            # squares of coprime pairs stay coprime
            return _coprime(b.numerator ** 2, b.denominator ** 2)
    else:
        def apply(b):
            return keep(b) ** n
    return UniformMap(lambda eps: eps * inv_slope, apply, f"[-{c}, {c}]")


def power_int(x: CReal, n: int, c: Optional[Fraction] = None) -> CReal:
    """``x**n``.  ``c`` may supply a known bound ``|x| <= c`` in place of
    the one read off the integer approximation."""
    return lift(power_map(bound(x) if c is None else _positive(c), n), x)


def horner(p: Sequence[Fraction], b: Fraction) -> Fraction:
    acc = Fraction(0)
    for coeff in reversed(p):
        acc = acc * b + coeff
    return acc


def derivative(p: Sequence[Fraction]) -> "list[Fraction]":
    return [i * coeff for i, coeff in enumerate(p) if i]


def poly_map(c: Fraction, p: Sequence[Fraction]) -> UniformMap:
    """Polynomial with coefficients ``p`` (constant first) on ``[-c, c]``."""
    p = [as_rational(coeff) for coeff in p]
    if not p:
        return UniformMap(const_modulus, lambda b: Fraction(0), "Q")
    max_slope = horner([abs(d) for d in derivative(p)], max(_ONE, c))
    if max_slope == 0:
        p0 = p[0]
        return UniformMap(const_modulus, lambda b: p0, "Q")
    keep = clamp(-c, c)
    inv_slope = 1 / max_slope
    return UniformMap(lambda eps: eps * inv_slope, lambda b: horner(p, keep(b)),
                      f"[-{c}, {c}]")


def poly_eval(p: Sequence, x: CReal, c: Optional[Fraction] = None) -> CReal:
    """``p(x)``, optionally with a known bound ``|x| <= c`` (see :func:`power_int`)."""
    return lift(poly_map(bound(x) if c is None else _positive(c), p), x)


def _positive(c) -> Fraction:
    c = as_rational(c)
    if c <= 0:
        raise ValueError("bound must be positive")
    return c


# Sums and comparison

def sum_list(xs: Iterable[CReal]) -> CReal:
    """Sum with every term queried at ``eps/n`` rather than by nested addition."""
    approximators = [squish(x) for x in xs]
    if not approximators:
        return from_rational(0)
    inv_n = Fraction(1, len(approximators))

    def summed(eps):
        share = eps * inv_n
        return sum((x(share) for x in approximators), Fraction(0))

    return make_real(summed)


def compare_approx(x: CReal, y: CReal, eps) -> Ordering:
    """Decide ``x < y`` or ``x > y`` when the gap is visible at accuracy ``eps``."""
    half = as_rational(eps) * _HALF
    r = sub(x, y)(half)
    if r + half < 0:
        return Ordering.LESS
    if r - half > 0:
        return Ordering.GREATER
    return Ordering.INDISTINGUISHABLE
