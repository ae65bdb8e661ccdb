"""Rational arithmetic helpers used by every other module.

Rationals are plain :class:`fractions.Fraction` values, which are always
kept in lowest terms with a positive denominator.  A *gauge* is a strictly
positive rational requested accuracy.
"""

from fractions import Fraction
from itertools import count
from typing import Iterator, Union

__all__ = [
    "Rational",
    "Gauge",
    "as_rational",
    "gauge",
    "simplest_in_interval",
    "approx",
    "round_nearest",
    "powers",
    "factorials",
    "term_streams",
]

Rational = Fraction
Gauge = Fraction

RationalLike = Union[int, Fraction, str]

if hasattr(Fraction, "_from_coprime_ints"):  # Python >= 3.12
    _coprime = Fraction._from_coprime_ints
else:
    def _coprime(n: int, d: int) -> Fraction:
        return Fraction(n, d, _normalize=False)


_ZERO = Fraction(0)


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Floats are refused: they would smuggle binary rounding into an exact
    pipeline.
    """
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or string")
    return value if isinstance(value, Fraction) else Fraction(value)


def gauge(value: RationalLike) -> Fraction:
    """Return ``value`` as a gauge, rejecting non-positive values."""
    g = as_rational(value)
    if g <= 0:
        raise ValueError(f"gauge must be strictly positive, got {g}")
    return g


def _simplest_positive(ln: int, ld: int, hn: int, hd: int) -> Fraction:
    # 0 < ln/ld <= hn/hd.  Continued-fraction walk down the Stern-Brocot tree;
    # iterative because 1000-digit operands need thousands of steps.
    # Convergent recurrence: p_k = a_k p_{k-1} + p_{k-2}.
    p0, q0, p1, q1 = 0, 1, 1, 0
    while True:
        fl = ln // ld
        if fl * ld == ln:
            a = fl
            break
        if (fl + 1) * hd <= hn:
            a = fl + 1
            break
        p0, q0, p1, q1 = p1, q1, fl * p1 + p0, fl * q1 + q0
        # lo' = 1/(hi - fl), hi' = 1/(lo - fl)
        ln, ld, hn, hd = hd, hn - fl * hd, ld, ln - fl * ld
    p, q = a * p1 + p0, a * q1 + q0
    return _coprime(p, q)


def simplest_in_interval(lo: RationalLike, hi: RationalLike) -> Fraction:
    """Return the simplest rational in the closed interval ``[lo, hi]``.

    "Simplest" means smallest denominator, ties broken by smallest absolute
    numerator.  Endpoints are admissible.

    >>> simplest_in_interval(Fraction(313959, 100000), Fraction(314359, 100000))
    Fraction(22, 7)
    """
    lo, hi = as_rational(lo), as_rational(hi)
    if lo > hi:
        raise ValueError(f"empty interval: lo={lo} > hi={hi}")
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -_simplest_positive(-hi.numerator, hi.denominator,
                                   -lo.numerator, lo.denominator)
    return _simplest_positive(lo.numerator, lo.denominator,
                              hi.numerator, hi.denominator)


def approx(a: Fraction, eps: Fraction) -> Fraction:
    """Simplest rational within ``eps`` of ``a``."""
    # same as simplest_in_interval(a - eps, a + eps), on integers: this sits
    # on the hot path of every compressed query
    n, d, en, ed = a.numerator, a.denominator, eps.numerator, eps.denominator
    centre, spread, den = n * ed, en * d, d * ed
    lo, hi = centre - spread, centre + spread
    if lo <= 0 <= hi:
        return _ZERO
    if hi < 0:
        return -_simplest_positive(-hi, den, -lo, den)
    return _simplest_positive(lo, den, hi, den)


def round_nearest(a: Fraction) -> int:
    """Nearest integer to ``a``; exact halves go to the even neighbour."""
    # round() on a Fraction is exact and rounds half to even.
    return round(a)


def powers(x: Fraction) -> Iterator[Fraction]:
    """Yield ``1, x, x**2, ...``, one multiplication per term."""
    n, d = x.numerator, x.denominator
    pn, pd = 1, 1
    while True:
        # numerator and denominator stay coprime, so skip normalisation
        yield _coprime(pn, pd)
        pn *= n
        pd *= d


def factorials() -> Iterator[int]:
    """Yield ``0!, 1!, 2!, ...``."""
    f = 1
    for i in count(1):
        yield f
        f *= i


def term_streams(x: Fraction) -> "tuple[Iterator[Fraction], Iterator[int]]":
    """Paired power and factorial streams for building Taylor terms."""
    return powers(x), factorials()
