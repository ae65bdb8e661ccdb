"""Elementary functions on :class:`~exact_reals.creal.CReal`.

Each function is first defined on rationals by a power series on a small
interval plus range-reduction identities, then lifted to reals with ``bind``
and an explicit modulus of continuity.  Functions that are only locally
uniformly continuous (exp, ln, reciprocal) pick a domain containing the
input before lifting.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import count
from typing import Callable, Iterable, Iterator, Optional

from .completion import Approximator, UniformMap, identity_modulus
from .creal import (
    DEFAULT_MAX_HALVINGS,
    CReal,
    DomainError,
    add,
    divide,
    from_rational,
    lift_bind,
    make_real,
    max_rational,
    mult,
    negate,
    poly_eval,
    power_int,
    prove_nonzero,
    recip_with_witness,
    scale,
    sub,
    sum_list,
    translate,
)
from .rational import approx, as_rational, powers

__all__ = [
    "SERIES_RADIUS",
    "alternating_sum",
    "exp_series",
    "sin_series",
    "ln_series",
    "arctan_series",
    "exp_rational",
    "exp_real",
    "exp_map",
    "sin_rational",
    "cos_rational",
    "sin_real",
    "cos_real",
    "ln_rational",
    "ln_map",
    "ln_real_with_witness",
    "ln_real",
    "arctan_rational",
    "arctan_real",
    "pi_scaled",
    "pi",
    "sqrt_iterates",
    "sqrt_rational",
    "sqrt_real",
    "SQRT_MAP",
    "tan",
    "sinh",
    "cosh",
    "tanh",
    "pow_real",
    "arcsin",
    "arccos",
    "arcsinh",
    "arccosh",
    "arctanh",
    "e",
]

#: Arguments of exp and sin are shrunk below this before the series is summed.
SERIES_RADIUS = Fraction(1, 2 ** 51)

_ZERO = Fraction(0)
_ONE = Fraction(1)
_HALF = Fraction(1, 2)


def _check_radius(radius: Fraction) -> Fraction:
    radius = as_rational(radius)
    if not 0 < radius <= _HALF:
        raise ValueError(f"series radius must lie in (0, 1/2], got {radius}")
    return radius


def _reduction_steps(a: Fraction, radius: Fraction, base: int, strict: bool) -> int:
    """How many divisions by ``base`` bring ``|a|`` below ``radius``.

    With ``strict`` the result must end strictly below, otherwise at or below.
    """
    # compare |a| / radius against base**k on integers
    num = abs(a.numerator) * radius.denominator
    den = a.denominator * radius.numerator
    k = 0
    while num > den or (strict and num == den):
        den *= base
        k += 1
    return k


# Series engine

def alternating_sum(terms: Callable[[], Iterable[Fraction]]) -> Approximator:
    """Sum an alternating series with strictly decreasing terms.

    ``terms`` is called afresh for every query.  Terms are added while their
    magnitude exceeds the gauge; the first omitted term bounds the error.
    """
    def summed(eps):
        total = _ZERO
        for t in terms():
            if abs(t) <= eps:
                break
            total += t
        return total
    return summed


def exp_series(a: Fraction) -> Iterator[Fraction]:
    """Taylor terms ``a**i / i!``."""
    t = _ONE
    for i in count(1):
        yield t
        t = t * a / i


def sin_series(a: Fraction) -> Iterator[Fraction]:
    """Terms ``(-1)**i a**(2i+1) / (2i+1)!``."""
    t = a
    a2 = a * a
    for n in count(2, 2):
        yield t
        t = -t * a2 / (n * n + n)


def ln_series(a: Fraction) -> Iterator[Fraction]:
    """Terms ``(-1)**i (a-1)**(i+1) / (i+1)`` of ``ln(a)``."""
    ps = powers(a - 1)
    next(ps)
    for i, p in enumerate(ps, 1):
        yield p / i if i % 2 else -p / i


def arctan_series(a: Fraction) -> Iterator[Fraction]:
    """Terms ``(-1)**i a**(2i+1) / (2i+1)``."""
    p = a
    a2 = a * a
    for i in count():
        yield p / (2 * i + 1) if i % 2 == 0 else -p / (2 * i + 1)
        p *= a2


# exp

def _small_exp(a: Fraction) -> Approximator:
    if abs(a) > _HALF:
        raise ValueError("series only used for |a| <= 1/2")
    # positive arguments: terms shrink by at least half, so the tail is at
    # most twice the first omitted term
    m = 1 if a <= 0 else 2

    def summed(eps):
        total = _ZERO
        for t in exp_series(a):
            if m * abs(t) < eps:
                break
            total += t
        return total
    return summed


def exp_rational(a, radius: Fraction = SERIES_RADIUS) -> CReal:
    """``exp(a)`` by halving ``a`` into the series range and squaring back."""
    a = as_rational(a)
    radius = _check_radius(radius)
    halvings = _reduction_steps(a, radius, 2, strict=False)
    a /= 2 ** halvings
    result = make_real(_small_exp(a))
    # exp(a) <= 1/(1 - a) for 0 <= a < 1; squaring carries the bound upward,
    # which spares each level a full evaluation of the chain beneath it
    upper = _ONE if a <= 0 else 1 / (1 - a)
    for _ in range(halvings):
        result = power_int(result, 2, upper)
        if a > 0:
            upper = _round_up(upper * upper, halvings + 32)
    return result


def _round_up(q: Fraction, bits: int) -> Fraction:
    """A dyadic rational ``>= q`` with about ``bits`` significant bits."""
    shift = q.numerator.bit_length() - q.denominator.bit_length() - bits
    if shift >= 0:
        return Fraction(-(-q.numerator // (q.denominator << shift)) << shift)
    scale = 1 << -shift
    return Fraction(-(-q.numerator * scale // q.denominator), scale)


def exp_map(upper: int, radius: Fraction = SERIES_RADIUS) -> UniformMap:
    """exp on ``(-inf, upper]`` as a map into approximators."""
    if upper <= 0:
        factor = Fraction(2) ** -upper
    else:
        factor = Fraction(1, 3 ** upper)
    top = Fraction(upper)

    def apply(b):
        return exp_rational(b if b < top else top, radius).approximate

    return UniformMap(lambda eps: eps * factor, apply, f"(-inf, {upper}]")


def exp_real(x: CReal, radius: Fraction = SERIES_RADIUS) -> CReal:
    return lift_bind(exp_map(x.int_approx + 1, radius), x)


# sin and cos

_TRIPLE_ANGLE = (0, 3, 0, -4)
_HALF_ANGLE_COS = (1, 0, -2)


def sin_rational(a, radius: Fraction = SERIES_RADIUS) -> CReal:
    """``sin(a)``: divide by 3 until tiny, then undo with the triple-angle identity."""
    a = as_rational(a)
    radius = _check_radius(radius)
    levels = _reduction_steps(a, radius, 3, strict=True)
    a /= 3 ** levels
    result = make_real(alternating_sum(lambda: sin_series(a)))
    for _ in range(levels):
        result = poly_eval(_TRIPLE_ANGLE, result, _ONE)
    return result


def cos_rational(a, radius: Fraction = SERIES_RADIUS) -> CReal:
    return poly_eval(_HALF_ANGLE_COS, sin_rational(as_rational(a) / 2, radius), _ONE)


def _sin_map(radius):
    return UniformMap(identity_modulus, lambda b: sin_rational(b, radius).approximate, "Q")


def _cos_map(radius):
    return UniformMap(identity_modulus, lambda b: cos_rational(b, radius).approximate, "Q")


def _quadrant(x: CReal):
    half_pi = pi_scaled(_HALF)
    # pi/2 > 3/2, so 3/2 is a valid apartness witness
    n = mult(x, recip_with_witness(half_pi, Fraction(3, 2))).int_approx
    return n % 4, sub(x, scale(n, half_pi))


def sin_real(x: CReal, radius: Fraction = SERIES_RADIUS) -> CReal:
    """``sin(x)`` after subtracting the nearest multiple of ``pi/2``."""
    m, y = _quadrant(x)
    radius = _check_radius(radius)
    if m == 0:
        return lift_bind(_sin_map(radius), y)
    if m == 1:
        return lift_bind(_cos_map(radius), y)
    if m == 2:
        return negate(lift_bind(_sin_map(radius), y))
    return negate(lift_bind(_cos_map(radius), y))


def cos_real(x: CReal, radius: Fraction = SERIES_RADIUS) -> CReal:
    m, y = _quadrant(x)
    radius = _check_radius(radius)
    if m == 3:
        return lift_bind(_sin_map(radius), y)
    if m == 0:
        return lift_bind(_cos_map(radius), y)
    if m == 1:
        return negate(lift_bind(_sin_map(radius), y))
    return negate(lift_bind(_cos_map(radius), y))


# ln

def _small_ln(a: Fraction) -> CReal:
    if not 1 <= a <= Fraction(3, 2):
        raise ValueError("series only used for 1 <= a <= 3/2")
    return make_real(alternating_sum(lambda: ln_series(a)))


def _wide_ln(a: Fraction) -> CReal:
    # 1 <= a <= 2
    if a <= Fraction(3, 2):
        return _small_ln(a)
    return add(_small_ln(Fraction(3, 4) * a), _small_ln(Fraction(4, 3)))


def ln_rational(a) -> CReal:
    """Natural logarithm of a positive rational."""
    a = as_rational(a)
    if a <= 0:
        raise DomainError(f"ln of a non-positive rational: {a}")
    if a < 1:
        return negate(ln_rational(1 / a))
    n = 0
    while a > 2:
        a /= 2
        n += 1
    if n == 0:
        return _wide_ln(a)
    return add(_wide_ln(a), scale(n, _wide_ln(Fraction(2))))


def ln_map(t: Fraction) -> UniformMap:
    """ln on ``[t, inf)`` for ``t > 0``."""
    if t <= 0:
        raise DomainError("ln of a negative real")
    return UniformMap(lambda eps: eps * t,
                      lambda b: ln_rational(b if b > t else t).approximate,
                      f"[{t}, inf)")


def ln_real_with_witness(x: CReal, t) -> CReal:
    return lift_bind(ln_map(as_rational(t)), x)


def ln_real(x: CReal, max_halvings: Optional[int] = DEFAULT_MAX_HALVINGS) -> CReal:
    return ln_real_with_witness(x, prove_nonzero(x, max_halvings))


# arctan and pi

def _small_arctan(a: Fraction) -> CReal:
    if not abs(a) < _HALF:
        raise ValueError("series only used for |a| < 1/2")
    return make_real(alternating_sum(lambda: arctan_series(a)))


def arctan_rational(a) -> CReal:
    a = as_rational(a)
    if a <= -_HALF:
        return negate(arctan_rational(-a))
    if a > 2:
        return sub(pi_scaled(_HALF), _small_arctan(1 / a))
    if a >= _HALF:
        return add(pi_scaled(Fraction(1, 4)), _small_arctan((a - 1) / (a + 1)))
    return _small_arctan(a)


ARCTAN_MAP = UniformMap(identity_modulus, lambda b: arctan_rational(b).approximate, "Q")


def arctan_real(x: CReal) -> CReal:
    return lift_bind(ARCTAN_MAP, x)


_PI_TERMS = ((48, Fraction(1, 38)), (80, Fraction(1, 57)),
             (28, Fraction(1, 239)), (96, Fraction(1, 268)))


def pi_scaled(k) -> CReal:
    """``k * pi`` from four small arctangents, each queried at ``eps/4``."""
    return _pi_scaled(as_rational(k))


@lru_cache(maxsize=64)
def _pi_scaled(k: Fraction) -> CReal:
    if k == 0:
        return from_rational(0)
    return sum_list([scale(k * c, _small_arctan(a)) for c, a in _PI_TERMS])


def pi() -> CReal:
    return pi_scaled(1)


# sqrt

def sqrt_iterates(a) -> Iterator["tuple[Fraction, Fraction]"]:
    """Newton iterates ``(b_n, 2**-2**n)`` for ``1 <= a < 4``.

    Each ``b_n`` lies within the paired error of ``sqrt(a)``.
    """
    a = as_rational(a)
    if not 1 <= a < 4:
        raise ValueError("Newton iteration needs 1 <= a < 4")
    b, err = (a + 1) / 2, _HALF
    while True:
        yield b, err
        err_sq = err * err
        b = approx((a + b * b) / (2 * b), err_sq / 2)
        err = err_sq


def sqrt_rational(a) -> CReal:
    a = as_rational(a)
    if a < 0:
        raise DomainError(f"sqrt of a negative rational: {a}")
    if a == 0:
        return from_rational(0)
    m = 0
    while a < 1:
        a *= 4
        m += 1
    while a >= 4:
        a /= 4
        m -= 1

    def newton(eps, a=a):
        for b, err in sqrt_iterates(a):
            if err <= eps:
                return b

    root = make_real(newton)
    return root if m == 0 else scale(Fraction(1, 2) ** m, root)


SQRT_MAP = UniformMap(lambda eps: eps * eps,
                      lambda b: sqrt_rational(b if b > 0 else _ZERO).approximate,
                      "[0, inf)")


def sqrt_real(x: CReal) -> CReal:
    return lift_bind(SQRT_MAP, max_rational(0, x))


# Derived functions

@lru_cache(maxsize=8)
def e(radius: Fraction = SERIES_RADIUS) -> CReal:
    """Euler's number, built once per series radius."""
    return exp_rational(1, radius)


def tan(x: CReal, radius=SERIES_RADIUS, max_halvings=DEFAULT_MAX_HALVINGS) -> CReal:
    return divide(sin_real(x, radius), cos_real(x, radius), max_halvings)


def sinh(x: CReal, radius=SERIES_RADIUS) -> CReal:
    return scale(_HALF, sub(exp_real(x, radius), exp_real(negate(x), radius)))


def cosh(x: CReal, radius=SERIES_RADIUS) -> CReal:
    return scale(_HALF, add(exp_real(x, radius), exp_real(negate(x), radius)))


def tanh(x: CReal, radius=SERIES_RADIUS) -> CReal:
    """``1 - 2/(exp(2x) + 1)``: one exponential instead of four."""
    # exp(2x) + 1 > 1 everywhere
    grown = translate(1, exp_real(scale(2, x), radius))
    return translate(1, scale(-2, recip_with_witness(grown, _ONE)))


def pow_real(x: CReal, y: CReal, radius=SERIES_RADIUS,
             max_halvings=DEFAULT_MAX_HALVINGS) -> CReal:
    """``x**y = exp(y ln x)`` for positive ``x``."""
    return exp_real(mult(y, ln_real(x, max_halvings)), radius)


def _one_minus_square(x: CReal) -> CReal:
    return translate(1, negate(power_int(x, 2)))


def arcsin(x: CReal, max_halvings=DEFAULT_MAX_HALVINGS) -> CReal:
    """Defined for ``|x| < 1``; outside that range the result is unspecified."""
    return arctan_real(divide(x, sqrt_real(_one_minus_square(x)), max_halvings))


def arccos(x: CReal, max_halvings=DEFAULT_MAX_HALVINGS) -> CReal:
    return sub(pi_scaled(_HALF), arcsin(x, max_halvings))


def arcsinh(x: CReal, max_halvings=DEFAULT_MAX_HALVINGS) -> CReal:
    return ln_real(add(x, sqrt_real(translate(1, power_int(x, 2)))), max_halvings)


def arccosh(x: CReal, max_halvings=DEFAULT_MAX_HALVINGS) -> CReal:
    """Defined for ``x >= 1``.  Below 1 the square root clamps to 0, so the
    answer is meaningless there; callers are expected to check the domain."""
    return ln_real(add(x, sqrt_real(translate(-1, power_int(x, 2)))), max_halvings)


def arctanh(x: CReal, max_halvings=DEFAULT_MAX_HALVINGS) -> CReal:
    ratio = divide(translate(1, x), translate(1, negate(x)), max_halvings)
    return scale(_HALF, ln_real(ratio, max_halvings))
