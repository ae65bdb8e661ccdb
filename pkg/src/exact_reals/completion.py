"""The completion monad over a metric space.

An *approximator* (regular function) is any callable taking a gauge ``eps``
and returning a point within ``eps`` of the value it represents, so that
``|x(e1) - x(e2)| <= e1 + e2``.  Uniformly continuous maps carry an explicit
modulus telling how precisely the input must be known to get the output
within a requested accuracy.  The monad operations lift such maps to
approximators.

Only ``X = Fraction`` (and clamped subsets of it) is used at runtime; the
operations themselves are generic.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Generic, Iterable, Sequence, Tuple, TypeVar

A = TypeVar("A")
B = TypeVar("B")
C = TypeVar("C")
X = TypeVar("X")

Gauge = Fraction
Approximator = Callable[[Gauge], X]
Modulus = Callable[[Gauge], Gauge]

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class UniformMap(Generic[A, B]):
    """A uniformly continuous map packaged with its modulus of continuity.

    ``modulus(eps)`` is an input accuracy sufficient for ``apply`` to be
    accurate to ``eps``, for inputs inside the domain described by
    ``domain``.
    """

    modulus: Modulus
    apply: Callable[[A], B]
    domain: str = field(default="Q", compare=False)

    def __call__(self, a: A) -> B:
        return self.apply(a)


def identity_modulus(eps: Gauge) -> Gauge:
    return eps


def const_modulus(eps: Gauge) -> Gauge:
    """Modulus for constant maps; any positive value works."""
    return Fraction(1)


IDENTITY: UniformMap = UniformMap(identity_modulus, lambda a: a, "Q")


def unit(a: X) -> Approximator:
    """Inject a point as the constant approximator."""
    return lambda eps: a


def join(x: Approximator) -> Approximator:
    """Collapse an approximator of approximators by halving the gauge."""
    def joined(eps):
        half = eps * _HALF
        return x(half)(half)
    return joined


def map(f: UniformMap, x: Approximator) -> Approximator:  # noqa: A001
    """Lift ``f`` by querying ``x`` at the accuracy its modulus demands."""
    modulus, apply = f.modulus, f.apply
    return lambda eps: apply(x(modulus(eps)))


def bind(f: UniformMap, x: Approximator) -> Approximator:
    """``join(map(f, x))`` for maps whose values are themselves approximators."""
    return join(map(f, x))


def ap(f: Approximator, x: Approximator) -> Approximator:
    """Apply an approximator of uniform maps to an approximator of points."""
    def applied(eps):
        half = eps * _HALF
        return map(f(half), x)(half)
    return applied


def map2(f: UniformMap, x: Approximator, y: Approximator) -> Approximator:
    """Lift a curried binary map ``f(a)(b)``.

    Evaluated directly rather than as ``ap(map(f, x), y)``: the partially
    applied map is built from ``x`` at ``eps/2`` and then mapped over ``y``
    at ``eps/2``.
    """
    outer = map(f, x)

    def lifted(eps):
        half = eps * _HALF
        inner = outer(half)
        return inner.apply(y(inner.modulus(half)))
    return lifted


def compose_uniform(g: UniformMap, f: UniformMap) -> UniformMap:
    """``g`` after ``f``; the modulus is ``f.modulus`` after ``g.modulus``."""
    gm, fm, ga, fa = g.modulus, f.modulus, g.apply, f.apply
    return UniformMap(lambda eps: fm(gm(eps)), lambda a: ga(fa(a)), f.domain)


# Finite probes of universally quantified properties (test support).

@dataclass(frozen=True)
class GaugeSchedule:
    """A finite, strictly decreasing list of gauges used to probe properties."""

    gauges: Tuple[Fraction, ...] = tuple(Fraction(1, 2 ** k) for k in range(21))

    def __post_init__(self):
        gs = self.gauges
        if not gs or any(g <= 0 for g in gs):
            raise ValueError("gauges must be strictly positive")
        if any(a <= b for a, b in zip(gs, gs[1:])):
            raise ValueError("gauges must be strictly decreasing")

    def __iter__(self):
        return iter(self.gauges)

    def __len__(self):
        return len(self.gauges)

    @classmethod
    def halving(cls, depth: int, start: Fraction = Fraction(1)) -> "GaugeSchedule":
        return cls(tuple(start / 2 ** k for k in range(depth + 1)))


DEFAULT_SCHEDULE = GaugeSchedule()


def regularity_violations(x: Approximator, schedule: Iterable[Fraction] = DEFAULT_SCHEDULE
                          ) -> "list[tuple[Fraction, Fraction]]":
    """Gauge pairs at which ``|x(e1) - x(e2)| <= e1 + e2`` fails."""
    gs = list(schedule)
    values = {g: x(g) for g in gs}
    return [(e1, e2) for e1, e2 in combinations(gs, 2)
            if abs(values[e1] - values[e2]) > e1 + e2]


def is_regular(x: Approximator, schedule: Iterable[Fraction] = DEFAULT_SCHEDULE) -> bool:
    return not regularity_violations(x, schedule)


def approx_equal_check(x: Approximator, y: Approximator,
                       schedule: Sequence[Fraction] = DEFAULT_SCHEDULE) -> bool:
    """Sampled equivalence: ``|x(eps) - y(eps)| <= 2 eps`` on every gauge.

    Sound for refuting equivalence, incomplete for proving it.
    """
    return all(abs(x(eps) - y(eps)) <= 2 * eps for eps in schedule)


def within_ball(x: Approximator, y: Approximator, radius: Fraction,
                schedule: Sequence[Fraction] = DEFAULT_SCHEDULE) -> bool:
    """Sampled closed-ball test: ``|x(d) - y(d)| <= radius + 2 d`` on every gauge."""
    return all(abs(x(d) - y(d)) <= radius + 2 * d for d in schedule)
