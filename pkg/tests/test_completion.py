from fractions import Fraction

import pytest

from exact_reals import completion as cpl
from exact_reals import creal as cr
from exact_reals.completion import (
    DEFAULT_SCHEDULE, IDENTITY, GaugeSchedule, UniformMap, ap, approx_equal_check, bind,
    compose_uniform, is_regular, join, map2, unit, within_ball,
)
from conftest import random_regular, random_uniform_map, wobbly

F = Fraction


def lifted_map(f: UniformMap) -> UniformMap:
    """``map(f)`` viewed as a uniform map on approximators (modulus of ``f``)."""
    return UniformMap(f.modulus, lambda x: cpl.map(f, x))


UNIT_MAP = UniformMap(cpl.identity_modulus, unit)
JOIN_MAP = UniformMap(cpl.identity_modulus, join)


def shift_by(r):
    """``a -> a + r`` as a map into approximators; an isometry."""
    return UniformMap(cpl.identity_modulus, lambda a: (lambda eps: a + r(eps)))


def test_default_schedule():
    gs = list(DEFAULT_SCHEDULE)
    assert gs[0] == 1 and gs[-1] == F(1, 2 ** 20) and len(gs) == 21
    with pytest.raises(ValueError):
        GaugeSchedule((F(1), F(1)))
    with pytest.raises(ValueError):
        GaugeSchedule((F(1), F(0)))


def test_unit_examples():
    assert unit(F(1, 3))(F(1, 10 ** 6)) == F(1, 3)
    assert unit(F(0))(F(1)) == 0
    x = unit(F(22, 7))
    assert x(F(1, 2)) == x(F(1, 1000))


def test_join_examples():
    q = F(5, 7)
    assert join(unit(unit(q)))(F(1, 9)) == q
    x = wobbly(F(1, 3), 7)
    for eps in DEFAULT_SCHEDULE:
        assert join(unit(x))(eps) == x(eps / 2)

    # a doubly nested approximator that records the gauges it was asked for
    def xxx(e1):
        return lambda e2: (lambda e3: (e1, e2, e3))

    eps = F(1, 8)
    assert join(join(xxx))(eps) == (eps / 4, eps / 4, eps / 2)


def test_map_examples():
    x = wobbly(F(2, 3), 1)
    for eps in DEFAULT_SCHEDULE:
        assert cpl.map(IDENTITY, x)(eps) == x(eps)
        assert cpl.map(cr.NEGATE, unit(F(5)))(eps) == -5
    f = cr.scale_map(F(3))
    assert approx_equal_check(cpl.map(f, unit(F(2))), unit(f.apply(F(2))))


def test_bind_examples(rng):
    x = random_regular(rng)
    assert approx_equal_check(bind(UNIT_MAP, x), x)
    f = shift_by(wobbly(F(1, 9), 3))
    a = F(4, 5)
    assert approx_equal_check(bind(f, unit(a)), f.apply(a))
    const = UniformMap(cpl.const_modulus, lambda _: unit(F(3, 4)))
    assert all(bind(const, x)(eps) == F(3, 4) for eps in DEFAULT_SCHEDULE)


def test_ap_examples(rng):
    x = random_regular(rng)
    g = cr.translate_map(F(1, 3))
    for eps in DEFAULT_SCHEDULE:
        assert ap(unit(g), x)(eps) == cpl.map(g, x)(eps / 2)
    assert approx_equal_check(ap(unit(IDENTITY), x), x)


def test_ap_is_within_eps_of_map_at_eps(rng):
    # f(eps) = translate by a wobbly value; f is regular in the sup norm
    r = wobbly(F(2, 7), 11)
    f = lambda eps: cr.translate_map(r(eps))
    for _ in range(20):
        x = random_regular(rng)
        for eps in DEFAULT_SCHEDULE:
            assert within_ball(ap(f, x), cpl.map(f(eps), x), eps)


def test_map2_examples(rng):
    a, b = F(1, 3), F(-7, 2)
    assert approx_equal_check(map2(cr.PLUS, unit(a), unit(b)), unit(a + b))
    x = random_regular(rng)
    assert approx_equal_check(map2(cr.PLUS, x, unit(F(0))), x)
    y = random_regular(rng)
    f = cr.mult_map(F(5))
    for eps in DEFAULT_SCHEDULE:
        g = cpl.map(f, x)(eps / 2)
        assert map2(f, x, y)(eps) == cpl.map(g, y)(eps / 2)
        assert map2(f, x, y)(eps) == ap(cpl.map(f, x), y)(eps)


def test_compose_uniform_examples():
    f = cr.scale_map(F(3))
    for eps in DEFAULT_SCHEDULE:
        assert compose_uniform(IDENTITY, f).modulus(eps) == f.modulus(eps)
        assert compose_uniform(f, IDENTITY).modulus(eps) == f.modulus(eps)
    for a in (F(0), F(-2, 3), F(9)):
        assert compose_uniform(IDENTITY, f).apply(a) == f.apply(a)
        assert compose_uniform(f, IDENTITY).apply(a) == f.apply(a)
    six = compose_uniform(cr.scale_map(F(2)), cr.scale_map(F(3)))
    assert six.modulus(F(1, 5)) == F(1, 30)
    assert six.apply(F(1, 4)) == F(3, 2)


def test_approx_equal_check_examples(rng):
    q = F(3, 11)
    assert approx_equal_check(unit(q), unit(q), GaugeSchedule.halving(3))
    assert not approx_equal_check(unit(F(0)), unit(F(5)))
    for _ in range(10):
        x = random_regular(rng)
        assert approx_equal_check(join(unit(x)), x)


def test_regularity_probe_detects_irregular():
    assert is_regular(unit(F(1)))
    assert not is_regular(lambda eps: F(0) if eps > F(1, 2) else F(3))
    assert cpl.regularity_violations(lambda eps: 1 / eps, GaugeSchedule.halving(2))


def test_monad_laws_small_sample(rng):
    for _ in range(25):
        x = random_regular(rng)
        f, g = random_uniform_map(rng), random_uniform_map(rng)
        a = F(rng.randint(-99, 99), rng.randint(1, 99))
        xx = cpl.map(shift_by(random_regular(rng)), x)
        xxx = cpl.map(lifted_map(shift_by(random_regular(rng))), xx)
        assert approx_equal_check(cpl.map(IDENTITY, x), x)
        assert approx_equal_check(cpl.map(compose_uniform(f, g), x), cpl.map(f, cpl.map(g, x)))
        assert approx_equal_check(cpl.map(f, unit(a)), unit(f.apply(a)))
        assert approx_equal_check(cpl.map(f, join(xx)), join(cpl.map(lifted_map(f), xx)))
        assert approx_equal_check(join(unit(x)), x)
        assert approx_equal_check(join(cpl.map(UNIT_MAP, x)), x)
        assert approx_equal_check(join(cpl.map(JOIN_MAP, xxx)), join(join(xxx)))


def test_outputs_are_regular(rng):
    for _ in range(25):
        x, y = random_regular(rng), random_regular(rng)
        f = random_uniform_map(rng)
        for z in (unit(F(1, 7)), join(unit(x)), cpl.map(f, x), bind(UNIT_MAP, x),
                  ap(unit(f), x), map2(cr.PLUS, x, y), map2(cr.mult_map(F(11)), x, y)):
            assert is_regular(z)
