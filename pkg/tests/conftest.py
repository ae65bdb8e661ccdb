import hashlib
import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from exact_reals import completion as cpl
from exact_reals import creal as cr


def rationals(max_num=10 ** 6, max_den=10 ** 4, min_value=None, max_value=None):
    """Hypothesis strategy for exact rationals."""
    return st.fractions(min_value=min_value, max_value=max_value, max_denominator=max_den).filter(
        lambda q: abs(q.numerator) <= max_num)


def random_rational(rng: random.Random, lo=-10, hi=10, max_den=1000) -> Fraction:
    d = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * d, hi * d), d)


def _jitter(seed: int, eps: Fraction) -> Fraction:
    """A deterministic value in [-1, 1] that depends on the gauge."""
    h = hashlib.blake2b(f"{seed}:{eps.numerator}/{eps.denominator}".encode(), digest_size=8)
    n = int.from_bytes(h.digest(), "big")
    return Fraction(n % 20001 - 10000, 10000)


def wobbly(value: Fraction, seed: int) -> cpl.Approximator:
    """A regular function for ``value`` whose answers move around within eps."""
    return lambda eps: value + eps * _jitter(seed, eps)


def truncating(value: Fraction) -> cpl.Approximator:
    """Round ``value`` down to a multiple of ``eps``."""
    return lambda eps: (value // eps) * eps


def random_regular(rng: random.Random) -> cpl.Approximator:
    """A randomly built regular ``Fraction`` approximator."""
    q = random_rational(rng)
    kind = rng.randrange(6)
    if kind == 0:
        return cpl.unit(q)
    if kind == 1:
        return wobbly(q, rng.getrandbits(32))
    if kind == 2:
        return truncating(q)
    if kind == 3:
        return cr.compress(wobbly(q, rng.getrandbits(32)))
    x = cr.make_real(wobbly(q, rng.getrandbits(32)))
    y = cr.make_real(truncating(random_rational(rng)))
    if kind == 4:
        return cr.add(x, y).approximate
    return cr.mult(x, y).approximate


def random_uniform_map(rng: random.Random) -> cpl.UniformMap:
    """A random uniformly continuous map on Q."""
    kind = rng.randrange(5)
    a = random_rational(rng)
    if kind == 0:
        return cr.translate_map(a)
    if kind == 1:
        return cr.scale_map(a)
    if kind == 2:
        return cr.NEGATE
    if kind == 3:
        return cr.ABS
    return cr.max_map(a)


@pytest.fixture
def rng(request):
    return random.Random(request.node.nodeid)


# One PASS/FAIL line per acceptance criterion in the terminal summary.

_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_ac" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.failed:
        _acceptance[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        terminalreporter.write_line(f"{_acceptance[name]:4} {name}")
