"""Benchmark workloads: cosines of Fibonacci ratios, plus a quick smoke run."""

import hashlib
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from .creal import CReal, from_rational
from .elementary import cos_real, pi
from .output import format_digits


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def fibonacci_ratio(n: int) -> Fraction:
    """``F(n) / F(n+1)``, exactly."""
    return Fraction(fibonacci(n), fibonacci(n + 1))


@dataclass
class BenchResult:
    name: str
    digits: int
    seconds: float
    output: str

    @property
    def checksum(self) -> str:
        return hashlib.sha256(self.output.encode()).hexdigest()[:16]

    def line(self) -> str:
        return f"{self.name:<24} {self.digits:>6} digits {self.seconds:10.3f} s  sha256:{self.checksum}"


def _cos_fib(n: int) -> Callable[[], CReal]:
    ratio = fibonacci_ratio(n)
    return lambda: cos_real(from_rational(ratio))


SUITES: Dict[str, List[Tuple[str, Callable[[], CReal]]]] = {
    "table1": [("cos(F4/F5)", _cos_fib(4)), ("cos(F2394/F2395)", _cos_fib(2394))],
    "smoke": [("pi", pi)],
}


def run_benchmarks(suite: str, digits: int) -> List[BenchResult]:
    """Run each problem of ``suite`` in turn; timings exclude the exact ratios."""
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    results = []
    for name, build in SUITES[suite]:
        start = time.perf_counter()
        out = str(format_digits(build(), digits))
        results.append(BenchResult(name, digits, time.perf_counter() - start, out))
    return results
