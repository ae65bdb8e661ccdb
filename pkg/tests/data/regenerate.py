"""Regenerate the frozen oracle digits and CLI goldens.

Reference digits come from mpmath, which shares no code with exact_reals.
Golden CLI outputs are recorded from the current build and accepted only if
they lie within one final unit of the mpmath value.

    python tests/data/regenerate.py
"""

import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import mpmath

HERE = Path(__file__).parent
GUARD = 12


def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def truncated(value, digits):
    """Decimal string of ``value`` carrying well over ``digits`` places."""
    with mpmath.workdps(digits + 40):
        return mpmath.nstr(value, digits + 30, strip_zeros=False, min_fixed=-mpmath.inf,
                           max_fixed=mpmath.inf)


def oracle_values():
    mpmath.mp.dps = 1200
    q = lambda n, d: mpmath.mpf(n) / d
    return {
        "pi": mpmath.pi,
        "e": mpmath.e,
        "ln2": mpmath.log(2),
        "sqrt2": mpmath.sqrt(2),
        "sin1": mpmath.sin(1),
        "atan1/3": mpmath.atan(q(1, 3)),
        "cos3/5": mpmath.cos(q(3, 5)),
        "cosF4/F5": mpmath.cos(q(fib(4), fib(5))),
        "cosF2394/F2395": mpmath.cos(mpmath.mpf(fib(2394)) / fib(2395)),
    }


GOLDEN = [
    ("1/3", 30), ("pi", 50), ("e", 50), ("sqrt(2)*sqrt(2)", 30),
    ("sin(pi/6)", 40), ("cos(3/5)", 40), ("ln(2)", 40), ("atan(1)*4", 40),
    ("2^10", 5), ("2^0.5", 40), ("tan(1)", 40), ("asin(1/2)*6", 40),
    ("acos(0)", 40), ("sinh(1)+cosh(1)", 40), ("tanh(2)", 40), ("asinh(1)", 40),
    ("acosh(2)", 40), ("atanh(0.5)", 40), ("(1+1/1000)^1000", 30), ("-1/8", 2),
]


def golden_oracle(expr):
    mpmath.mp.dps = 200
    src = expr.replace("^", "**").replace("ln", "log")
    env = {name: getattr(mpmath, name) for name in
           ("pi", "e", "sqrt", "sin", "cos", "log", "atan", "tan", "asin", "acos",
            "sinh", "cosh", "tanh", "asinh", "acosh", "atanh")}
    # integer literals as mpf so that 1/3 is not floor division or float
    import re
    src = re.sub(r"(\d+(?:\.\d+)?)", r"mpf('\1')", src)
    env["mpf"] = mpmath.mpf
    return eval(src, env)


def within_one_unit(output, oracle_text, digits):
    m = Fraction(output) * 10 ** digits
    return abs(m - Fraction(oracle_text) * 10 ** digits) <= 1


def main():
    values = oracle_values()
    oracle = {name: truncated(v, 1000 + GUARD) for name, v in values.items()}
    (HERE / "oracle_digits.json").write_text(json.dumps(oracle, indent=1) + "\n")

    golden = []
    for expr, digits in GOLDEN:
        out = subprocess.run(
            [sys.executable, "-m", "exact_reals", "eval", "--digits", str(digits), "--", expr],
            capture_output=True, text=True, check=True).stdout.strip()
        ref = truncated(golden_oracle(expr), digits + GUARD)
        if not within_one_unit(out, ref, digits):
            raise SystemExit(f"{expr}: {out} disagrees with oracle {ref}")
        golden.append({"expr": expr, "digits": digits, "output": out, "oracle": ref})
    (HERE / "cli_golden.json").write_text(json.dumps(golden, indent=1) + "\n")


if __name__ == "__main__":
    main()
