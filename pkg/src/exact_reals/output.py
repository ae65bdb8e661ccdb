"""Decimal rendering of real numbers with an error guarantee."""

from dataclasses import dataclass

from .creal import CReal, scale

__all__ = ["DigitOutput", "format_digits"]


@dataclass(frozen=True)
class DigitOutput:
    """A decimal within ``10**-digits`` of the real it was computed from.

    ``mantissa / 10**digits`` is the printed value.
    """

    mantissa: int
    digits: int

    @property
    def negative(self) -> bool:
        return self.mantissa < 0

    @property
    def integer_part(self) -> str:
        return str(abs(self.mantissa) // 10 ** self.digits)

    @property
    def fraction(self) -> str:
        if not self.digits:
            return ""
        return str(abs(self.mantissa) % 10 ** self.digits).zfill(self.digits)

    def __str__(self):
        sign = "-" if self.negative else ""
        if not self.digits:
            return f"{sign}{self.integer_part}"
        return f"{sign}{self.integer_part}.{self.fraction}"

    def raw(self) -> str:
        """Integer-mantissa form, e.g. ``31416x10^-4``."""
        return f"{self.mantissa}x10^-{self.digits}"


def format_digits(x: CReal, digits: int) -> DigitOutput:
    """Round ``x`` to ``digits`` decimal places, correct to within one final unit."""
    if digits < 0:
        raise ValueError("digits must be non-negative")
    # |m - 10**digits * x| <= 1/2 + 1/2
    return DigitOutput(scale(10 ** digits, x).int_approx, digits)
