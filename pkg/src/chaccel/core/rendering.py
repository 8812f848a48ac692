"""Decimal rendering and logarithms of exact rationals.

Values handled by the package can be as small as :math:`10^{-5000}`, far outside the
range of floats, so logarithms and scientific renderings are computed from the integer
numerator and denominator directly."""

import math
import sys
from fractions import Fraction
from typing import Literal, NamedTuple, Union

from .limits import DEFAULT_LIMITS, Limits

# rendering thousands of digits needs the int <-> str conversion limit to be lifted
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

RoundingMode = Literal["round", "truncate"]


class DecimalRendering(NamedTuple):
    """Decimal rendering of an exact rational, i.e., the value ``digits * 10**exponent``
    obtained in the given rounding ``mode``."""

    digits: str
    """Signed integer mantissa, e.g., ``"-250"``."""

    exponent: int
    """Power of ten of the last digit, i.e., minus the number of decimals."""

    mode: RoundingMode
    """Either ``"round"`` (round-half-even) or ``"truncate"`` (towards zero)."""

    def __str__(self) -> str:
        negative = self.digits.startswith("-")
        body = self.digits.lstrip("-")
        decimals = -self.exponent
        if decimals > 0:
            body = body.rjust(decimals + 1, "0")
            body = f"{body[:-decimals]}.{body[-decimals:]}"
        return f"-{body}" if negative else body

    def to_fraction(self) -> Fraction:
        """Returns the exact value represented by this rendering."""
        return Fraction(int(self.digits)) * Fraction(10) ** self.exponent


def to_decimal(
    x: Union[int, Fraction],
    d: int,
    mode: RoundingMode = "round",
    limits: Limits = DEFAULT_LIMITS,
) -> DecimalRendering:
    """Renders ``x`` with ``d`` digits after the decimal point.

    Parameters
    ----------
    x : int or Fraction
        The exact value to render.
    d : int
        Number of decimals.
    mode : {"round", "truncate"}, optional
        Round-half-even or truncation towards zero. By default, ``"round"``.
    limits : Limits, optional
        Resource guards; ``d`` cannot exceed ``limits.max_decimals``.

    Returns
    -------
    DecimalRendering
        The rendering, whose string form is, e.g., ``"0.250"``.

    Raises
    ------
    ValueError
        Raises if ``d`` is negative or the mode is unknown.
    ResourceLimitError
        Raises if ``d`` exceeds the configured maximum.
    """
    if d < 0:
        raise ValueError(f"Number of decimals must be non-negative; got {d}.")
    limits.check_decimals(d)
    x = Fraction(x)
    q, r = divmod(abs(x.numerator) * 10**d, x.denominator)
    if mode == "round":
        twice = 2 * r
        if twice > x.denominator or (twice == x.denominator and q % 2 == 1):
            q += 1
    elif mode != "truncate":
        raise ValueError(f"Unknown rounding mode '{mode}'.")
    sign = "-" if x < 0 and q != 0 else ""
    return DecimalRendering(f"{sign}{q}", -d, mode)


def parse_decimal(text: str) -> Fraction:
    """Parses a decimal (or ``"num/den"`` fraction) string into an exact rational.
    Both ``'.'`` and ``','`` are accepted as decimal separators."""
    return Fraction(text.strip().replace(",", "."))


def floor_log10(x: Union[int, Fraction]) -> int:
    """Computes :math:`\\lfloor \\log_{10} x \\rfloor` exactly for ``x > 0``.

    Raises
    ------
    ValueError
        Raises if ``x`` is not positive.
    """
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"Logarithm of a non-positive number {x}.")
    num, den = x.numerator, x.denominator
    k = math.floor(math.log10(num) - math.log10(den))
    # the float estimate can be off by one near powers of ten
    while not _pow10_le(k, num, den):
        k -= 1
    while _pow10_le(k + 1, num, den):
        k += 1
    return k


def _pow10_le(k: int, num: int, den: int) -> bool:
    """Internal utility checking ``10**k <= num / den`` with integers only."""
    if k >= 0:
        return 10**k * den <= num
    return den <= num * 10 ** (-k)


def precision(err: Union[int, Fraction]) -> int:
    """Number of correct decimals :math:`\\lfloor -\\log_{10} err \\rfloor` given an
    absolute error ``err > 0``; may be negative for errors larger than ``1``."""
    k = floor_log10(err)
    # floor(-y) = -ceil(y), and ceil differs from floor unless err is a power of ten
    return -k if Fraction(10) ** k == Fraction(err) else -k - 1


def log10(x: Union[int, Fraction]) -> float:
    """Base-10 logarithm of a positive rational of any magnitude, as a float."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"Logarithm of a non-positive number {x}.")
    return math.log10(x.numerator) - math.log10(x.denominator)


def format_scientific(x: Union[int, Fraction], digits: int = 6) -> str:
    """Renders ``x`` in scientific notation with ``digits`` significant digits, e.g.,
    ``"1.23457e-1531"``, whatever its magnitude."""
    if digits < 1:
        raise ValueError(f"At least one significant digit is needed; got {digits}.")
    x = Fraction(x)
    if x == 0:
        return "0"
    e = floor_log10(abs(x))
    mantissa = to_decimal(x / Fraction(10) ** e, digits - 1)
    if abs(mantissa.to_fraction()) >= 10:  # rounding carried over, e.g., 9.99 -> 10.0
        e += 1
        mantissa = to_decimal(x / Fraction(10) ** e, digits - 1)
    return f"{mantissa}e{e:+d}"
