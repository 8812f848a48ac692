r"""Certified enclosures of the remainders and of the sums of CHA series.

Reduites of even order lie above the remainder :math:`R_{p,q}^{(n)}` and those of odd
order below it, and the two subsequences are adjacent. Hence, any two consecutive
reduites enclose the remainder, and the sum itself follows from

.. math:: S_{p,q} = S_{p,q}^{(n)} + (-1)^{n+1} R_{p,q}^{(n)}.
"""

import math
from fractions import Fraction
from typing import NamedTuple, Optional, Union

from ..core.limits import DEFAULT_LIMITS, Limits
from ..core.series import SeriesParams, alpha, partial_sum
from .convergents import last_convergents


class Enclosure(NamedTuple):
    """A certified interval ``[lo, hi]`` containing the real number named by
    ``target``."""

    lo: Fraction
    """Lower endpoint."""

    hi: Fraction
    """Upper endpoint."""

    target: str
    """Label of the enclosed quantity, e.g., ``"R^(3)"`` or ``"S"``."""

    @property
    def width(self) -> Fraction:
        """Width of the interval."""
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        """Midpoint of the interval."""
        return (self.lo + self.hi) / 2

    def contains(self, x: Union[int, Fraction]) -> bool:
        """Whether ``x`` lies in the (closed) interval."""
        return self.lo <= x <= self.hi

    def issubset(self, other: "Enclosure") -> bool:
        """Whether this interval is contained in ``other``."""
        return other.lo <= self.lo and self.hi <= other.hi

    def intersects(self, other: "Enclosure") -> bool:
        """Whether this interval and ``other`` have at least one point in common."""
        return self.lo <= other.hi and other.lo <= self.hi

    def scaled(self, factor: int) -> "Enclosure":
        """Returns the enclosure of ``factor`` times the target, for a positive integer
        ``factor``, e.g., ``4`` to enclose :math:`\\pi` from :math:`S_{2,1}`."""
        if factor < 1:
            raise ValueError(f"Scaling factor must be positive; got {factor}.")
        if factor == 1:
            return self
        return Enclosure(self.lo * factor, self.hi * factor, f"{factor}*{self.target}")


def remainder_enclosure(
    params: SeriesParams, n: int, m: int, limits: Limits = DEFAULT_LIMITS
) -> Enclosure:
    r"""Encloses the remainder :math:`R_{p,q}^{(n)}` between the reduites of orders
    ``m`` and ``m + 1``.

    Parameters
    ----------
    params : SeriesParams
        Parameters of the series.
    n : int
        Partial-sum order.
    m : int
        Order of the first reduite.
    limits : Limits, optional
        Resource guards; ``m + 1`` cannot exceed ``limits.max_order``.

    Returns
    -------
    Enclosure
        The interval :math:`[\min(\rho_m, \rho_{m+1}), \max(\rho_m, \rho_{m+1})]`, whose
        width is :math:`p^{2m+2} ((m+1)!)^2 / (B_m B_{m+1})`.
    """
    this, succ = last_convergents(params, n, m, 2, limits)
    r0, r1 = this.reduite, succ.reduite
    lo, hi = (r1, r0) if m % 2 == 0 else (r0, r1)
    return Enclosure(lo, hi, f"R^({n})")


def sum_enclosure(
    params: SeriesParams, n: int, m: int, limits: Limits = DEFAULT_LIMITS
) -> Enclosure:
    r"""Encloses the sum :math:`S_{p,q}` by mapping :func:`remainder_enclosure` through
    :math:`x \mapsto S_{p,q}^{(n)} + (-1)^{n+1} x`.

    Parameters
    ----------
    params : SeriesParams
        Parameters of the series.
    n : int
        Partial-sum order.
    m : int
        Order of the first reduite.
    limits : Limits, optional
        Resource guards.

    Returns
    -------
    Enclosure
        The certified interval containing :math:`S_{p,q}`.
    """
    rem = remainder_enclosure(params, n, m, limits)
    s = partial_sum(params, n)
    if n % 2:
        return Enclosure(s + rem.lo, s + rem.hi, "S")
    return Enclosure(s - rem.hi, s - rem.lo, "S")


def error_bracket(
    params: SeriesParams, n: int, m: int, limits: Limits = DEFAULT_LIMITS
) -> tuple[Fraction, Fraction]:
    r"""Computes the exact bracket

    .. math:: |\rho_m - \rho_{m+2}| \le |\rho_m - R_{p,q}^{(n)}| \le
       |\rho_m - \rho_{m+1}|

    of the error of the reduite of order ``m``, which is also the error of the
    acceleration value at ``(m, n)`` w.r.t. :math:`S_{p,q}`.

    Parameters
    ----------
    params : SeriesParams
        Parameters of the series.
    n : int
        Partial-sum order.
    m : int
        Order of the reduite.
    limits : Limits, optional
        Resource guards; ``m + 2`` cannot exceed ``limits.max_order``.

    Returns
    -------
    tuple of 2 Fractions
        The lower and upper bounds on the error.
    """
    c0, c1, c2 = last_convergents(params, n, m, 3, limits)
    num = params.p ** (2 * m + 2) * math.factorial(m + 1) ** 2
    lo = Fraction(alpha(params, n) * num, c0.B * c2.B)
    hi = Fraction(num, c0.B * c1.B)
    return lo, hi


def closed_form_bounds(
    params: SeriesParams, n: int, m: int
) -> tuple[Fraction, Optional[Fraction]]:
    r"""Computes the bounds on the error of the acceleration value at ``(m, n)`` that
    only depend on the parameters, i.e.,

    .. math:: \frac{\alpha p^{2m+2} (m+1)!^2}{(\alpha + pm)^{m+1}
       (\alpha + p(m+2))^{m+3}} \le |u - S_{p,q}| \le \frac{(m+1)!^2}{(2n)^{2m+3} p}.

    These always contain the bracket of :func:`error_bracket`.

    Returns
    -------
    tuple of Fraction and (Fraction or None)
        The lower and upper bounds. The upper bound is ``None`` at ``n = 0``.
    """
    a = alpha(params, n)
    p = params.p
    fact2 = math.factorial(m + 1) ** 2
    lo = Fraction(
        a * p ** (2 * m + 2) * fact2,
        (a + p * m) ** (m + 1) * (a + p * (m + 2)) ** (m + 3),
    )
    hi = Fraction(fact2, (2 * n) ** (2 * m + 3) * p) if n > 0 else None
    return lo, hi
