r"""Aitken's :math:`\Delta^2` process, which, applied to the partial sums of a CHA
series, reproduces exactly the U sequence of order ``0``."""

from collections.abc import Iterable
from fractions import Fraction
from typing import Union

from ..core.limits import DegenerateTransformError
from ..core.series import SeriesParams, partial_sums_at

RationalLike = Union[int, Fraction]


def aitken_delta2(x0: RationalLike, x1: RationalLike, x2: RationalLike) -> Fraction:
    """Computes the Aitken extrapolation of three consecutive terms of a sequence, in
    the quotient form ``(x2 * x0 - x1**2) / ((x2 - x1) - (x1 - x0))``.

    Parameters
    ----------
    x0, x1, x2 : int or Fraction
        Three consecutive terms.

    Returns
    -------
    Fraction
        The exact extrapolated value.

    Raises
    ------
    DegenerateTransformError
        Raises if the second difference of the terms is zero.
    """
    x0, x1, x2 = Fraction(x0), Fraction(x1), Fraction(x2)
    second_difference = (x2 - x1) - (x1 - x0)
    if second_difference == 0:
        raise DegenerateTransformError(
            f"Second difference of ({x0}, {x1}, {x2}) is zero."
        )
    return (x2 * x0 - x1 * x1) / second_difference


def aitken_sequence(params: SeriesParams, ns: Iterable[int]) -> list[Fraction]:
    """Applies :func:`aitken_delta2` to the partial sums of orders ``n - 2``, ``n - 1``
    and ``n``, for each ``n`` in ``ns``.

    Raises
    ------
    ValueError
        Raises if ``ns`` is empty or any order is smaller than ``2``.
    """
    ns = list(ns)
    if not ns:
        raise ValueError("`ns` must contain at least one order.")
    if min(ns) < 2:
        raise ValueError(f"Aitken's process needs orders n >= 2; got {min(ns)}.")
    needed = sorted({k for n in ns for k in (n - 2, n - 1, n)})
    sums = dict(zip(needed, partial_sums_at(params, needed)))
    return [aitken_delta2(sums[n - 2], sums[n - 1], sums[n]) for n in ns]
